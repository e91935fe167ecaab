#include "matchpoly/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

#include "matchpoly/errors.hpp"

namespace matchpoly {

InequalitySystem inequality_system(const Graph& g, const EnumerationLimits& limits) {
    InequalitySystem sys;
    sys.edge_count = g.edge_count();
    for (int u : essential_vertices(g)) sys.vertex_constraints.push_back({u, g.incident_edges(u)});
    sys.odd_constraints = odd_structures(g, limits);
    return sys;
}

bool satisfies_system(const InequalitySystem& sys, const std::vector<int>& weights, int t) {
    if (static_cast<int>(weights.size()) != sys.edge_count)
        throw InputError("weight vector length mismatch");
    for (int w : weights)
        if (w < 0) return false;
    for (const VertexConstraint& vc : sys.vertex_constraints) {
        long long sum = 0;
        for (int ei : vc.edges) sum += weights[static_cast<std::size_t>(ei)];
        if (sum > t) return false;
    }
    for (const OddStructure& u : sys.odd_constraints) {
        long long sum = 0;
        for (int ei : u.edge_indices) sum += weights[static_cast<std::size_t>(ei)];
        if (sum > static_cast<long long>(t) * ((static_cast<long long>(u.vertices.size()) - 1) / 2))
            return false;
    }
    return true;
}

bool is_t_matching(const Graph& g, const std::vector<OddStructure>& structures,
                   const EdgeWeighting& x, int t) {
    if (static_cast<int>(x.weights.size()) != g.edge_count())
        throw InputError("weight vector length mismatch");
    if (t < 0) throw InputError("dilation level must be nonnegative");
    for (int w : x.weights)
        if (w < 0) return false;
    for (int u = 0; u < g.vertex_count(); ++u) {
        long long sum = 0;
        for (int ei : g.incident_edges(u)) sum += x.weights[static_cast<std::size_t>(ei)];
        if (sum > t) return false;
    }
    for (const OddStructure& u : structures) {
        long long sum = 0;
        for (int ei : u.edge_indices) sum += x.weights[static_cast<std::size_t>(ei)];
        if (sum > static_cast<long long>(t) * ((static_cast<long long>(u.vertices.size()) - 1) / 2))
            return false;
    }
    return true;
}

bool is_t_matching(const Graph& g, const EdgeWeighting& x, int t) {
    return is_t_matching(g, odd_structures(g), x, t);
}

bool is_matching_vector(const Graph& g, const std::vector<int>& weights) {
    if (static_cast<int>(weights.size()) != g.edge_count())
        throw InputError("weight vector length mismatch");
    for (int w : weights)
        if (w != 0 && w != 1) return false;
    for (int u = 0; u < g.vertex_count(); ++u) {
        int sum = 0;
        for (int ei : g.incident_edges(u)) sum += weights[static_cast<std::size_t>(ei)];
        if (sum > 1) return false;
    }
    return true;
}

std::vector<EdgeWeighting> enumerate_matchings(const Graph& g) {
    std::vector<EdgeWeighting> out;
    std::vector<int> weights(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    // Lexicographic on weight vectors: weight 0 explored before weight 1.
    auto dfs = [&](auto&& self, int i) -> void {
        if (i == g.edge_count()) {
            out.push_back({weights, 1});
            return;
        }
        self(self, i + 1);
        const Edge e = g.edge(i);
        if (!used[static_cast<std::size_t>(e.u)] && !used[static_cast<std::size_t>(e.v)]) {
            used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = true;
            weights[static_cast<std::size_t>(i)] = 1;
            self(self, i + 1);
            weights[static_cast<std::size_t>(i)] = 0;
            used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = false;
        }
    };
    dfs(dfs, 0);
    std::sort(out.begin(), out.end(),
              [](const EdgeWeighting& a, const EdgeWeighting& b) { return a.weights < b.weights; });
    return out;
}

namespace {

// Shared state for the branch-and-prune walk over edge weights in canonical
// order. Feasible prefixes always extend by zeros, so no dead branches.
struct DilationWalk {
    const Graph& g;
    int t;
    std::vector<int> vertex_slack;             // t - current vertex weight
    std::vector<long long> structure_slack;    // scaled bound - current weight
    std::vector<std::vector<int>> edge_structs; // per edge: structure positions

    DilationWalk(const Graph& graph, const std::vector<OddStructure>& structures, int level)
        : g(graph), t(level) {
        vertex_slack.assign(static_cast<std::size_t>(g.vertex_count()), t);
        edge_structs.assign(static_cast<std::size_t>(g.edge_count()), {});
        structure_slack.reserve(structures.size());
        for (std::size_t si = 0; si < structures.size(); ++si) {
            const OddStructure& u = structures[si];
            structure_slack.push_back(static_cast<long long>(t) *
                                      ((static_cast<long long>(u.vertices.size()) - 1) / 2));
            for (int ei : u.edge_indices)
                edge_structs[static_cast<std::size_t>(ei)].push_back(static_cast<int>(si));
        }
    }

    int upper_bound(int edge) const {
        const Edge e = g.edge(edge);
        long long ub = std::min(vertex_slack[static_cast<std::size_t>(e.u)],
                                vertex_slack[static_cast<std::size_t>(e.v)]);
        for (int si : edge_structs[static_cast<std::size_t>(edge)])
            ub = std::min(ub, structure_slack[static_cast<std::size_t>(si)]);
        return static_cast<int>(ub);
    }

    void apply(int edge, int delta) {
        const Edge e = g.edge(edge);
        vertex_slack[static_cast<std::size_t>(e.u)] -= delta;
        vertex_slack[static_cast<std::size_t>(e.v)] -= delta;
        for (int si : edge_structs[static_cast<std::size_t>(edge)])
            structure_slack[static_cast<std::size_t>(si)] -= delta;
    }
};

std::uint64_t count_suffix(DilationWalk& walk, int edge, Budget& budget) {
    const int last = walk.g.edge_count() - 1;
    if (edge > last) return 1; // edgeless graph
    budget.tick();
    if (edge == last) return static_cast<std::uint64_t>(walk.upper_bound(edge)) + 1;
    std::uint64_t total = 0;
    const int ub = walk.upper_bound(edge);
    for (int w = 0; w <= ub; ++w) {
        if (w > 0) walk.apply(edge, 1);
        total += count_suffix(walk, edge + 1, budget);
    }
    if (ub > 0) walk.apply(edge, -ub);
    return total;
}

void collect_prefixes(DilationWalk& walk, int edge, int depth, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
    if (edge == depth) {
        out.push_back(prefix);
        return;
    }
    const int ub = walk.upper_bound(edge);
    for (int w = 0; w <= ub; ++w) {
        if (w > 0) walk.apply(edge, 1);
        prefix.push_back(w);
        collect_prefixes(walk, edge + 1, depth, prefix, out);
        prefix.pop_back();
    }
    if (ub > 0) walk.apply(edge, -ub);
}

} // namespace

std::uint64_t count_t_matchings(const Graph& g, const std::vector<OddStructure>& structures,
                                int t, Budget budget, bool parallel) {
    if (t < 0) throw InputError("dilation level must be nonnegative");
    if (t == 0 || g.edge_count() == 0) return 1;

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const bool split = parallel && hw > 1 && g.edge_count() >= 6 && t >= 2;
    if (!split) {
        DilationWalk walk(g, structures, t);
        return count_suffix(walk, 0, budget);
    }

    // Fan out over feasible prefixes of the first few edges; each task replays
    // its prefix and counts the remaining suffix. Addition is exact, so the
    // result does not depend on scheduling.
    const int depth = std::min(3, g.edge_count() - 1);
    std::vector<std::vector<int>> prefixes;
    {
        DilationWalk walk(g, structures, t);
        std::vector<int> prefix;
        collect_prefixes(walk, 0, depth, prefix, prefixes);
    }
    std::atomic<std::size_t> next_prefix{0};
    const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(prefixes.size()));
    std::vector<std::future<std::uint64_t>> tasks;
    tasks.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&]() {
            DilationWalk walk(g, structures, t);
            Budget local = budget;
            std::uint64_t subtotal = 0;
            for (;;) {
                const std::size_t idx = next_prefix.fetch_add(1);
                if (idx >= prefixes.size()) break;
                const std::vector<int>& prefix = prefixes[idx];
                for (int i = 0; i < depth; ++i)
                    walk.apply(i, prefix[static_cast<std::size_t>(i)]);
                subtotal += count_suffix(walk, depth, local);
                for (int i = 0; i < depth; ++i)
                    walk.apply(i, -prefix[static_cast<std::size_t>(i)]);
            }
            return subtotal;
        }));
    }
    std::uint64_t total = 0;
    std::exception_ptr failure;
    for (auto& task : tasks) {
        try {
            total += task.get();
        } catch (...) {
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return total;
}

namespace {

void enumerate_suffix(DilationWalk& walk, int edge, std::vector<int>& weights, int t,
                      Budget& budget, std::vector<EdgeWeighting>& out) {
    budget.tick();
    if (edge == walk.g.edge_count()) {
        out.push_back({weights, t});
        return;
    }
    const int ub = walk.upper_bound(edge);
    for (int w = 0; w <= ub; ++w) {
        if (w > 0) walk.apply(edge, 1);
        weights[static_cast<std::size_t>(edge)] = w;
        enumerate_suffix(walk, edge + 1, weights, t, budget, out);
    }
    weights[static_cast<std::size_t>(edge)] = 0;
    if (ub > 0) walk.apply(edge, -ub);
}

} // namespace

std::vector<EdgeWeighting> enumerate_t_matchings(const Graph& g,
                                                 const std::vector<OddStructure>& structures,
                                                 int t, Budget budget) {
    if (t < 0) throw InputError("dilation level must be nonnegative");
    std::vector<EdgeWeighting> out;
    if (g.edge_count() == 0) {
        out.push_back({{}, t});
        return out;
    }
    DilationWalk walk(g, structures, t);
    std::vector<int> weights(static_cast<std::size_t>(g.edge_count()), 0);
    enumerate_suffix(walk, 0, weights, t, budget, out);
    return out;
}

std::vector<EdgeWeighting> enumerate_t_matchings(const Graph& g, int t, Budget budget) {
    return enumerate_t_matchings(g, odd_structures(g), t, budget);
}

WeightAnalysis analyze(const Graph& g, const std::vector<OddStructure>& structures,
                       const EdgeWeighting& x, int t) {
    if (!is_t_matching(g, structures, x, t))
        throw InputError("analyze requires a t-matching");
    WeightAnalysis a;
    a.level = t;
    a.vertex_weight.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int u = 0; u < g.vertex_count(); ++u) {
        int sum = 0;
        for (int ei : g.incident_edges(u)) sum += x.weights[static_cast<std::size_t>(ei)];
        a.vertex_weight[static_cast<std::size_t>(u)] = sum;
        if (sum == t) a.tight_vertices.push_back(u);
    }
    for (std::size_t si = 0; si < structures.size(); ++si) {
        const OddStructure& u = structures[si];
        long long sum = 0;
        for (int ei : u.edge_indices) sum += x.weights[static_cast<std::size_t>(ei)];
        const long long half = (static_cast<long long>(u.vertices.size()) - 1) / 2;
        a.structure_weight.push_back(sum);
        a.structure_index.push_back(sum - static_cast<long long>(t - 1) * half);
        if (a.structure_index.back() > 0) a.tight_structures.push_back(static_cast<int>(si));
    }
    a.degenerate = false;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (x.weights[static_cast<std::size_t>(i)] > 0)
            a.support.push_back(i);
        else
            a.degenerate = true;
    }
    return a;
}

EdgeWeighting restrict_weighting(const Graph& g, const Graph& h, const EdgeWeighting& x) {
    if (static_cast<int>(x.weights.size()) != g.edge_count())
        throw InputError("weight vector length mismatch");
    EdgeWeighting out;
    out.level = x.level;
    out.weights.reserve(static_cast<std::size_t>(h.edge_count()));
    for (const Edge& e : h.edges()) {
        const int gi = g.edge_index(e.u, e.v);
        if (gi < 0) throw InputError("subgraph edge not present in host graph");
        out.weights.push_back(x.weights[static_cast<std::size_t>(gi)]);
    }
    return out;
}

} // namespace matchpoly
