#include "oracles.hpp"

#include <algorithm>

namespace matchpoly::testing {

namespace {

// Enumerate matchings by picking the lowest unsaturated vertex and trying
// every way to cover or skip it.
bool can_saturate_all(const Graph& g, std::vector<bool>& used, int from) {
    int u = -1;
    for (int v = from; v < g.vertex_count(); ++v)
        if (!used[static_cast<std::size_t>(v)]) {
            u = v;
            break;
        }
    if (u < 0) return true;
    for (int w : g.neighbors(u)) {
        if (used[static_cast<std::size_t>(w)]) continue;
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(w)] = true;
        if (can_saturate_all(g, used, u + 1)) return true;
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(w)] = false;
    }
    return false;
}

bool connected_subset(const Graph& g, const std::vector<int>& vertices) {
    if (vertices.empty()) return true;
    std::vector<bool> in_set(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : vertices) in_set[static_cast<std::size_t>(v)] = true;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<int> stack{vertices.front()};
    seen[static_cast<std::size_t>(vertices.front())] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (!in_set[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == vertices.size();
}

} // namespace

bool oracle_has_perfect_matching(const Graph& g) {
    if (g.vertex_count() % 2 != 0) return false;
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    return can_saturate_all(g, used, 0);
}

bool oracle_is_factor_critical(const Graph& g) {
    if (g.vertex_count() % 2 == 0) return false;
    for (int u = 0; u < g.vertex_count(); ++u) {
        std::vector<int> rest;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (v != u) rest.push_back(v);
        auto [sub, labels] = g.induced_subgraph(rest);
        (void)labels;
        if (!oracle_has_perfect_matching(sub)) return false;
    }
    return true;
}

std::vector<OddStructure> oracle_odd_structures(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<OddStructure> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if (mask & (std::uint64_t{1} << v)) subset.push_back(v);
        if (subset.size() < 3 || subset.size() % 2 == 0) continue;

        auto [sub, labels] = g.induced_subgraph(subset);
        (void)labels;
        // 2-connected: connected, and still connected after any deletion.
        std::vector<int> all(subset.size());
        for (std::size_t i = 0; i < subset.size(); ++i) all[i] = static_cast<int>(i);
        if (!connected_subset(sub, all)) continue;
        bool two_connected = true;
        for (std::size_t drop = 0; drop < subset.size() && two_connected; ++drop) {
            std::vector<int> rest;
            for (std::size_t i = 0; i < subset.size(); ++i)
                if (i != drop) rest.push_back(static_cast<int>(i));
            if (!connected_subset(sub, rest)) two_connected = false;
        }
        if (!two_connected) continue;
        if (!oracle_is_factor_critical(sub)) continue;
        out.push_back({subset, g.induced_edge_indices(subset)});
    }
    std::sort(out.begin(), out.end(),
              [](const OddStructure& a, const OddStructure& b) { return a.vertices < b.vertices; });
    return out;
}

std::vector<std::vector<int>> box_scan_points(const Graph& g, const InequalitySystem& sys, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> x(static_cast<std::size_t>(g.edge_count()), 0);
    const int m = g.edge_count();
    while (true) {
        if (satisfies_system(sys, x, t)) out.push_back(x);
        int i = m - 1;
        while (i >= 0 && x[static_cast<std::size_t>(i)] == t) {
            x[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++x[static_cast<std::size_t>(i)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph random_edge_subgraph(const Graph& g, int keep_percent, std::uint64_t seed) {
    std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges())
        if (static_cast<int>(next() % 100) < keep_percent) edges.emplace_back(e.u, e.v);
    return Graph(g.vertex_count(), edges);
}

} // namespace matchpoly::testing
