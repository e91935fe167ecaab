#include "matchpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

#include "matchpoly/errors.hpp"

namespace matchpoly {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list)
    : vertex_count_(vertex_count) {
    if (vertex_count < 0)
        throw InputError("vertex count must be nonnegative");
    edges_.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        if (a == b)
            throw InputError("loop edge rejected: " + std::to_string(a));
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            throw InputError("edge endpoint out of range: " + std::to_string(a) + " " +
                             std::to_string(b));
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InputError("duplicate edge rejected");

    adjacency_.assign(static_cast<std::size_t>(vertex_count), {});
    incident_.assign(static_cast<std::size_t>(vertex_count), {});
    for (int i = 0; i < edge_count(); ++i) {
        const Edge e = edges_[static_cast<std::size_t>(i)];
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
        incident_[static_cast<std::size_t>(e.u)].push_back(i);
        incident_[static_cast<std::size_t>(e.v)].push_back(i);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::edge_index(int u, int v) const {
    if (u == v || !has_vertex(u) || !has_vertex(v)) return -1;
    const Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it != edges_.end() && *it == key) return static_cast<int>(it - edges_.begin());
    return -1;
}

std::pair<Graph, std::vector<int>> Graph::induced_subgraph(const std::vector<int>& vertices) const {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> position(static_cast<std::size_t>(vertex_count_), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (!has_vertex(sorted[i]))
            throw InputError("induced subgraph vertex out of range");
        position[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> sub_edges;
    for (const Edge& e : edges_) {
        const int pu = position[static_cast<std::size_t>(e.u)];
        const int pv = position[static_cast<std::size_t>(e.v)];
        if (pu >= 0 && pv >= 0) sub_edges.emplace_back(pu, pv);
    }
    return {Graph(static_cast<int>(sorted.size()), sub_edges), sorted};
}

Graph Graph::without_vertex(int u) const {
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(vertex_count_ - 1));
    for (int w = 0; w < vertex_count_; ++w)
        if (w != u) keep.push_back(w);
    return induced_subgraph(keep).first;
}

Graph Graph::edge_subgraph(const std::vector<bool>& keep) const {
    if (static_cast<int>(keep.size()) != edge_count())
        throw InputError("edge mask size mismatch");
    std::vector<std::pair<int, int>> kept;
    for (int i = 0; i < edge_count(); ++i)
        if (keep[static_cast<std::size_t>(i)])
            kept.emplace_back(edges_[static_cast<std::size_t>(i)].u,
                              edges_[static_cast<std::size_t>(i)].v);
    return Graph(vertex_count_, kept);
}

std::vector<int> Graph::induced_edge_indices(const std::vector<int>& vertices) const {
    std::vector<bool> in_set(static_cast<std::size_t>(vertex_count_), false);
    for (int u : vertices) {
        if (!has_vertex(u))
            throw InputError("vertex out of range");
        in_set[static_cast<std::size_t>(u)] = true;
    }
    std::vector<int> result;
    for (int i = 0; i < edge_count(); ++i) {
        const Edge e = edges_[static_cast<std::size_t>(i)];
        if (in_set[static_cast<std::size_t>(e.u)] && in_set[static_cast<std::size_t>(e.v)])
            result.push_back(i);
    }
    return result;
}

// ---- named families ------------------------------------------------------

Graph make_path(int n) {
    if (n < 1)
        throw InputError("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph make_cycle(int n) {
    if (n < 3)
        throw InputError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph make_wheel(int n) {
    if (n < 4)
        throw InputError("wheel needs at least 4 vertices");
    const int rim = n - 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < rim; ++i) {
        edges.emplace_back(i, (i + 1) % rim);
        edges.emplace_back(i, rim); // spoke to the center, vertex n-1
    }
    return Graph(n, edges);
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2)
        throw InputError("complete multipartite graph needs at least 2 parts");
    for (int p : parts)
        if (p < 1)
            throw InputError("each part needs at least 1 vertex");
    std::vector<int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i)
        part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
    const int n = static_cast<int>(part_of.size());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)])
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph make_complete(int n) {
    return make_complete_multipartite(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Graph make_chortling_c5() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(1, 3);
    edges.emplace_back(2, 4);
    return Graph(5, edges);
}

Graph make_chorded_c5() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(1, 4);
    return Graph(5, edges);
}

Graph make_family(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
    case Kind::path:
        if (spec.params.size() != 1) throw InputError("path takes one parameter");
        return make_path(spec.params[0]);
    case Kind::cycle:
        if (spec.params.size() != 1) throw InputError("cycle takes one parameter");
        return make_cycle(spec.params[0]);
    case Kind::wheel:
        if (spec.params.size() != 1) throw InputError("wheel takes one parameter");
        return make_wheel(spec.params[0]);
    case Kind::complete_multipartite:
        return make_complete_multipartite(spec.params);
    case Kind::chortling_c5:
        return make_chortling_c5();
    case Kind::chorded_c5:
        return make_chorded_c5();
    }
    throw InputError("unknown family");
}

// ---- structural predicates -----------------------------------------------

bool is_essential(const Graph& g, int u) {
    const int d = g.degree(u);
    if (d >= 3) return true;
    if (d == 2) {
        const auto& nbrs = g.neighbors(u);
        return !g.has_edge(nbrs[0], nbrs[1]);
    }
    if (d == 1) return g.degree(g.neighbors(u)[0]) == 1;
    return false;
}

std::vector<int> essential_vertices(const Graph& g) {
    std::vector<int> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (is_essential(g, u)) out.push_back(u);
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

namespace {

// Iterative Hopcroft-Tarjan lowlink walk shared by blocks() and
// is_two_connected().
struct BlockWalker {
    const Graph& g;
    std::vector<int> disc, low, parent;
    std::vector<int> edge_stack; // edge indices
    std::vector<std::vector<int>> block_edge_sets;
    std::vector<bool> is_cut;
    int timer = 0;

    explicit BlockWalker(const Graph& graph)
        : g(graph),
          disc(static_cast<std::size_t>(graph.vertex_count()), -1),
          low(static_cast<std::size_t>(graph.vertex_count()), -1),
          parent(static_cast<std::size_t>(graph.vertex_count()), -1),
          is_cut(static_cast<std::size_t>(graph.vertex_count()), false) {}

    void run() {
        for (int root = 0; root < g.vertex_count(); ++root)
            if (disc[static_cast<std::size_t>(root)] == -1) dfs(root);
    }

    void dfs(int root) {
        struct Frame {
            int u;
            std::size_t next_incident = 0;
        };
        std::vector<Frame> stack{{root}};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        int root_children = 0;

        while (!stack.empty()) {
            Frame& frame = stack.back();
            const int u = frame.u;
            const auto& inc = g.incident_edges(u);
            if (frame.next_incident < inc.size()) {
                const int ei = inc[frame.next_incident++];
                const Edge e = g.edge(ei);
                const int w = e.u == u ? e.v : e.u;
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    parent[static_cast<std::size_t>(w)] = u;
                    edge_stack.push_back(ei);
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    if (u == root) ++root_children;
                    stack.push_back({w});
                } else if (w != parent[static_cast<std::size_t>(u)] &&
                           disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(u)]) {
                    edge_stack.push_back(ei);
                    low[static_cast<std::size_t>(u)] =
                        std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                const int p = stack.back().u;
                low[static_cast<std::size_t>(p)] =
                    std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(u)]);
                if (low[static_cast<std::size_t>(u)] >= disc[static_cast<std::size_t>(p)]) {
                    // p closes a block; pop its edges.
                    std::vector<int> member_edges;
                    const int tree_edge = g.edge_index(p, u);
                    while (!edge_stack.empty()) {
                        const int ei = edge_stack.back();
                        edge_stack.pop_back();
                        member_edges.push_back(ei);
                        if (ei == tree_edge) break;
                    }
                    block_edge_sets.push_back(std::move(member_edges));
                    if (p != root || root_children > 1)
                        is_cut[static_cast<std::size_t>(p)] = true;
                }
            }
        }
    }
};

} // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockWalker walker(g);
    walker.run();

    BlockDecomposition out;
    for (auto& member_edges : walker.block_edge_sets) {
        std::sort(member_edges.begin(), member_edges.end());
        std::set<int> vertex_set;
        for (int ei : member_edges) {
            vertex_set.insert(g.edge(ei).u);
            vertex_set.insert(g.edge(ei).v);
        }
        out.blocks.emplace_back(vertex_set.begin(), vertex_set.end());
        out.block_edges.push_back(std::move(member_edges));
    }
    // Deterministic: order blocks by smallest contained edge index.
    std::vector<std::size_t> order(out.blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return out.block_edges[a].front() < out.block_edges[b].front();
    });
    BlockDecomposition sorted;
    for (std::size_t i : order) {
        sorted.blocks.push_back(std::move(out.blocks[i]));
        sorted.block_edges.push_back(std::move(out.block_edges[i]));
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        if (walker.is_cut[static_cast<std::size_t>(u)]) sorted.cut_vertices.push_back(u);
    return sorted;
}

bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    if (!is_connected(g)) return false;
    BlockWalker walker(g);
    walker.run();
    for (bool cut : walker.is_cut)
        if (cut) return false;
    // Connected with no cut vertices; rule out isolated-vertex degeneracies.
    for (int u = 0; u < g.vertex_count(); ++u)
        if (g.degree(u) == 0) return false;
    return true;
}

bool has_perfect_matching(const Graph& g) {
    const int n = g.vertex_count();
    if (n % 2 != 0) return false;
    if (n == 0) return true;
    if (n > 26)
        throw InputError("perfect matching DP capped at 26 vertices");
    // match[s]: vertex set s (bitmask) admits a perfect matching. The lowest
    // set vertex is matched against each neighbor in s.
    const std::size_t full = std::size_t{1} << n;
    std::vector<char> match(full, 0);
    match[0] = 1;
    for (std::size_t s = 1; s < full; ++s) {
        const int u = std::countr_zero(s);
        for (int w : g.neighbors(u)) {
            const std::size_t bit = std::size_t{1} << w;
            if ((s & bit) && w != u && match[s & ~(std::size_t{1} << u) & ~bit]) {
                match[s] = 1;
                break;
            }
        }
    }
    return match[full - 1] != 0;
}

bool is_factor_critical(const Graph& g) {
    const int n = g.vertex_count();
    if (n % 2 == 0) return false;
    for (int u = 0; u < n; ++u)
        if (!has_perfect_matching(g.without_vertex(u))) return false;
    return true;
}

Graph line_graph(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.edge_count(); ++i)
        for (int j = i + 1; j < g.edge_count(); ++j) {
            const Edge a = g.edge(i);
            const Edge b = g.edge(j);
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) edges.emplace_back(i, j);
        }
    return Graph(g.edge_count(), edges);
}

BipartiteResult is_bipartite(const Graph& g) {
    BipartiteResult result;
    const int n = g.vertex_count();
    result.coloring.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);

    for (int root = 0; root < n; ++root) {
        if (result.coloring[static_cast<std::size_t>(root)] != -1) continue;
        result.coloring[static_cast<std::size_t>(root)] = 0;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int w : g.neighbors(u)) {
                if (result.coloring[static_cast<std::size_t>(w)] == -1) {
                    result.coloring[static_cast<std::size_t>(w)] =
                        1 - result.coloring[static_cast<std::size_t>(u)];
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                } else if (result.coloring[static_cast<std::size_t>(w)] ==
                           result.coloring[static_cast<std::size_t>(u)]) {
                    // Same-color edge closes an odd cycle through the BFS tree.
                    std::vector<int> up, wp;
                    for (int a = u; a != -1; a = parent[static_cast<std::size_t>(a)]) up.push_back(a);
                    for (int b = w; b != -1; b = parent[static_cast<std::size_t>(b)]) wp.push_back(b);
                    std::reverse(up.begin(), up.end());
                    std::reverse(wp.begin(), wp.end());
                    std::size_t common = 0;
                    while (common + 1 < up.size() && common + 1 < wp.size() &&
                           up[common + 1] == wp[common + 1])
                        ++common;
                    std::vector<int> cycle(up.begin() + static_cast<std::ptrdiff_t>(common), up.end());
                    for (std::size_t i = wp.size(); i-- > common;) cycle.push_back(wp[i]);
                    result.bipartite = false;
                    result.odd_cycle = std::move(cycle);
                    result.coloring.clear();
                    return result;
                }
            }
        }
    }
    result.bipartite = true;
    return result;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map,
                        std::vector<bool>& used, int next) {
    const int n = a.vertex_count();
    if (next == n) return true;
    for (int candidate = 0; candidate < n; ++candidate) {
        if (used[static_cast<std::size_t>(candidate)]) continue;
        if (a.degree(next) != b.degree(candidate)) continue;
        bool ok = true;
        for (int prior = 0; prior < next && ok; ++prior)
            if (a.has_edge(prior, next) != b.has_edge(map[static_cast<std::size_t>(prior)], candidate))
                ok = false;
        if (!ok) continue;
        map[static_cast<std::size_t>(next)] = candidate;
        used[static_cast<std::size_t>(candidate)] = true;
        if (extend_isomorphism(a, b, map, used, next + 1)) return true;
        used[static_cast<std::size_t>(candidate)] = false;
    }
    return false;
}

} // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> deg_a, deg_b;
    for (int u = 0; u < a.vertex_count(); ++u) deg_a.push_back(a.degree(u));
    for (int u = 0; u < b.vertex_count(); ++u) deg_b.push_back(b.degree(u));
    std::sort(deg_a.begin(), deg_a.end());
    std::sort(deg_b.begin(), deg_b.end());
    if (deg_a != deg_b) return false;
    std::vector<int> map(static_cast<std::size_t>(a.vertex_count()), -1);
    std::vector<bool> used(static_cast<std::size_t>(a.vertex_count()), false);
    return extend_isomorphism(a, b, map, used, 0);
}

} // namespace matchpoly
