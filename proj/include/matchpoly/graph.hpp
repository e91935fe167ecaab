#ifndef MATCHPOLY_GRAPH_HPP
#define MATCHPOLY_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace matchpoly {

// Undirected edge with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simple graph. Edges are stored in canonical order (lexicographic by
// (min endpoint, max endpoint)); the position of an edge in edges() is its
// index, and every weight vector in this library is indexed the same way.
class Graph {
public:
    Graph() = default;

    // Rejects loops, duplicate edges and out-of-range endpoints.
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    Edge edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

    // Sorted neighbor list.
    const std::vector<int>& neighbors(int u) const { return adjacency_[static_cast<std::size_t>(u)]; }
    // iota(u): indices of edges incident to u, ascending.
    const std::vector<int>& incident_edges(int u) const { return incident_[static_cast<std::size_t>(u)]; }

    int degree(int u) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(u)].size()); }
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    // -1 when the pair is not an edge.
    int edge_index(int u, int v) const;

    bool has_vertex(int u) const { return u >= 0 && u < vertex_count_; }

    // Subgraph induced by `vertices`, relabeled 0..k-1 in the order given by
    // the sorted vertex set. The returned mapping sends new labels to old.
    std::pair<Graph, std::vector<int>> induced_subgraph(const std::vector<int>& vertices) const;

    // Graph minus one vertex (relabeled).
    Graph without_vertex(int u) const;

    // Edge subgraph on the same vertex set; `keep[i]` selects edge i.
    Graph edge_subgraph(const std::vector<bool>& keep) const;

    // Indices (into this graph's edge list) of the edges with both endpoints
    // inside `vertices`; `vertices` need not be sorted.
    std::vector<int> induced_edge_indices(const std::vector<int>& vertices) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::vector<int>> incident_;
};

// ---- named families ------------------------------------------------------

Graph make_path(int n);
Graph make_cycle(int n);
// Wheel W_n: rim vertices 0..n-2 arranged in a cycle, center vertex n-1.
Graph make_wheel(int n);
Graph make_complete_multipartite(const std::vector<int>& parts);
Graph make_complete(int n);
// C'_5: the 5-cycle 0-1-2-3-4 plus chords {1,3} and {2,4}.
Graph make_chortling_c5();
// C*_5: the 5-cycle 0-1-2-3-4 plus the single chord {1,4}.
Graph make_chorded_c5();

struct FamilySpec {
    enum class Kind { path, cycle, wheel, complete_multipartite, chortling_c5, chorded_c5 };
    Kind kind;
    std::vector<int> params;
};

Graph make_family(const FamilySpec& spec);

// ---- structural predicates -----------------------------------------------

// Essential vertices: degree >= 3, or degree 2 with non-adjacent neighbors,
// or degree 1 with a degree-1 neighbor.
std::vector<int> essential_vertices(const Graph& g);
bool is_essential(const Graph& g, int u);

bool is_connected(const Graph& g);
bool is_two_connected(const Graph& g);

// Perfect matching existence, exact (bitmask DP; intended for |V| <= ~24).
bool has_perfect_matching(const Graph& g);

// True iff g minus any one vertex has a perfect matching. A single vertex is
// factor-critical; any even vertex count is not.
bool is_factor_critical(const Graph& g);

struct BlockDecomposition {
    // Vertex sets, each inducing a maximal 2-connected subgraph or a bridge,
    // ordered by their smallest contained edge index.
    std::vector<std::vector<int>> blocks;
    // Edge indices per block (same order); these partition the edge set.
    std::vector<std::vector<int>> block_edges;
    std::vector<int> cut_vertices;
};

BlockDecomposition blocks(const Graph& g);

Graph line_graph(const Graph& g);

struct BipartiteResult {
    bool bipartite = false;
    // Proper 2-coloring when bipartite (one color per vertex).
    std::vector<int> coloring;
    // Odd closed walk witness when not (first == last vertex).
    std::vector<int> odd_cycle;
};

BipartiteResult is_bipartite(const Graph& g);

// Exact isomorphism test by backtracking; intended for small graphs.
bool isomorphic(const Graph& a, const Graph& b);

} // namespace matchpoly

#endif
