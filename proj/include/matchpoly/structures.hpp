#ifndef MATCHPOLY_STRUCTURES_HPP
#define MATCHPOLY_STRUCTURES_HPP

#include <cstdint>
#include <vector>

#include "matchpoly/budget.hpp"
#include "matchpoly/graph.hpp"

namespace matchpoly {

// A 2-connected induced factor-critical subgraph, recorded as a sorted vertex
// subset of the host graph plus the edge indices it induces there. Odd vertex
// count >= 3 always.
struct OddStructure {
    std::vector<int> vertices;
    std::vector<int> edge_indices;

    friend bool operator==(const OddStructure&, const OddStructure&) = default;
};

struct EnumerationLimits {
    int vertex_cap = 20;
    // Odd subsets examined before giving up with a BudgetError.
    std::uint64_t subset_budget = std::uint64_t{1} << 24;
};

// All odd structures with 3..vertex_cap vertices, ordered by vertex set
// (lexicographically). Exhaustive within the cap.
std::vector<OddStructure> odd_structures(const Graph& g, const EnumerationLimits& limits = {});

// ---- slices of wheel subgraphs ---------------------------------------------

// A 2-connected induced subgraph of a wheel subgraph that contains the center.
// `rim` walks the boundary O(S) along the outer cycle; when the boundary is
// the whole outer cycle, boundary_cycle is set and rim starts at vertex 0.
struct Slice {
    std::vector<int> rim;
    bool boundary_cycle = false;

    // |S| = rim vertices plus the center.
    int size() const { return static_cast<int>(rim.size()) + 1; }
    bool odd() const { return size() % 2 == 1; }

    friend bool operator==(const Slice&, const Slice&) = default;
};

enum class PairKind { almost_disjoint, somewhat_disjoint, interlocking };

// Requires h to be a subgraph of W_n with the wheel's vertex indexing
// (rim 0..n-2, center n-1). Throws InputError otherwise.
std::vector<Slice> slices(const Graph& h, int n);

PairKind classify_pair(const Graph& h, int n, const Slice& s, const Slice& t);

// Odd structures of a wheel subgraph by the structural route: odd slices,
// plus the outer cycle when n is even and all rim edges are present. Must
// agree with odd_structures() on every instance.
std::vector<OddStructure> wheel_odd_structures(const Graph& h, int n);

// Whether an odd slice carries a polytope constraint. Odd arc slices always
// do; an odd cycle-boundary slice only when its spokes leave it
// factor-critical.
bool slice_is_odd_structure(const Graph& h, int n, const Slice& s);

// True when every edge of h is an edge of W_n and the vertex counts agree.
bool is_wheel_subgraph(const Graph& h, int n);

} // namespace matchpoly

#endif
