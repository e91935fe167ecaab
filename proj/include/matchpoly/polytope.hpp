#ifndef MATCHPOLY_POLYTOPE_HPP
#define MATCHPOLY_POLYTOPE_HPP

#include <cstdint>
#include <vector>

#include "matchpoly/budget.hpp"
#include "matchpoly/graph.hpp"
#include "matchpoly/structures.hpp"

namespace matchpoly {

// Integer edge weighting indexed by canonical edge order. `level` is the
// dilation parameter t the weighting lives at (lattice point of level*P).
struct EdgeWeighting {
    std::vector<int> weights;
    int level = 1;

    friend bool operator==(const EdgeWeighting&, const EdgeWeighting&) = default;
};

// H-description of P_M(G): x(e) >= 0 per edge, sum over iota(u) <= 1 per
// essential vertex u, sum over E(U) <= (|U|-1)/2 per odd structure U.
// Scaled by t, the right-hand sides become t and t*(|U|-1)/2.
struct VertexConstraint {
    int vertex;
    std::vector<int> edges;
};

struct InequalitySystem {
    int edge_count = 0;
    std::vector<VertexConstraint> vertex_constraints;
    std::vector<OddStructure> odd_constraints;
};

InequalitySystem inequality_system(const Graph& g, const EnumerationLimits& limits = {});

// Does x satisfy the scaled system? Checks the essential-vertex description.
bool satisfies_system(const InequalitySystem& sys, const std::vector<int>& weights, int t);

// ---- t-matchings -----------------------------------------------------------

// The t-matching test bounds the weight of EVERY vertex by t and of every odd
// structure U by t*(|U|-1)/2. Agrees with the scaled inequality system on
// integer points (the vertex bound at non-essential vertices is implied).
bool is_t_matching(const Graph& g, const std::vector<OddStructure>& structures,
                   const EdgeWeighting& x, int t);
bool is_t_matching(const Graph& g, const EdgeWeighting& x, int t);

bool is_matching_vector(const Graph& g, const std::vector<int>& weights);

// All matchings including the empty one, lexicographic on weight vectors.
std::vector<EdgeWeighting> enumerate_matchings(const Graph& g);

// Exactly the integer points of t*P_M(G), lexicographic. The budget bounds
// both wall clock and the number of points materialized.
std::vector<EdgeWeighting> enumerate_t_matchings(const Graph& g,
                                                 const std::vector<OddStructure>& structures,
                                                 int t, Budget budget = {});
std::vector<EdgeWeighting> enumerate_t_matchings(const Graph& g, int t, Budget budget = {});

// Counting-only traversal (no materialized list); may run branches in
// parallel. Counts fit 64 bits for anything this traversal can finish.
std::uint64_t count_t_matchings(const Graph& g, const std::vector<OddStructure>& structures,
                                int t, Budget budget = {}, bool parallel = true);

// ---- weight bookkeeping ----------------------------------------------------

// Per-vertex and per-structure weights, indices and tightness flags for a
// t-matching x. The index of an odd structure U is
//   I(U) = x(U) - (t-1)*(|U|-1)/2,
// a vertex is tight when x(u) = t, a structure when I(U) > 0, and U has full
// index when I(U) = (|U|-1)/2. x is degenerate when some edge weight is 0
// (see README for the sign convention).
struct WeightAnalysis {
    int level = 1;
    std::vector<int> vertex_weight;
    std::vector<long long> structure_weight;
    std::vector<long long> structure_index;
    std::vector<int> tight_vertices;
    std::vector<int> tight_structures; // positions into the structure list
    bool degenerate = false;
    std::vector<int> support; // edge indices with x(e) > 0
};

WeightAnalysis analyze(const Graph& g, const std::vector<OddStructure>& structures,
                       const EdgeWeighting& x, int t);

// Restriction x|_h of a weighting on g to a subgraph h of g (h's edges must
// all be edges of g; vertex sets agree).
EdgeWeighting restrict_weighting(const Graph& g, const Graph& h, const EdgeWeighting& x);

} // namespace matchpoly

#endif
