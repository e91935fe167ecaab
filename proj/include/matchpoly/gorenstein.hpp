#ifndef MATCHPOLY_GORENSTEIN_HPP
#define MATCHPOLY_GORENSTEIN_HPP

#include <optional>
#include <utility>

#include "matchpoly/graph.hpp"
#include "matchpoly/structures.hpp"

namespace matchpoly {

enum class GorensteinClass { type_a, type_b, type_c, none };

// Classification result for P_M(G). When the verdict is positive, delta is
// the common essential degree and index_k = delta + 1. Negative verdicts
// carry a witness: a pair of essential vertices with different degrees, or
// an odd structure violating the edge-count equality.
struct GorensteinReport {
    bool verdict = false;
    GorensteinClass cls = GorensteinClass::none;
    std::optional<int> delta;
    std::optional<int> index_k;
    std::optional<std::pair<int, int>> degree_witness;
    std::optional<OddStructure> structure_witness;
};

// Route 1: test the two numeric conditions directly. (C1) all essential
// vertices share one degree delta; (C2) every odd structure H satisfies
// |E(H)| = (delta+1)(|H|-1)/2 - 1. With no essential vertices, delta is
// solved from the structure equations; with neither, the graph is a single
// vertex and the verdict is positive.
GorensteinReport check_conditions(const Graph& g, const EnumerationLimits& limits = {});

// Route 2: match the graph against the structural classes:
//   (a) bipartite with constant essential degree,
//   (b) the 5-cycle,
//   (c) essential vertices all of degree 3 and every block bipartite,
//       K_3, K_4, K_{1,1,2} or C'_5.
GorensteinReport classify_structure(const Graph& g);

// Route 3: the all-ones vector as a lattice witness. True iff it lies in
// k*P_M(G) with deg(u) = k-1 at every essential vertex and
// |E(H)| = k(|H|-1)/2 - 1 for every odd structure.
bool verify_lattice_witness(const Graph& g, int k, const EnumerationLimits& limits = {});

} // namespace matchpoly

#endif
