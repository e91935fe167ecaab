#ifndef MATCHPOLY_TEST_ORACLES_HPP
#define MATCHPOLY_TEST_ORACLES_HPP

// Brute-force reference implementations used only by the test suite. These
// deliberately avoid the library's algorithms: perfect matchings come from
// plain matching enumeration, 2-connectivity from delete-a-vertex
// connectivity checks, and polytope membership from a full box scan.

#include <cstdint>
#include <vector>

#include "matchpoly/graph.hpp"
#include "matchpoly/polytope.hpp"
#include "matchpoly/structures.hpp"

namespace matchpoly::testing {

bool oracle_has_perfect_matching(const Graph& g);
bool oracle_is_factor_critical(const Graph& g);

// All odd structures by subset scan with independent predicates.
std::vector<OddStructure> oracle_odd_structures(const Graph& g);

// Integer vectors 0 <= x(e) <= t satisfying the scaled inequality system,
// sorted lexicographically.
std::vector<std::vector<int>> box_scan_points(const Graph& g, const InequalitySystem& sys, int t);

// Deterministic pseudo-random subgraph of g (keeps each edge with roughly
// the given percent chance).
Graph random_edge_subgraph(const Graph& g, int keep_percent, std::uint64_t seed);

} // namespace matchpoly::testing

#endif
