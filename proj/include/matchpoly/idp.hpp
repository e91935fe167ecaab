#ifndef MATCHPOLY_IDP_HPP
#define MATCHPOLY_IDP_HPP

#include <optional>
#include <string>
#include <vector>

#include "matchpoly/budget.hpp"
#include "matchpoly/graph.hpp"
#include "matchpoly/polytope.hpp"
#include "matchpoly/structures.hpp"

namespace matchpoly {

enum class SplitMethod { exhaustive, blocks, c5_star, c5_chortling, wheel, perfect_block };

const char* split_method_name(SplitMethod m);

// A decomposition of a t-matching into t matchings, with the rule trace that
// produced it. Every constructor of a SplitResult re-verifies the parts.
struct SplitResult {
    std::vector<EdgeWeighting> parts;
    SplitMethod method = SplitMethod::exhaustive;
    bool fallback_used = false;
    std::vector<std::string> trace;
};

// Backtracking search over matchings m <= x with the one-level gate
// "x - m is a (t-1)-matching"; memoizes failed states. Returns nothing when
// the search space is exhausted (x does not split).
std::optional<SplitResult> split_exhaustive(const Graph& g, const EdgeWeighting& x, int t,
                                            Budget budget = {});

struct IdpCertificate {
    bool certified = false;
    int t_max = 0;
    // Instances checked per level t = 2..t_max.
    std::vector<std::uint64_t> instances;
    std::optional<EdgeWeighting> counterexample;
    int counterexample_level = 0;
};

// Checks level by level that every t-matching is a matching plus a
// (t-1)-matching, for t = 2..t_max. Sound and complete within t_max.
IdpCertificate idp_check(const Graph& g, int t_max, Budget budget = {});

// Default certification level: min(|E|-1, 4).
int default_idp_level(const Graph& g);

// Sufficient condition: every block bipartite, K_4 or K_{1,1,n}. True proves
// the IDP; false is inconclusive.
bool blocks_sufficient(const Graph& g);

// Merges per-block decompositions (indexed by the host graph's edges) by
// permuting parts at each cut vertex so no merged part saturates a vertex
// twice. All inputs must have the same number of parts.
SplitResult combine_block_splits(const Graph& g, const BlockDecomposition& bd,
                                 const std::vector<SplitResult>& per_block);

// Case-analysis splitters for the 5-cycle with one chord (C*_5, as built by
// make_chorded_c5) and the chortling cycle (C'_5, make_chortling_c5). The
// input must be a nondegenerate t-matching on the respective graph; each
// level's matching is chosen by the shoulder/top tightness cases, verified,
// and falls back to exhaustive search when the chosen pair fails.
SplitResult split_c5_star(const EdgeWeighting& x, int t, Budget budget = {});
SplitResult split_c5_chortling(const EdgeWeighting& x, int t, Budget budget = {});

// ---- wheel machinery -------------------------------------------------------

// A tight odd slice retained after reduction. `rim` is the boundary arc in
// rim order; synthetic entries are the missing-edge triangles (a tight rim
// vertex plus its one surviving rim edge and its spoke).
struct TroublesomeSlice {
    std::vector<int> rim;
    bool boundary_cycle = false;
    bool synthetic = false;
    long long index = 0;
    bool full_index = false;
};

enum class GapKind { conductor, insulator, pseudoconductor };

struct SliceGap {
    GapKind kind = GapKind::insulator;
    // Rim vertices strictly between the two slice boundaries; empty for a
    // pseudoconductor (shared-vertex junction, |Omega| = -1 by convention).
    std::vector<int> vertices;
    int left_slice = -1;
    int right_slice = -1;
    int shared_vertex = -1;
};

struct TroublesomeSet {
    std::vector<TroublesomeSlice> slices;
    std::vector<SliceGap> gaps;
    // Tight structures whose geometry fell outside the two reduction lemmas
    // (cycle boundaries containing other slices, multi-arc overlaps). Their
    // weight obligations are topped up and verified separately.
    std::vector<OddStructure> residual;
    // Times the two-full-index-plus-conductor configuration was detected.
    int conductor_pair_detections = 0;
};

// Reduces the tight odd slices of a wheel subgraph: interlocking pairs are
// replaced through the shared-boundary slice R and the trimmed slices S', T';
// tight slices split at tight interior rim vertices. The result is pairwise
// non-interlocking with loose interiors, plus gap classification.
TroublesomeSet reduce_tight_structures(const Graph& h, const EdgeWeighting& x, int t);

// Constructive splitter for nondegenerate t-matchings on subgraphs of W_n
// (n = h.vertex_count(), wheel vertex indexing). Builds each level's matching
// from the troublesome-slice patterns, conductor corollary, insulator
// alternation, spoke choice and outer-cycle rules; verifies it; falls back to
// exhaustive search on verification failure (fallback_used is set).
SplitResult wheel_split(const Graph& h, const EdgeWeighting& x, int t, Budget budget = {});

// Dispatch pipeline: restrict to the support, decompose into blocks, route
// each block to the most specific splitter, merge, verify. Returns nothing
// only when an exhaustive fallback proves some block weighting unsplittable.
std::optional<SplitResult> split_any(const Graph& g, const EdgeWeighting& x, int t,
                                     Budget budget = {});

// Wheel-coordinate embedding of a 2-connected graph, when one exists.
struct WheelEmbedding {
    int n = 0;                // host wheel W_n
    std::vector<int> to_wheel; // graph vertex -> wheel vertex
};

std::optional<WheelEmbedding> recognize_wheel_subgraph(const Graph& b);

// Vertex bijection a -> b preserving adjacency, when one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

} // namespace matchpoly

#endif
