#ifndef MATCHPOLY_EHRHART_HPP
#define MATCHPOLY_EHRHART_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "matchpoly/budget.hpp"
#include "matchpoly/graph.hpp"
#include "matchpoly/polytope.hpp"

namespace matchpoly {

using BigInt = boost::multiprecision::cpp_int;

// Coefficients of the h*-polynomial of P_M(G), trailing zeros trimmed.
// h*_0 = 1 and all coefficients are nonnegative; `dimension` is |E(G)|
// (the polytope is full-dimensional in edge space).
struct HStarVector {
    std::vector<BigInt> coefficients;
    int dimension = 0;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

// L(t) = |t P_M(G) cap Z^E|, by the counting-only traversal. L(0) = 1.
BigInt count_points(const Graph& g, int t, Budget budget = Budget(600.0));
BigInt count_points(const Graph& g, const std::vector<OddStructure>& structures, int t,
                    Budget budget = Budget(600.0));

// h*_i = sum_{j=0..i} (-1)^j C(d+1, j) L(i-j) for i = 0..d, exact arithmetic.
// Aborts with InternalError if any coefficient comes out negative.
HStarVector hstar(const Graph& g, Budget budget = Budget(600.0));

// Weakly rises then weakly falls.
bool is_unimodal(const HStarVector& h);
// Reads the same reversed (after trimming); for these polytopes this is the
// Gorenstein criterion, with index k = dim + 1 - deg h*.
bool is_palindromic(const HStarVector& h);

BigInt binomial(int n, int k);

// Series expansion check: L(t) recovered from h* as
// sum_i h*_i C(t - i + d, d).
BigInt ehrhart_from_hstar(const HStarVector& h, int t);

} // namespace matchpoly

#endif
