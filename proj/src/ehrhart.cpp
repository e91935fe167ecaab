#include "matchpoly/ehrhart.hpp"

#include <string>

#include "matchpoly/errors.hpp"

namespace matchpoly {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt count_points(const Graph& g, const std::vector<OddStructure>& structures, int t,
                    Budget budget) {
    return BigInt(count_t_matchings(g, structures, t, budget));
}

BigInt count_points(const Graph& g, int t, Budget budget) {
    return count_points(g, odd_structures(g), t, budget);
}

HStarVector hstar(const Graph& g, Budget budget) {
    const int d = g.edge_count();
    const auto structures = odd_structures(g);

    std::vector<BigInt> counts;
    counts.reserve(static_cast<std::size_t>(d) + 1);
    for (int t = 0; t <= d; ++t)
        counts.push_back(count_points(g, structures, t, budget));

    HStarVector h;
    h.dimension = d;
    h.coefficients.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i <= d; ++i) {
        BigInt value = 0;
        for (int j = 0; j <= i; ++j) {
            const BigInt term = binomial(d + 1, j) * counts[static_cast<std::size_t>(i - j)];
            if (j % 2 == 0)
                value += term;
            else
                value -= term;
        }
        if (value < 0)
            throw InternalError("negative h* coefficient at position " + std::to_string(i) +
                                ": counting bug");
        h.coefficients[static_cast<std::size_t>(i)] = value;
    }
    while (h.coefficients.size() > 1 && h.coefficients.back() == 0) h.coefficients.pop_back();
    if (h.coefficients.empty() || h.coefficients.front() != 1)
        throw InternalError("h*_0 != 1: counting bug");
    return h;
}

bool is_unimodal(const HStarVector& h) {
    std::size_t i = 1;
    const auto& c = h.coefficients;
    while (i < c.size() && c[i - 1] <= c[i]) ++i;
    while (i < c.size() && c[i - 1] >= c[i]) ++i;
    return i == c.size();
}

bool is_palindromic(const HStarVector& h) {
    const auto& c = h.coefficients;
    for (std::size_t i = 0, j = c.size(); i < j; ++i)
        if (c[i] != c[--j]) return false;
    return true;
}

BigInt ehrhart_from_hstar(const HStarVector& h, int t) {
    BigInt total = 0;
    for (std::size_t i = 0; i < h.coefficients.size(); ++i)
        total += h.coefficients[i] * binomial(t - static_cast<int>(i) + h.dimension, h.dimension);
    return total;
}

} // namespace matchpoly
