#include <doctest.h>

#include "matchpoly/ehrhart.hpp"
#include "matchpoly/errors.hpp"
#include "matchpoly/gorenstein.hpp"
#include "oracles.hpp"

using namespace matchpoly;

namespace {

std::vector<BigInt> coeffs(std::initializer_list<long long> values) {
    return {values.begin(), values.end()};
}

} // namespace

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(5, 9) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("point counts on segments and simplices") {
    const Graph k2 = make_path(2);
    for (int t = 0; t <= 6; ++t) CHECK(count_points(k2, t) == t + 1);

    // K3: x >= 0 with x1+x2+x3 <= t, verified against the box scan.
    const Graph k3 = make_complete(3);
    const auto sys = inequality_system(k3);
    for (int t = 0; t <= 5; ++t) {
        const auto box = matchpoly::testing::box_scan_points(k3, sys, t);
        CHECK(count_points(k3, t) == box.size());
        CHECK(count_points(k3, t) ==
              BigInt(t + 1) * BigInt(t + 2) * BigInt(t + 3) / 6);
    }

    CHECK(count_points(make_wheel(4), 1) == 10);
}

TEST_CASE("h* vectors of small graphs") {
    CHECK(hstar(make_path(2)).coefficients == coeffs({1}));
    CHECK(hstar(make_complete(3)).coefficients == coeffs({1}));
    CHECK(hstar(make_wheel(4)).coefficients == coeffs({1, 3, 3, 1}));
    CHECK(hstar(make_wheel(5)).coefficients == coeffs({1, 10, 29, 26, 5}));
    // Frozen from the box-scan-backed counting runs.
    CHECK(hstar(make_cycle(5)).coefficients == coeffs({1, 5, 5, 1}));
    CHECK(hstar(make_cycle(6)).coefficients == coeffs({1, 11, 24, 11, 1}));
    CHECK(hstar(make_chorded_c5()).coefficients == coeffs({1, 6, 8, 2}));
    CHECK(hstar(make_chortling_c5()).coefficients == coeffs({1, 8, 17, 9, 1}));
}

TEST_CASE("unimodality and palindromicity predicates") {
    HStarVector h;
    h.dimension = 6;
    h.coefficients = coeffs({1, 3, 3, 1});
    CHECK(is_unimodal(h));
    CHECK(is_palindromic(h));

    h.coefficients = coeffs({1, 2, 1, 2});
    CHECK_FALSE(is_unimodal(h));
    CHECK_FALSE(is_palindromic(h));

    h.coefficients = coeffs({1});
    CHECK(is_unimodal(h));
    CHECK(is_palindromic(h));

    h.coefficients = coeffs({1, 10, 29, 26, 5});
    CHECK(is_unimodal(h));
    CHECK_FALSE(is_palindromic(h));

    h.coefficients = coeffs({3, 1, 4, 1});
    CHECK_FALSE(is_unimodal(h));
}

TEST_CASE("series reconstruction reproduces the counts") {
    const Graph graphs[] = {make_path(2),  make_cycle(4),        make_cycle(5),
                            make_wheel(4), make_chorded_c5(),    make_complete(3),
                            make_complete_multipartite({1, 1, 2})};
    for (const Graph& g : graphs) {
        const auto h = hstar(g);
        const auto structs = odd_structures(g);
        const int d = g.edge_count();
        for (int t = 0; t <= d + 3; ++t)
            CHECK(ehrhart_from_hstar(h, t) == count_points(g, structs, t));
    }
}

TEST_CASE("h* sum equals d! times the leading Ehrhart coefficient") {
    // Equivalently: L(t) is a degree-d polynomial whose d-th finite
    // difference is constant and equals sum h*_i.
    const Graph graphs[] = {make_cycle(5), make_wheel(4), make_chorded_c5()};
    for (const Graph& g : graphs) {
        const auto h = hstar(g);
        BigInt sum = 0;
        for (const auto& c : h.coefficients) sum += c;
        CHECK(sum > 0);
        const int d = g.edge_count();
        const auto structs = odd_structures(g);
        BigInt diff = 0;
        for (int j = 0; j <= d; ++j) {
            const BigInt term = binomial(d, j) * count_points(g, structs, d - j);
            diff += (j % 2 == 0) ? term : -term;
        }
        CHECK(diff == sum);
    }
}

TEST_CASE("index relation k = dim + 1 - deg for Gorenstein graphs") {
    const Graph graphs[] = {make_cycle(5), make_cycle(4), make_cycle(6), make_wheel(4),
                            make_complete_multipartite({1, 1, 2}), make_path(4)};
    for (const Graph& g : graphs) {
        const auto report = check_conditions(g);
        REQUIRE(report.verdict);
        const auto h = hstar(g);
        CHECK(*report.index_k == g.edge_count() + 1 - h.degree());
    }
}

TEST_CASE("counting budget raises a resource error") {
    CHECK_THROWS_AS(count_points(make_wheel(6), 8, Budget(0.0)), BudgetError);
}
