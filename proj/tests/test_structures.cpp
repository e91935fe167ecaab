#include <doctest.h>

#include <algorithm>

#include "matchpoly/errors.hpp"
#include "matchpoly/structures.hpp"
#include "oracles.hpp"

using namespace matchpoly;

namespace {

Slice arc_slice(std::vector<int> rim) {
    Slice s;
    s.rim = std::move(rim);
    return s;
}

// Wheel with a chosen set of spokes removed.
Graph wheel_without_spokes(int n, const std::vector<int>& dropped) {
    const Graph w = make_wheel(n);
    std::vector<bool> keep(static_cast<std::size_t>(w.edge_count()), true);
    for (int i : dropped) keep[static_cast<std::size_t>(w.edge_index(i, n - 1))] = false;
    return w.edge_subgraph(keep);
}

} // namespace

TEST_CASE("odd structure enumeration against the subset oracle") {
    CHECK(odd_structures(make_cycle(4)).empty());

    const auto k4 = odd_structures(make_complete(4));
    CHECK(k4.size() == 4); // the four triangles
    for (const auto& u : k4) CHECK(u.vertices.size() == 3);

    const auto w4 = odd_structures(make_wheel(4));
    CHECK(w4.size() == 4);

    const Graph corpus[] = {
        make_cycle(5),      make_cycle(7),   make_wheel(5),
        make_wheel(6),      make_wheel(7),   make_chorded_c5(),
        make_chortling_c5(), make_complete(5), make_complete_multipartite({1, 1, 3}),
        make_path(6),
    };
    for (const Graph& g : corpus)
        CHECK(odd_structures(g) == matchpoly::testing::oracle_odd_structures(g));

    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const Graph g = matchpoly::testing::random_edge_subgraph(make_complete(7), 50, seed);
        CHECK(odd_structures(g) == matchpoly::testing::oracle_odd_structures(g));
    }
}

TEST_CASE("odd structures have at least |U| induced edges") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = matchpoly::testing::random_edge_subgraph(make_complete(8), 45, seed);
        for (const auto& u : odd_structures(g))
            CHECK(u.edge_indices.size() >= u.vertices.size());
    }
}

TEST_CASE("subset budget raises a resource error") {
    EnumerationLimits limits;
    limits.subset_budget = 4;
    CHECK_THROWS_AS(odd_structures(make_complete(8), limits), BudgetError);
}

TEST_CASE("slices of wheels") {
    SUBCASE("full W5: four triangles among the odd slices") {
        const auto all = slices(make_wheel(5), 5);
        int triangles = 0, odd = 0;
        for (const Slice& s : all) {
            if (s.size() == 3) ++triangles;
            if (s.odd()) ++odd;
        }
        CHECK(triangles == 4);
        CHECK(odd == 5); // four triangles plus the whole wheel
        CHECK(all.size() == 9);
    }
    SUBCASE("figure slices of W9 exist") {
        const auto all = slices(make_wheel(9), 9);
        const Slice red = arc_slice({1, 2, 3, 4});
        const Slice blue = arc_slice({5, 6, 7});
        CHECK(std::find(all.begin(), all.end(), red) != all.end());
        CHECK(std::find(all.begin(), all.end(), blue) != all.end());
        CHECK(red.odd());
        CHECK_FALSE(blue.odd());
    }
    SUBCASE("removing a spoke kills the slices ending there") {
        const Graph h = wheel_without_spokes(6, {2});
        for (const Slice& s : slices(h, 6)) {
            CHECK(s.rim.front() != 2);
            CHECK(s.rim.back() != 2);
        }
    }
    SUBCASE("non-subgraph input is rejected") {
        CHECK_THROWS_AS(slices(make_complete(5), 5), InputError);
        CHECK_THROWS_AS(slices(make_wheel(5), 6), InputError);
    }
}

TEST_CASE("pair classification matches the figures") {
    SUBCASE("almost disjoint (W9 figure)") {
        const Graph w9 = make_wheel(9);
        CHECK(classify_pair(w9, 9, arc_slice({1, 2, 3, 4}), arc_slice({5, 6, 7})) ==
              PairKind::almost_disjoint);
    }
    SUBCASE("somewhat disjoint (W5 figure)") {
        const Graph w5 = make_wheel(5);
        CHECK(classify_pair(w5, 5, arc_slice({1, 2}), arc_slice({0, 1})) ==
              PairKind::somewhat_disjoint);
    }
    SUBCASE("interlocking (W7 figure)") {
        const Graph w7 = make_wheel(7);
        CHECK(classify_pair(w7, 7, arc_slice({0, 1, 2, 3}), arc_slice({2, 3, 4, 5})) ==
              PairKind::interlocking);
    }
    SUBCASE("symmetry") {
        const Graph w7 = make_wheel(7);
        const Slice slices_under_test[] = {arc_slice({0, 1}), arc_slice({1, 2, 3}),
                                           arc_slice({3, 4, 5, 0}), arc_slice({2, 3})};
        for (const Slice& a : slices_under_test)
            for (const Slice& b : slices_under_test)
                CHECK(classify_pair(w7, 7, a, b) == classify_pair(w7, 7, b, a));
    }
}

TEST_CASE("wheel odd structures equal the generic enumeration") {
    SUBCASE("full wheels") {
        for (int n = 4; n <= 8; ++n) {
            const Graph w = make_wheel(n);
            CHECK(wheel_odd_structures(w, n) == odd_structures(w));
        }
    }
    SUBCASE("outer cycle only for even n") {
        const auto w6 = wheel_odd_structures(make_wheel(6), 6);
        bool has_delta = false;
        for (const auto& u : w6)
            if (u.vertices == std::vector<int>{0, 1, 2, 3, 4}) has_delta = true;
        CHECK(has_delta);

        const auto w5 = wheel_odd_structures(make_wheel(5), 5);
        for (const auto& u : w5)
            CHECK(u.vertices != std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("exhaustive over spoke deletion patterns") {
        for (int n = 4; n <= 7; ++n) {
            const int rim = n - 1;
            for (int mask = 0; mask < (1 << rim); ++mask) {
                std::vector<int> dropped;
                for (int i = 0; i < rim; ++i)
                    if (mask & (1 << i)) dropped.push_back(i);
                const Graph h = wheel_without_spokes(n, dropped);
                CHECK(wheel_odd_structures(h, n) == odd_structures(h));
            }
        }
    }
    SUBCASE("random subgraphs of W8") {
        const Graph w8 = make_wheel(8);
        for (std::uint64_t seed = 1; seed <= 200; ++seed) {
            const Graph h = matchpoly::testing::random_edge_subgraph(w8, 60, seed);
            CHECK(wheel_odd_structures(h, 8) == odd_structures(h));
        }
    }
}
