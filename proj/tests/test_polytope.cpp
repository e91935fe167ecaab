#include <doctest.h>

#include <algorithm>
#include <set>

#include "matchpoly/errors.hpp"
#include "matchpoly/polytope.hpp"
#include "oracles.hpp"

using namespace matchpoly;

namespace {

const Graph& corpus_small() {
    static const Graph g = make_wheel(5);
    return g;
}

std::vector<Graph> corpus_8_edges() {
    return {
        make_path(2),      make_path(4),        make_cycle(3),
        make_cycle(4),     make_cycle(5),       make_cycle(7),
        make_wheel(4),     make_wheel(5),       make_chorded_c5(),
        make_chortling_c5(), make_complete_multipartite({1, 1, 2}),
        make_complete_multipartite({2, 3}),     make_path(7),
    };
}

} // namespace

TEST_CASE("matching enumeration counts") {
    CHECK(enumerate_matchings(make_wheel(4)).size() == 10); // 9 nonempty + empty
    CHECK(enumerate_matchings(make_complete(3)).size() == 4);
    CHECK(enumerate_matchings(make_path(3)).size() == 3);

    // Lexicographic order starts at the zero vector.
    const auto all = enumerate_matchings(corpus_small());
    CHECK(std::all_of(all.front().weights.begin(), all.front().weights.end(),
                      [](int w) { return w == 0; }));
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const EdgeWeighting& a, const EdgeWeighting& b) {
                             return a.weights < b.weights;
                         }));
}

TEST_CASE("inequality system shapes") {
    const auto k3 = inequality_system(make_complete(3));
    CHECK(k3.edge_count == 3);
    CHECK(k3.vertex_constraints.empty());
    CHECK(k3.odd_constraints.size() == 1);

    const auto c4 = inequality_system(make_cycle(4));
    CHECK(c4.vertex_constraints.size() == 4);
    CHECK(c4.odd_constraints.empty());

    const auto k2 = inequality_system(make_path(2));
    CHECK(k2.edge_count == 1);
    CHECK(k2.vertex_constraints.size() == 2);
    CHECK(k2.odd_constraints.empty());
}

TEST_CASE("t-matching predicate") {
    const Graph w4 = make_wheel(4);
    const auto structs_w4 = odd_structures(w4);
    for (const auto& m : enumerate_matchings(w4)) CHECK(is_t_matching(w4, structs_w4, m, 1));

    // All-ones on the rim of W4 hits the rim-triangle bound (3 > 2), so it
    // is not a 2-matching; on W5, whose rim is a 4-cycle, it is one.
    EdgeWeighting rim4{std::vector<int>(6, 0), 2};
    rim4.weights[static_cast<std::size_t>(w4.edge_index(0, 1))] = 1;
    rim4.weights[static_cast<std::size_t>(w4.edge_index(1, 2))] = 1;
    rim4.weights[static_cast<std::size_t>(w4.edge_index(0, 2))] = 1;
    CHECK_FALSE(is_t_matching(w4, structs_w4, rim4, 2));

    const Graph w5 = make_wheel(5);
    EdgeWeighting rim5{std::vector<int>(8, 0), 2};
    for (int i = 0; i < 4; ++i)
        rim5.weights[static_cast<std::size_t>(w5.edge_index(i, (i + 1) % 4))] = 1;
    CHECK(is_t_matching(w5, odd_structures(w5), rim5, 2));

    const Graph k3 = make_complete(3);
    CHECK_FALSE(is_t_matching(k3, {{1, 1, 1}, 2}, 2)); // triangle sum 3 > 2

    CHECK_THROWS_AS(is_t_matching(k3, {{1, 1}, 1}, 1), InputError);
}

TEST_CASE("t-matching enumeration") {
    const Graph k2 = make_path(2);
    CHECK(enumerate_t_matchings(k2, 3).size() == 4);

    const Graph w4 = make_wheel(4);
    CHECK(enumerate_t_matchings(w4, 0).size() == 1);
    CHECK(enumerate_t_matchings(w4, 1).size() == 10);

    // Deterministic lexicographic order.
    const auto pts = enumerate_t_matchings(w4, 2);
    CHECK(std::is_sorted(pts.begin(), pts.end(),
                         [](const EdgeWeighting& a, const EdgeWeighting& b) {
                             return a.weights < b.weights;
                         }));
}

TEST_CASE("membership equivalence with the box-scan oracle") {
    for (const Graph& g : corpus_8_edges()) {
        REQUIRE(g.edge_count() <= 8);
        const auto sys = inequality_system(g);
        const auto structs = odd_structures(g);
        for (int t = 1; t <= 3; ++t) {
            const auto box = matchpoly::testing::box_scan_points(g, sys, t);
            const auto enumerated = enumerate_t_matchings(g, structs, t);
            REQUIRE(box.size() == enumerated.size());
            for (std::size_t i = 0; i < box.size(); ++i)
                CHECK(box[i] == enumerated[i].weights);
        }
    }
}

TEST_CASE("matchings are exactly the 0/1 points at t = 1") {
    for (const Graph& g : corpus_8_edges()) {
        const auto pts = enumerate_t_matchings(g, 1);
        const auto ms = enumerate_matchings(g);
        REQUIRE(pts.size() == ms.size());
        for (std::size_t i = 0; i < pts.size(); ++i) CHECK(pts[i].weights == ms[i].weights);
    }
}

TEST_CASE("restriction commutes with dilation") {
    struct Pair {
        Graph g, h;
    };
    std::vector<Pair> pairs;
    {
        const Graph w5 = make_wheel(5);
        std::vector<bool> keep(static_cast<std::size_t>(w5.edge_count()), true);
        keep[2] = keep[5] = false;
        pairs.push_back({w5, w5.edge_subgraph(keep)});
    }
    {
        const Graph c7 = make_cycle(7);
        std::vector<bool> keep(static_cast<std::size_t>(c7.edge_count()), true);
        keep[0] = false;
        pairs.push_back({c7, c7.edge_subgraph(keep)});
    }
    pairs.push_back({make_chortling_c5(),
                     matchpoly::testing::random_edge_subgraph(make_chortling_c5(), 70, 3)});

    for (const auto& [g, h] : pairs) {
        REQUIRE(g.edge_count() <= 8);
        for (int t = 1; t <= 3; ++t) {
            std::set<std::vector<int>> restricted;
            for (const auto& x : enumerate_t_matchings(g, t))
                restricted.insert(restrict_weighting(g, h, x).weights);
            std::set<std::vector<int>> direct;
            for (const auto& y : enumerate_t_matchings(h, t)) direct.insert(y.weights);
            CHECK(restricted == direct);
        }
    }
}

TEST_CASE("weight analysis") {
    SUBCASE("doubled perfect matching on C4: every vertex tight") {
        const Graph c4 = make_cycle(4);
        EdgeWeighting x{std::vector<int>(4, 0), 2};
        x.weights[static_cast<std::size_t>(c4.edge_index(0, 1))] = 2;
        x.weights[static_cast<std::size_t>(c4.edge_index(2, 3))] = 2;
        const auto a = analyze(c4, odd_structures(c4), x, 2);
        CHECK(a.tight_vertices == std::vector<int>{0, 1, 2, 3});
        CHECK(a.degenerate); // two edges carry weight zero
    }
    SUBCASE("zero vector: nothing tight") {
        const Graph k3 = make_complete(3);
        const auto a = analyze(k3, odd_structures(k3), {{0, 0, 0}, 1}, 1);
        CHECK(a.tight_vertices.empty());
        CHECK(a.tight_structures.empty());
    }
    SUBCASE("the adjacent-troublesome-slices 4-matching on W5") {
        const Graph w5 = make_wheel(5);
        EdgeWeighting x{std::vector<int>(8, 0), 4};
        x.weights[static_cast<std::size_t>(w5.edge_index(0, 4))] = 2;
        x.weights[static_cast<std::size_t>(w5.edge_index(3, 4))] = 1;
        x.weights[static_cast<std::size_t>(w5.edge_index(0, 3))] = 1;
        x.weights[static_cast<std::size_t>(w5.edge_index(1, 4))] = 1;
        x.weights[static_cast<std::size_t>(w5.edge_index(0, 1))] = 1;
        const auto structs = odd_structures(w5);
        const auto a = analyze(w5, structs, x, 4);
        REQUIRE(a.tight_structures.size() == 2);
        for (int si : a.tight_structures) {
            const auto& u = structs[static_cast<std::size_t>(si)];
            CHECK(u.vertices.size() == 3);
            CHECK(a.structure_index[static_cast<std::size_t>(si)] == 1); // full for a triangle
        }
        CHECK_FALSE(a.degenerate == false); // three zero edges
    }
    SUBCASE("precondition enforced") {
        const Graph k3 = make_complete(3);
        CHECK_THROWS_AS(analyze(k3, odd_structures(k3), {{1, 1, 1}, 2}, 2), InputError);
    }
}

TEST_CASE("index identity across one subtracted matching") {
    const Graph g = make_wheel(5);
    const auto structs = odd_structures(g);
    const int t = 3;
    int checked = 0;
    for (const auto& x : enumerate_t_matchings(g, structs, t)) {
        if (checked > 400) break;
        for (const auto& m : enumerate_matchings(g)) {
            std::vector<int> rest(x.weights.size());
            bool leq = true;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                rest[i] = x.weights[i] - m.weights[i];
                if (rest[i] < 0) leq = false;
            }
            if (!leq || !is_t_matching(g, structs, {rest, t - 1}, t - 1)) continue;
            ++checked;
            const auto ax = analyze(g, structs, x, t);
            const auto ay = analyze(g, structs, {rest, t - 1}, t - 1);
            for (std::size_t si = 0; si < structs.size(); ++si) {
                long long m_weight = 0;
                for (int ei : structs[si].edge_indices)
                    m_weight += m.weights[static_cast<std::size_t>(ei)];
                const long long half =
                    (static_cast<long long>(structs[si].vertices.size()) - 1) / 2;
                CHECK(ax.structure_index[si] - ay.structure_index[si] == m_weight - half);
            }
            break;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("counting traversal agrees with materialized enumeration") {
    for (const Graph& g : corpus_8_edges()) {
        const auto structs = odd_structures(g);
        for (int t = 0; t <= 3; ++t)
            CHECK(count_t_matchings(g, structs, t) == enumerate_t_matchings(g, structs, t).size());
    }
    // Parallel and serial traversals match on a bigger instance.
    const Graph w6 = make_wheel(6);
    const auto structs = odd_structures(w6);
    CHECK(count_t_matchings(w6, structs, 4, {}, true) ==
          count_t_matchings(w6, structs, 4, {}, false));
}

TEST_CASE("enumeration budget surfaces as a resource error") {
    const Graph w5 = make_wheel(5);
    CHECK_THROWS_AS(enumerate_t_matchings(w5, odd_structures(w5), 3, Budget::work_only(10)),
                    BudgetError);
}
