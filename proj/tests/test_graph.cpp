#include <doctest.h>

#include <set>

#include "matchpoly/errors.hpp"
#include "matchpoly/graph.hpp"
#include "oracles.hpp"

using namespace matchpoly;

TEST_CASE("canonical edge order and simple-graph validation") {
    Graph g(4, {{3, 2}, {0, 1}, {2, 0}});
    CHECK(g.edge_count() == 3);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{0, 2});
    CHECK(g.edge(2) == Edge{2, 3});
    CHECK(g.edge_index(2, 3) == 2);
    CHECK(g.edge_index(3, 2) == 2);
    CHECK(g.edge_index(1, 3) == -1);

    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
}

TEST_CASE("families follow the stated conventions") {
    const Graph w4 = make_wheel(4);
    CHECK(w4.vertex_count() == 4);
    CHECK(w4.edge_count() == 6);

    CHECK(make_cycle(3).edge_count() == 3);
    CHECK(make_chortling_c5().vertex_count() == 5);
    CHECK(make_chortling_c5().edge_count() == 7);
    CHECK(make_chorded_c5().edge_count() == 6);

    // Wheel indexing: rim Z_{n-1}, center n-1 with all spokes.
    const Graph w6 = make_wheel(6);
    for (int i = 0; i < 5; ++i) {
        CHECK(w6.has_edge(i, (i + 1) % 5));
        CHECK(w6.has_edge(i, 5));
    }
    CHECK(w6.degree(5) == 5);

    CHECK_THROWS_AS(make_wheel(3), InputError);
    CHECK_THROWS_AS(make_cycle(2), InputError);
    CHECK_THROWS_AS(make_path(0), InputError);
    CHECK_THROWS_AS(make_complete_multipartite({3}), InputError);

    const Graph k112 = make_complete_multipartite({1, 1, 2});
    CHECK(k112.vertex_count() == 4);
    CHECK(k112.edge_count() == 5);
}

TEST_CASE("essential vertices by the three-clause definition") {
    CHECK(essential_vertices(make_complete(3)).empty());

    const auto p3 = essential_vertices(make_path(3));
    CHECK(p3 == std::vector<int>{1});

    const auto w6 = essential_vertices(make_wheel(6));
    CHECK(w6.size() == 6);

    // Degree-1 with degree-1 neighbor: both ends of a lone edge.
    CHECK(essential_vertices(make_path(2)) == std::vector<int>{0, 1});

    // C*_5: the top vertex has adjacent neighbors, the feet do not.
    const auto star = essential_vertices(make_chorded_c5());
    CHECK(star == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("factor-critical matches the exhaustive oracle") {
    CHECK(is_factor_critical(make_cycle(5)));
    CHECK_FALSE(is_factor_critical(make_cycle(4)));
    CHECK(is_factor_critical(make_chortling_c5()));
    CHECK(is_factor_critical(Graph(1, {})));

    const Graph corpus[] = {
        make_path(1),  make_path(4),  make_cycle(3), make_cycle(6), make_cycle(7),
        make_wheel(4), make_wheel(5), make_wheel(6), make_chorded_c5(),
        make_chortling_c5(), make_complete_multipartite({1, 1, 2}),
        make_complete_multipartite({2, 3}), make_complete(5),
    };
    for (const Graph& g : corpus)
        CHECK(is_factor_critical(g) == matchpoly::testing::oracle_is_factor_critical(g));

    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Graph g = matchpoly::testing::random_edge_subgraph(make_complete(7), 55, seed);
        CHECK(is_factor_critical(g) == matchpoly::testing::oracle_is_factor_critical(g));
    }
}

TEST_CASE("perfect matching existence agrees with enumeration") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Graph g = matchpoly::testing::random_edge_subgraph(make_complete(8), 40, seed);
        CHECK(has_perfect_matching(g) == matchpoly::testing::oracle_has_perfect_matching(g));
    }
}

TEST_CASE("block decomposition") {
    SUBCASE("two triangles sharing one vertex") {
        Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
        const auto bd = blocks(g);
        CHECK(bd.blocks.size() == 2);
        CHECK(bd.cut_vertices == std::vector<int>{2});
    }
    SUBCASE("cycle is one block") {
        const auto bd = blocks(make_cycle(6));
        CHECK(bd.blocks.size() == 1);
        CHECK(bd.cut_vertices.empty());
    }
    SUBCASE("path on 4 vertices: every edge a block") {
        const auto bd = blocks(make_path(4));
        CHECK(bd.blocks.size() == 3);
        CHECK(bd.cut_vertices == std::vector<int>{1, 2});
    }
    SUBCASE("blocks partition the edge set") {
        const Graph graphs[] = {
            make_wheel(6), make_path(7),
            matchpoly::testing::random_edge_subgraph(make_complete(8), 35, 7),
            matchpoly::testing::random_edge_subgraph(make_complete(8), 50, 11),
        };
        for (const Graph& g : graphs) {
            const auto bd = blocks(g);
            std::set<int> all;
            std::size_t total = 0;
            for (const auto& be : bd.block_edges) {
                all.insert(be.begin(), be.end());
                total += be.size();
            }
            CHECK(total == static_cast<std::size_t>(g.edge_count()));
            CHECK(all.size() == static_cast<std::size_t>(g.edge_count()));
        }
    }
}

TEST_CASE("line graphs") {
    CHECK(isomorphic(line_graph(make_cycle(5)), make_cycle(5)));
    CHECK(isomorphic(line_graph(make_path(3)), make_path(2)));
    CHECK(isomorphic(line_graph(make_complete(3)), make_complete(3)));
    for (int n = 3; n <= 10; ++n)
        CHECK(isomorphic(line_graph(make_cycle(n)), make_cycle(n)));
}

TEST_CASE("bipartite test with verifiable witnesses") {
    const auto even = is_bipartite(make_cycle(6));
    REQUIRE(even.bipartite);
    const Graph c6 = make_cycle(6);
    for (const Edge& e : c6.edges())
        CHECK(even.coloring[static_cast<std::size_t>(e.u)] !=
              even.coloring[static_cast<std::size_t>(e.v)]);

    const auto odd = is_bipartite(make_wheel(5));
    REQUIRE_FALSE(odd.bipartite);
    const auto& cycle = odd.odd_cycle;
    REQUIRE(cycle.size() >= 4);
    CHECK(cycle.front() == cycle.back());
    CHECK((cycle.size() - 1) % 2 == 1);
    const Graph w5 = make_wheel(5);
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
        CHECK(w5.has_edge(cycle[i], cycle[i + 1]));

    CHECK(is_bipartite(Graph(1, {})).bipartite);
}

TEST_CASE("degree-based essentiality properties on random graphs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = matchpoly::testing::random_edge_subgraph(make_complete(8), 45, seed);
        const auto essential = essential_vertices(g);
        std::set<int> ess(essential.begin(), essential.end());
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (g.degree(u) >= 3) CHECK(ess.count(u) == 1);
            if (g.degree(u) == 2) {
                const auto& nb = g.neighbors(u);
                CHECK(ess.count(u) == (g.has_edge(nb[0], nb[1]) ? 0u : 1u));
            }
        }
    }
}

TEST_CASE("edge subgraph and induced subgraph") {
    const Graph w5 = make_wheel(5);
    std::vector<bool> keep(static_cast<std::size_t>(w5.edge_count()), false);
    keep[0] = keep[1] = true;
    const Graph sub = w5.edge_subgraph(keep);
    CHECK(sub.vertex_count() == 5);
    CHECK(sub.edge_count() == 2);

    auto [tri, labels] = w5.induced_subgraph({0, 1, 4});
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);
    CHECK(labels == std::vector<int>{0, 1, 4});
}
