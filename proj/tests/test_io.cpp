#include <doctest.h>

#include <sstream>

#include "matchpoly/errors.hpp"
#include "matchpoly/io.hpp"

using namespace matchpoly;

TEST_CASE("edge-list parsing") {
    SUBCASE("directive, comments and blank lines") {
        std::istringstream in("# square\nvertices 5\n0 1\n1 2 # chord-free\n\n2 3\n3 0\n");
        const Graph g = read_edge_list(in);
        CHECK(g.vertex_count() == 5);
        CHECK(g.edge_count() == 4);
        CHECK(g.degree(4) == 0);
    }
    SUBCASE("vertex count inferred without the directive") {
        std::istringstream in("0 1\n1 7\n");
        const Graph g = read_edge_list(in);
        CHECK(g.vertex_count() == 8);
        CHECK(g.edge_count() == 2);
    }
    SUBCASE("rejects loops, duplicates, bad tokens and out-of-range endpoints") {
        std::istringstream loops("0 0\n");
        CHECK_THROWS_AS(read_edge_list(loops), InputError);
        std::istringstream dupes("vertices 3\n0 1\n1 0\n");
        CHECK_THROWS_AS(read_edge_list(dupes), InputError);
        std::istringstream range("vertices 2\n0 5\n");
        CHECK_THROWS_AS(read_edge_list(range), InputError);
        std::istringstream words("0 x\n");
        CHECK_THROWS_AS(read_edge_list(words), InputError);
        std::istringstream extra("0 1 2\n");
        CHECK_THROWS_AS(read_edge_list(extra), InputError);
        CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), InputError);
    }
    SUBCASE("write-read round trip") {
        const Graph g = make_wheel(6);
        std::ostringstream out;
        write_edge_list(out, g);
        std::istringstream in(out.str());
        CHECK(read_edge_list(in) == g);
    }
}

TEST_CASE("family dispatch") {
    using Kind = FamilySpec::Kind;
    CHECK(make_family({Kind::wheel, {5}}) == make_wheel(5));
    CHECK(make_family({Kind::cycle, {6}}) == make_cycle(6));
    CHECK(make_family({Kind::path, {4}}) == make_path(4));
    CHECK(make_family({Kind::complete_multipartite, {1, 1, 2}}) ==
          make_complete_multipartite({1, 1, 2}));
    CHECK(make_family({Kind::chortling_c5, {}}) == make_chortling_c5());
    CHECK(make_family({Kind::chorded_c5, {}}) == make_chorded_c5());
    CHECK_THROWS_AS(make_family({Kind::wheel, {}}), InputError);
    CHECK_THROWS_AS(make_family({Kind::wheel, {2}}), InputError);
}
