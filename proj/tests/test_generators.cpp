#include <doctest.h>

#include <stdexcept>

#include "gamecol/canonical.hpp"
#include "gamecol/generators.hpp"

using namespace gamecol;

TEST_CASE("turan graphs use contiguous blocks, larger parts first") {
    const Graph t63 = turan(6, 3);
    CHECK(t63.n == 6);
    CHECK(t63.edge_count() == 12);
    CHECK(!t63.has_edge(0, 1));
    CHECK(!t63.has_edge(2, 3));
    CHECK(!t63.has_edge(4, 5));
    CHECK(t63.has_edge(0, 2));
    CHECK(turan_part_sizes(7, 3) == std::vector<int>{3, 2, 2});
    CHECK(turan_classes(6, 3) == std::vector<std::uint32_t>{0b000011, 0b001100, 0b110000});

    const Graph t42 = turan(4, 2);
    CHECK(isomorphic(t42, cycle_graph(4)));
}

TEST_CASE("family basics") {
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(empty_graph(3).edge_count() == 0);
    CHECK(complete_multipartite({2, 2, 2}) == turan(6, 3));
}

TEST_CASE("k_rr_minus_matching(3) is the six-cycle") {
    const Graph g = k_rr_minus_matching(3);
    CHECK(g.n == 6);
    CHECK(g.edge_count() == 6);
    CHECK(isomorphic(g, cycle_graph(6)));
}

TEST_CASE("turan_minus_edges validates the removed edges") {
    const Graph g = turan_minus_edges(6, 3, {{0, 2}});
    CHECK(g.edge_count() == 11);
    CHECK(!g.has_edge(0, 2));
    CHECK_THROWS_AS(turan_minus_edges(6, 3, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("the separating example is the four-cycle plus pendant plus isolate") {
    const Graph g = separating_example();
    CHECK(g.n == 6);
    CHECK(g.edge_count() == 5);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 3));
    CHECK(g.has_edge(3, 0));
    CHECK(g.has_edge(0, 4));
    CHECK(g.degree(5) == 0);
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(turan(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(complete_multipartite({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(empty_graph(0), std::invalid_argument);
}
