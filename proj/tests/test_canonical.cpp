#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>
#include <set>

#include "gamecol/canonical.hpp"
#include "gamecol/generators.hpp"
#include "oracles.hpp"

using namespace gamecol;

TEST_CASE("isomorphic relabellings share a key") {
    Graph a = path_graph(4);  // 0-1-2-3
    Graph b(4);               // the same path as 1-3-0-2
    b.add_edge(1, 3);
    b.add_edge(3, 0);
    b.add_edge(0, 2);
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK(canonical_key(empty_graph(3)) != canonical_key(complete_graph(3)));
}

TEST_CASE("canonical key is invariant under random permutations") {
    std::mt19937 rng(7);
    for (int n = 2; n <= 6; ++n) {
        const int bits = n * (n - 1) / 2;
        for (int trial = 0; trial < 40; ++trial) {
            const Graph g = graph_from_edge_mask(n, rng() & ((1u << bits) - 1));
            std::array<int, kMaxVertices> perm{};
            std::iota(perm.begin(), perm.begin() + n, 0);
            std::shuffle(perm.begin(), perm.begin() + n, rng);
            CHECK(canonical_key(g) == canonical_key(relabel(g, perm)));
        }
    }
}

TEST_CASE("order-4 labelled graphs form 11 classes") {
    // Independent oracle: orbit marking over a std::set.
    CHECK(oracles::labelled_class_count(4) == 11);
    std::set<CanonicalKey> keys;
    for (std::uint64_t mask = 0; mask < 64; ++mask)
        keys.insert(canonical_key(graph_from_edge_mask(4, mask)));
    CHECK(keys.size() == 11);
}

TEST_CASE("enumeration counts match the oracle for small orders") {
    const std::uint64_t expected[] = {0, 1, 2, 4, 11, 34};
    for (int n = 1; n <= 5; ++n) {
        CHECK(oracles::labelled_class_count(n) == expected[n]);
        CHECK(all_graphs(n).size() == expected[n]);
    }
}

TEST_CASE("enumeration is complete and irredundant at orders 6 and 7") {
    // Distinct canonical keys prove pairwise non-isomorphism; orbit sizes
    // summing to 2^C(n,2) prove every labelled graph is covered.
    const std::uint64_t expected_classes[] = {156, 1044};
    for (int n = 6; n <= 7; ++n) {
        const auto graphs = all_graphs(n);
        CHECK(graphs.size() == expected_classes[n - 6]);
        std::set<CanonicalKey> keys;
        std::uint64_t labelled_total = 0;
        std::vector<int> perm(n);
        for (const Graph& g : graphs) {
            keys.insert(emit_graph6(g));
            std::set<std::uint64_t> orbit;
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::uint64_t image = 0;
                for (int j = 1; j < n; ++j)
                    for (int i = 0; i < j; ++i) {
                        if (!g.has_edge(i, j)) continue;
                        int a = perm[i], b = perm[j];
                        if (a > b) std::swap(a, b);
                        image |= std::uint64_t{1} << edge_bit_index(a, b);
                    }
                orbit.insert(image);
            } while (std::next_permutation(perm.begin(), perm.end()));
            labelled_total += orbit.size();
        }
        CHECK(keys.size() == graphs.size());
        CHECK(labelled_total == std::uint64_t{1} << (n * (n - 1) / 2));
    }
}

TEST_CASE("enumeration emits canonical forms in increasing edge count") {
    int last_edges = 0;
    enumerate_graphs(5, [&](const Graph& g) {
        CHECK(g.edge_count() >= last_edges);
        last_edges = g.edge_count();
        CHECK(emit_graph6(g) == canonical_key(g));
    });
    CHECK_THROWS_AS(enumerate_graphs(8, [](const Graph&) {}), std::invalid_argument);
}

TEST_CASE("canonical form beyond the exhaustive range is the labelled identity") {
    const Graph g = turan(9, 3);
    CHECK(canonical_key(g) == emit_graph6(g));
}
