#include <doctest.h>

#include <stdexcept>

#include "gamecol/canonical.hpp"
#include "gamecol/colouring.hpp"
#include "gamecol/generators.hpp"
#include "gamecol/solver.hpp"
#include "oracles.hpp"

using namespace gamecol;

namespace {

Graph k2() {
    Graph g(2);
    g.add_edge(0, 1);
    return g;
}

}  // namespace

TEST_CASE("fixed-k values on complete graphs") {
    CHECK(solve_fixed_k({complete_graph(3), Variant::Plain, 2, {}}) == Winner::Breaker);
    CHECK(solve_fixed_k({complete_graph(3), Variant::Plain, 3, {}}) == Winner::Maker);
}

TEST_CASE("marked singleton on E2 flips at one colour") {
    const MarkedSelection marked{{0b01}};
    CHECK(solve_fixed_k({empty_graph(2), Variant::WithBlanks, 0, marked}) == Winner::Breaker);
    CHECK(solve_fixed_k({empty_graph(2), Variant::WithBlanks, 1, marked}) == Winner::Maker);
    CHECK(game_chromatic_blanks(empty_graph(2), marked) == 1);
}

TEST_CASE("profiles and values of easy graphs") {
    const SolveResult e3 = win_profile(empty_graph(3), Variant::Plain);
    CHECK(!e3.win[0]);
    for (int k = 1; k <= 3; ++k) CHECK(e3.win[k]);
    CHECK(e3.value == 1);

    // everything marked on an edgeless graph: win with zero colours
    const SolveResult all_marked =
        win_profile(empty_graph(3), Variant::WithBlanks, MarkedSelection{{0b111}});
    CHECK(all_marked.win[0]);
    CHECK(all_marked.value == 0);
}

TEST_CASE("the separating example: plain 2, blanks 3") {
    const Graph g = separating_example();
    const SolveResult plain = win_profile(g, Variant::Plain);
    CHECK(plain.win[2]);
    CHECK(plain.value == 2);
    CHECK(game_chromatic_blanks(g) == 3);
    CHECK(chromatic_number(g) == 2);
}

TEST_CASE("known plain game values") {
    CHECK(game_chromatic(path_graph(4)) == 3);
    CHECK(oracles::naive_value(path_graph(4), Variant::Plain) == 3);
    CHECK(game_chromatic(turan(6, 3)) == 5);
    CHECK(game_chromatic(complete_graph(4)) == 4);
    CHECK(game_chromatic(cycle_graph(4)) == 3);
}

TEST_CASE("known marking numbers") {
    CHECK(marking_number(complete_graph(4)) == 4);
    CHECK(oracles::naive_value(cycle_graph(4), Variant::Marking) == 3);
    CHECK(marking_number(turan(4, 2)) == 3);
    CHECK(marking_number(turan(9, 3)) >= 6);
}

TEST_CASE("canonical state key identifies colour-permuted states") {
    const GameSpec spec{path_graph(4), Variant::Plain, 7, {}};
    GameState a = initial_state(spec);
    GameState b = initial_state(spec);
    apply_move_unchecked(spec, a, Move::colour_at(0, 5));
    apply_move_unchecked(spec, b, Move::colour_at(0, 1));
    CHECK(canonical_state_key(spec, a) == canonical_state_key(spec, b));

    GameState c = a, d = b;
    apply_move_unchecked(spec, c, Move::colour_at(3, 7));
    apply_move_unchecked(spec, d, Move::colour_at(3, 2));
    CHECK(canonical_state_key(spec, c) == canonical_state_key(spec, d));

    // same assignments, different active sets -> different keys
    const GameSpec marked{empty_graph(3), Variant::WithBlanks, 1,
                          MarkedSelection{{0b001, 0b010}}};
    GameState e = initial_state(marked);
    GameState f = initial_state(marked);
    apply_move_unchecked(marked, e, Move::blank_at(0));
    apply_move_unchecked(marked, f, Move::blank_at(0));
    apply_move_unchecked(marked, e, Move::blank_at(2));
    apply_move_unchecked(marked, f, Move::blank_at(2, 1));
    CHECK(canonical_state_key(marked, e) != canonical_state_key(marked, f));
}

TEST_CASE("memoized solver matches the naive minimax on every small game") {
    // All graphs of order <= 4, every variant, k <= 4, marked selections of
    // at most two singleton-or-pair classes.
    for (int n = 1; n <= 4; ++n) {
        for (const Graph& g : all_graphs(n)) {
            for (int k = 0; k <= std::min(n, 4); ++k) {
                for (const Variant variant :
                     {Variant::Plain, Variant::Marking, Variant::WithBlanks}) {
                    const GameSpec spec{g, variant, k, {}};
                    CHECK(solve_fixed_k(spec) == oracles::naive_fixed_k(spec));
                }
                // marked selections (blanks variant only)
                std::vector<std::uint32_t> candidates;
                for (int v = 0; v < n; ++v) candidates.push_back(1u << v);
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (!g.has_edge(u, v)) candidates.push_back((1u << u) | (1u << v));
                for (std::size_t i = 0; i < candidates.size(); ++i) {
                    const GameSpec one{g, Variant::WithBlanks, k,
                                       MarkedSelection{{candidates[i]}}};
                    CHECK(solve_fixed_k(one) == oracles::naive_fixed_k(one));
                    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                        if (candidates[i] & candidates[j]) continue;
                        const GameSpec two{
                            g, Variant::WithBlanks, k,
                            MarkedSelection{{candidates[i], candidates[j]}}};
                        CHECK(solve_fixed_k(two) == oracles::naive_fixed_k(two));
                    }
                }
            }
        }
    }
}

TEST_CASE("prefix-conditioned solving") {
    // P4 after both endpoints take colour 1: three colours are needed.
    const Graph p4 = path_graph(4);
    const MovePrefix prefix = {Move::colour_at(0, 1), Move::colour_at(3, 1)};
    const SolveResult result = win_profile(p4, Variant::WithBlanks, {}, prefix);
    CHECK(result.value == 3);
    CHECK(!result.win[0]);  // the prefix itself needs one colour
    CHECK(!result.win[2]);

    // a prefix that is illegal at every k throws
    CHECK_THROWS_AS(
        win_profile(p4, Variant::Plain, {}, {Move::colour_at(0, 1), Move::colour_at(0, 1)}),
        PrefixError);
}

TEST_CASE("solver values are deterministic across repeated runs") {
    const Graph g = separating_example();
    const SolveResult first = win_profile(g, Variant::WithBlanks);
    const SolveResult second = win_profile(g, Variant::WithBlanks);
    CHECK(first.win == second.win);
    CHECK(first.value == second.value);
    CHECK(first.stats.nodes == second.stats.nodes);
    CHECK(first.stats.memo_hits == second.stats.memo_hits);
    CHECK(first.stats.distinct_states == second.stats.distinct_states);
}

TEST_CASE("solve_value agrees with the profile minimum") {
    for (const Graph& g : all_graphs(4)) {
        for (const Variant variant :
             {Variant::Plain, Variant::WithBlanks, Variant::Marking}) {
            CHECK(solve_value(g, variant) == win_profile(g, variant).value);
        }
    }
}

TEST_CASE("isolated vertices do not make the plain game harder") {
    // Appending an isolated vertex can help Maker (it acts as a pass) but
    // never pushes the value above max(value, 1).
    for (int n = 2; n <= 4; ++n) {
        for (const Graph& g : all_graphs(n)) {
            Graph bigger(g.n + 1);
            for (int v = 0; v < g.n; ++v) bigger.adj[v] = g.adj[v];
            const int value = game_chromatic(g);
            const int padded = game_chromatic(bigger);
            CHECK(padded <= std::max(value, 1));
        }
    }
}

TEST_CASE("memo cap fails open: capped solver still gets the right answer") {
    const GameSpec spec{turan(6, 3), Variant::WithBlanks, 4, {}};
    Solver uncapped(spec);
    Solver capped(spec, /*memo_cap=*/16);
    CHECK(capped.solve_from_start() == uncapped.solve_from_start());
    CHECK(capped.stats().distinct_states <= 16);
    CHECK(capped.stats().nodes >= uncapped.stats().nodes);
}

TEST_CASE("stats line shape") {
    const GameSpec spec{k2(), Variant::Plain, 2, {}};
    Solver solver(spec);
    const Winner w = solver.solve_from_start();
    const std::string line = stats_line(spec, w, solver.stats());
    CHECK(line.substr(0, 2) == "A_");
    CHECK(line.find("plain\t2\tMaker") != std::string::npos);
}
