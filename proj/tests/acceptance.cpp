// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Run with --extended to include the order-7 sweep (slow).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "gamecol/cache.hpp"
#include "gamecol/canonical.hpp"
#include "gamecol/colouring.hpp"
#include "gamecol/generators.hpp"
#include "gamecol/solver.hpp"
#include "gamecol/strategies.hpp"
#include "gamecol/verify.hpp"

using namespace gamecol;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

int failures = 0;

void report(const std::string& id, bool pass, double seconds, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ": " << detail << " ("
              << std::fixed << std::setprecision(2) << seconds << "s)" << std::endl;
    if (!pass) ++failures;
}

void skip(const std::string& id, const std::string& detail) {
    std::cout << "[SKIP] " << id << ": " << detail << std::endl;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j)
        threads.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        });
    for (auto& t : threads) t.join();
}

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    int jobs = static_cast<int>(std::min(8u, std::max(1u, std::thread::hardware_concurrency())));
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--extended") == 0) extended = true;
        else if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) jobs = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--extended] [--jobs N]\n";
            return 2;
        }
    }

    InvariantCache cache;
    VerifyOptions opts;
    opts.jobs = jobs;
    opts.cache = &cache;
    opts.extended = extended;

    // C1: the basic bound over every graph of orders 2..6.
    {
        Timer timer;
        bool pass = true;
        std::uint64_t total = 0;
        for (int n = 2; n <= 6; ++n) {
            const SuiteReport r = check_basic_bound(n, opts);
            pass = pass && r.pass;
            total += r.checked;
        }
        pass = pass && total == 207 && timer.seconds() <= 600;
        report("C1", pass, timer.seconds(),
               "chi_g - chi <= floor(n/2) - 1 on all " + std::to_string(total) +
                   " graphs of orders 2..6");
    }

    // C2: equality classification at orders 4..6.
    {
        Timer timer;
        bool pass = true;
        std::string detail;
        for (int n = 4; n <= 6; ++n) {
            const SuiteReport r = classify_equality(n, opts);
            pass = pass && r.pass;
        }
        // the order-6 equality set is exactly {T(6,3)}
        {
            const SuiteReport r = classify_equality(6, opts);
            std::set<std::string> computed;
            for (const auto& row : r.rows)
                if (row.kind == "witness") computed.insert(row.graph6);
            const std::set<std::string> expected = {canonical_key(turan(6, 3))};
            pass = pass && computed == expected;
        }
        // the order-5 equality set contains K_{2,3}
        {
            const SuiteReport r = classify_equality(5, opts);
            bool saw = false;
            for (const auto& row : r.rows)
                if (row.kind == "witness" && row.graph6 == canonical_key(complete_bipartite(2, 3)))
                    saw = true;
            pass = pass && saw;
        }
        report("C2", pass, timer.seconds(),
               "equality sets match the predicate at orders 4..6; order-6 set is {T(6,3)}");
    }

    // C3 (extended): order-7 sweep, difference at most 1.
    if (extended) {
        Timer timer;
        const SuiteReport basic = check_basic_bound(7, opts);
        const SuiteReport equality = classify_equality(7, opts);
        std::uint64_t at_two = 0;
        for (const auto& row : equality.rows)
            if (row.kind == "witness") ++at_two;
        const bool pass = basic.pass && basic.checked == 1044 && equality.pass && at_two == 0 &&
                          timer.seconds() <= 7200;
        report("C3", pass, timer.seconds(),
               "chi_g - chi <= 1 on all 1044 graphs of order 7");
    } else {
        skip("C3", "order-7 sweep (run with --extended, budget <= 2h)");
    }

    // C4: the separating example evaluates to (2, 2, 3).
    {
        Timer timer;
        const Graph g = separating_example();
        const int chi = chromatic_number(g);
        const int chi_g = game_chromatic(g);
        const int chi_gb = game_chromatic_blanks(g);
        const bool pass = chi == 2 && chi_g == 2 && chi_gb == 3;
        report("C4", pass, timer.seconds(),
               "four-cycle + pendant + isolate gives (chi, chi_g, chi_gb) = (" +
                   std::to_string(chi) + ", " + std::to_string(chi_g) + ", " +
                   std::to_string(chi_gb) + "), expected (2, 2, 3)");
    }

    // C5: degenerate marked-class cases.
    {
        Timer timer;
        bool pass = true;
        for (int n = 1; n <= 6; ++n) {
            const Graph g = empty_graph(n);
            const MarkedSelection whole{{g.vertex_mask()}};
            pass = pass && game_chromatic_blanks(g, whole) == 0;
        }
        pass = pass && game_chromatic_blanks(empty_graph(2), MarkedSelection{{0b01}}) == 1;
        pass = pass && check_small_order_bounds(5, opts).pass;
        pass = pass && check_small_order_bounds(6, opts).pass;
        report("C5", pass, timer.seconds(),
               "chi_gb(E_n; V) = 0, chi_gb(E_2; {x}) = 1, order 2..3 marked bounds hold");
    }

    // C6: greedy bound and strategy, every graph of order <= 6, k <= 6.
    {
        Timer timer;
        const SuiteReport r = check_greedy_bound(6, 6, opts);
        const bool pass = r.pass && timer.seconds() <= 900;
        report("C6", pass, timer.seconds(),
               "greedy bound and exhaustive-adversary verification on " +
                   std::to_string(r.checked) + " (graph, k) pairs");
    }

    // C7: marked Turan bound for r in {2,3} plus the blank-echo witness.
    {
        Timer timer;
        const SuiteReport r = check_turan_marked_bound(3, opts);
        report("C7", r.pass, timer.seconds(),
               "chi_gb(G; D) <= 2r - s - 1 on " + std::to_string(r.checked) +
                   " (subgraph, selection) instances, blank-echo verified at r = 2");
    }

    // C8: spanning-subgraph bounds (T(6,3) proper, K_{2,4} with the 2-side).
    {
        Timer timer;
        const SuiteReport part3 = check_small_order_bounds(3, opts);
        const SuiteReport part4 = check_small_order_bounds(4, opts);
        report("C8", part3.pass && part4.pass, timer.seconds(),
               "chi_gb <= 4 on proper spanning subgraphs of T(6,3) (" +
                   std::to_string(part3.checked) + "), chi_gb <= 3 on spanning subgraphs " +
                   "of K_{2,4} (" + std::to_string(part4.checked) + ")");
    }

    // C9: the partition bound, exhaustive for n <= 5 and sampled at n = 6.
    {
        Timer timer;
        bool pass = true;
        std::uint64_t exhaustive = 0;
        for (int n = 2; n <= 5; ++n) {
            const SuiteReport r = check_partition_bound(n, opts);
            pass = pass && r.pass;
            exhaustive += r.checked;
        }
        VerifyOptions sample = opts;
        sample.budget = 500;
        sample.seed = 1;
        const SuiteReport n6 = check_partition_bound(6, sample);
        pass = pass && n6.pass && n6.checked >= 500;
        report("C9", pass, timer.seconds(),
               "chi_gb(G; D) <= p + floor(n/2) - 2 on " + std::to_string(exhaustive) +
                   " exhaustive instances (n <= 5) and " + std::to_string(n6.checked) +
                   " seeded samples at n = 6");
    }

    // C10: the reduction inequality on seeded prefix instances.
    {
        Timer timer;
        VerifyOptions sample = opts;
        sample.seed = 1;
        const SuiteReport r = check_reduction_inequality(100, sample);
        const bool pass = r.pass && r.checked >= 100;
        report("C10", pass, timer.seconds(),
               "chi_gb(G; E|P) <= chi_gb(G'; D', E') + |X| on " + std::to_string(r.checked) +
                   " sampled instances");
    }

    // C11: marking numbers of T(4,2) and T(9,3).
    {
        Timer timer;
        const int m42 = marking_number(turan(4, 2));
        const int m93 = marking_number(turan(9, 3));
        const bool pass = m42 >= 2 && m93 >= 6 && timer.seconds() <= 60;
        report("C11", pass, timer.seconds(),
               "m(T(4,2)) = " + std::to_string(m42) + " >= 2, m(T(9,3)) = " +
                   std::to_string(m93) + " >= 6");
    }

    // C12: property suites.
    {
        Timer timer;
        bool pass = true;
        std::string broken;

        // blanks-game profiles are upward closed in k, and chi <= chi_g <= chi_gb
        for (int n = 1; n <= 6 && pass; ++n) {
            const auto& graphs = graphs_of_order(n);
            std::vector<std::string> errors(graphs.size());
            parallel_for(graphs.size(), jobs, [&](std::size_t i) {
                const Graph& g = graphs[i];
                const SolveResult blanks = win_profile(g, Variant::WithBlanks);
                for (std::size_t k = 1; k < blanks.win.size(); ++k)
                    if (blanks.win[k - 1] && !blanks.win[k])
                        errors[i] = "monotonicity: " + emit_graph6(g);
                const int chi = chromatic_number(g);
                const int chi_g = solve_value(g, Variant::Plain);
                if (!(chi <= chi_g && chi_g <= blanks.value))
                    errors[i] = "chain chi<=chi_g<=chi_gb: " + emit_graph6(g);
            });
            for (const auto& e : errors)
                if (!e.empty()) {
                    pass = false;
                    broken = e;
                }
        }

        // marked classes never hurt Maker (exhaustive over order <= 4)
        for (int n = 1; n <= 4 && pass; ++n) {
            for (const Graph& g : graphs_of_order(n)) {
                const int plain_value = solve_value(g, Variant::WithBlanks);
                for (const Partition& part : independent_partitions(g, n)) {
                    for (std::uint32_t smask = 1; smask < (1u << part.p()); ++smask) {
                        std::vector<std::uint32_t> selected;
                        for (int c = 0; c < part.p(); ++c)
                            if ((smask >> c) & 1u) selected.push_back(part.classes[c]);
                        const int marked_value =
                            solve_value(g, Variant::WithBlanks, {selected});
                        if (marked_value > plain_value) {
                            pass = false;
                            broken = "marked classes hurt Maker: " + emit_graph6(g);
                        }
                    }
                }
            }
        }

        // memoized solver vs naive minimax on every graph of order <= 4
        // (the unit suite additionally covers marked selections)
        for (int n = 1; n <= 4 && pass; ++n) {
            for (const Graph& g : graphs_of_order(n)) {
                for (int k = 0; k <= n; ++k) {
                    for (const Variant variant :
                         {Variant::Plain, Variant::WithBlanks, Variant::Marking}) {
                        const GameSpec spec{g, variant, k, {}};
                        GameState state = initial_state(spec);
                        // naive minimax, inline
                        const std::function<Winner(const GameState&)> naive =
                            [&](const GameState& s) -> Winner {
                            const Status st = status(spec, s);
                            if (st == Status::MakerWin) return Winner::Maker;
                            if (st == Status::BreakerWin) return Winner::Breaker;
                            const bool maker = s.maker_to_move();
                            for (const Move& m : legal_moves(spec, s)) {
                                GameState child = s;
                                apply_move_unchecked(spec, child, m);
                                const Winner w = naive(child);
                                if (maker == (w == Winner::Maker)) return w;
                            }
                            return maker ? Winner::Breaker : Winner::Maker;
                        };
                        if (solve_fixed_k(spec) != naive(state)) {
                            pass = false;
                            broken = "memo vs naive: " + emit_graph6(g);
                        }
                    }
                }
            }
        }
        for (int n = 1; n <= 6 && pass; ++n) {
            for (const Graph& g : graphs_of_order(n)) {
                if (parse_graph6(emit_graph6(g)) != g) {
                    pass = false;
                    broken = "graph6 round-trip: " + emit_graph6(g);
                }
            }
        }
        if (pass) {
            std::mt19937 rng(1);
            for (int trial = 0; trial < 500 && pass; ++trial) {
                const int n = 2 + int(rng() % 5);
                const int bits = n * (n - 1) / 2;
                const Graph g = graph_from_edge_mask(n, rng() & ((1u << bits) - 1));
                std::array<int, kMaxVertices> perm{};
                for (int v = 0; v < n; ++v) perm[v] = v;
                std::shuffle(perm.begin(), perm.begin() + n, rng);
                if (canonical_key(g) != canonical_key(relabel(g, perm))) {
                    pass = false;
                    broken = "canonical key invariance";
                }
            }
        }
        pass = pass && timer.seconds() <= 600;
        report("C12", pass, timer.seconds(),
               broken.empty() ? "profile monotonicity, invariant chain, marked-help, "
                                "memo-vs-naive, round-trips, key invariance"
                              : broken);
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures;
}
