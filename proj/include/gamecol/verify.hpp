#ifndef GAMECOL_VERIFY_HPP
#define GAMECOL_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gamecol/cache.hpp"
#include "gamecol/graph.hpp"

namespace gamecol {

struct VerifyOptions {
    int jobs = 1;
    std::uint64_t budget = 500;  // sample count for randomized suites
    std::uint32_t seed = 1;
    bool extended = false;       // enables the order-7 universes
    InvariantCache* cache = nullptr;
};

struct WitnessRow {
    std::string kind;  // "failure" or "witness"
    std::string graph6;
    std::string invariant;
    std::string params;
    std::string value;
};

/// Outcome of one verification suite. `csv()` is deterministic for fixed
/// inputs (no timing data); `text()` adds the runtime for humans.
struct SuiteReport {
    std::string suite;
    std::string universe;
    std::vector<std::string> header;  // seed/budget lines for randomized suites
    bool pass = true;
    std::uint64_t checked = 0;
    std::vector<WitnessRow> rows;
    std::vector<std::string> notes;
    double seconds = 0.0;

    void fail(WitnessRow row);
    void witness(WitnessRow row);

    std::string text() const;
    std::string csv() const;
};

/// chi_g - chi <= floor(n/2) - 1 over every isomorphism class of order n
/// (2 <= n <= 7); equality witnesses are reported.
SuiteReport check_basic_bound(int n, const VerifyOptions& opts = {});

/// The computed equality set {chi_g - chi = floor(n/2) - 1} must match
/// equality_exception_predicate exactly (4 <= n <= 7).
SuiteReport classify_equality(int n, const VerifyOptions& opts = {});

/// chi_gb(G; D) <= p + floor(n/2) - 2 over (graph, independent partition,
/// marked subset) triples with s >= 1, or s = 0 when n >= 6 and G is not a
/// balanced Turan graph. Exhaustive for n <= 5; seeded sampling at n = 6.
SuiteReport check_partition_bound(int n, const VerifyOptions& opts = {});

/// Wherever at most ceil(k/2) vertices have degree >= k (n <= n_max,
/// k <= k_max): chi_gb <= k by the solver, and the greedy strategy beats the
/// exhaustive adversary at k colours.
SuiteReport check_greedy_bound(int n_max, int k_max, const VerifyOptions& opts = {});

/// Small-order bounds, by part:
///   1: order 6, not T(6,3): chi_gb <= chi + 1
///   2: order 7: chi_gb <= chi + 1 (extended only)
///   3: proper spanning subgraphs of T(6,3): chi_gb <= 4
///   4: spanning subgraphs of K_{2,4}: chi_gb <= 3
///   5: order 2, every partition, every marked subset with s >= 1:
///      chi_gb(G; D) <= p - 1
///   6: order 3, likewise: chi_gb(G; D) <= p - 1
///   7: orders 2..5: chi_gb <= chi + floor(n/2) - 1
SuiteReport check_small_order_bounds(int part, const VerifyOptions& opts = {});

/// For r in 2..r_max, every spanning subgraph of T(2r,r) and every choice of
/// s of its r size-2 classes: chi_gb(G; D) <= 2r - s - 1. For r = 2 the
/// blank-echo strategy is additionally verified against the exhaustive
/// adversary at the bound for s in {1,2}.
SuiteReport check_turan_marked_bound(int r_max, const VerifyOptions& opts = {});

/// Seeded sampling of conditioned games: chi_gb(G; E | P) <=
/// chi_gb(G - U; D', E') + |X| where U and X are the vertices and colours of
/// the prefix P and each D_i extends a colour class of P (n <= 6, t <= 2).
SuiteReport check_reduction_inequality(int samples, const VerifyOptions& opts = {});

/// Marking game on T(r^2, r): exact m, checked against m >= r(r-1).
SuiteReport check_marking_gap(int r, const VerifyOptions& opts = {});

/// Tabulates (chi, chi_g, chi_gb) for all orders <= n_max, asserts the
/// separating example's values (2, 2, 3) and reports every graph with
/// chi_gb > chi_g.
SuiteReport separation_report(int n_max, const VerifyOptions& opts = {});

// Shared helpers (also used by tests and the CLI).

/// Cached representative list, one canonical graph per isomorphism class.
const std::vector<Graph>& graphs_of_order(int n);

std::string format_classes(const std::vector<std::uint32_t>& classes);

/// CSV "graph6,invariant,params,value" over every isomorphism class of order
/// n. Invariants: chi, chi_g, chi_gb, m.
std::string enumerate_invariant_csv(int n, const std::string& invariant,
                                    const VerifyOptions& opts = {});

/// CSV "graph6,chi,chi_g,chi_gb" over all orders <= n_max.
std::string separation_data_csv(int n_max, const VerifyOptions& opts = {});

}  // namespace gamecol

#endif
