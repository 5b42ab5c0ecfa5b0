#include "gamecol/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gamecol/canonical.hpp"
#include "gamecol/colouring.hpp"
#include "gamecol/generators.hpp"
#include "gamecol/solver.hpp"
#include "gamecol/strategies.hpp"

namespace gamecol {

void SuiteReport::fail(WitnessRow row) {
    pass = false;
    row.kind = "failure";
    rows.push_back(std::move(row));
}

void SuiteReport::witness(WitnessRow row) {
    row.kind = "witness";
    rows.push_back(std::move(row));
}

std::string SuiteReport::text() const {
    std::ostringstream out;
    out << "== suite " << suite << " ==\n";
    out << "universe: " << universe << "\n";
    for (const auto& line : header) out << line << "\n";
    out << "checked: " << checked << "\n";
    for (const auto& row : rows)
        out << row.kind << ": " << row.graph6 << "  " << row.invariant
            << (row.params.empty() ? "" : "  [" + row.params + "]") << " = " << row.value
            << "\n";
    for (const auto& note : notes) out << "note: " << note << "\n";
    out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string SuiteReport::csv() const {
    std::string out = "suite,kind,graph6,invariant,params,value\n";
    for (const auto& row : rows)
        out += csv_field(suite) + "," + csv_field(row.kind) + "," + csv_field(row.graph6) +
               "," + csv_field(row.invariant) + "," + csv_field(row.params) + "," +
               csv_field(row.value) + "\n";
    return out;
}

const std::vector<Graph>& graphs_of_order(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    const std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, all_graphs(n)).first;
    return it->second;
}

std::string format_classes(const std::vector<std::uint32_t>& classes) {
    std::string out;
    for (std::uint32_t mask : classes) {
        if (!out.empty()) out.push_back(';');
        out += format_vertex_set(mask);
    }
    return out;
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// Fully specified generator so seeded suites reproduce across platforms
// (std::uniform_int_distribution is not portable).
struct Rng {
    std::mt19937 engine;
    explicit Rng(std::uint32_t seed) : engine(seed) {}
    std::uint32_t below(std::uint32_t n) { return n ? engine() % n : 0; }
};

// Runs fn(index, shard) over 0..count-1 on opts.jobs threads. Every worker
// owns a private cache shard reading through to opts.cache; shards are
// merged (and conflict-audited) once all workers finish.
void parallel_items(std::size_t count, const VerifyOptions& opts,
                    const std::function<void(std::size_t, CacheShard*)>& fn) {
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || count <= 1) {
        CacheShard shard(opts.cache);
        for (std::size_t i = 0; i < count; ++i) fn(i, &shard);
        if (opts.cache) opts.cache->merge_from(shard.local());
        return;
    }
    std::vector<std::unique_ptr<CacheShard>> shards;
    for (int j = 0; j < jobs; ++j) shards.push_back(std::make_unique<CacheShard>(opts.cache));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int j = 0; j < jobs; ++j) {
        threads.emplace_back([&, j] {
            try {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= count) break;
                    fn(i, shards[j].get());
                }
            } catch (...) {
                errors[j] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    if (opts.cache)
        for (auto& s : shards) opts.cache->merge_from(s->local());
}

// Labelled key for the reports (the enumerated representatives are their own
// canonical forms, so this doubles as the canonical key there).
std::string graph_key(const Graph& g) { return emit_graph6(g); }

// Isomorphism-invariant entries share one cache slot per class.
long long chi_of(const Graph& g, CacheShard* shard) {
    return cached_int(shard, canonical_key(g), "chi", "", [&] { return chromatic_number(g); });
}

long long chi_g_of(const Graph& g, CacheShard* shard) {
    return cached_int(shard, canonical_key(g), "chi_g", "",
                      [&] { return solve_value(g, Variant::Plain); });
}

long long chi_gb_of(const Graph& g, CacheShard* shard) {
    return cached_int(shard, canonical_key(g), "chi_gb", "",
                      [&] { return solve_value(g, Variant::WithBlanks); });
}

long long m_of(const Graph& g, CacheShard* shard) {
    return cached_int(shard, canonical_key(g), "m", "",
                      [&] { return solve_value(g, Variant::Marking); });
}

// Parameterized entries key by the labelled graph: the parameters name
// vertices of that labelling, so canonicalizing would conflate instances.
long long chi_gb_marked_of(const Graph& g, const std::vector<std::uint32_t>& classes,
                           CacheShard* shard) {
    if (classes.empty()) return chi_gb_of(g, shard);
    return cached_int(shard, graph_key(g), "chi_gb_marked", "marked=" + format_classes(classes),
                      [&] { return solve_value(g, Variant::WithBlanks, {classes}); });
}

std::string prefix_param(const MovePrefix& prefix) {
    std::string out;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (i) out.push_back(';');
        std::string move = format_move(i % 2 == 0, prefix[i]);
        for (char& c : move)
            if (c == ' ') c = '_';
        out += move;
    }
    return out;
}

long long chi_gb_prefixed_of(const Graph& g, const std::vector<std::uint32_t>& classes,
                             const MovePrefix& prefix, CacheShard* shard) {
    if (prefix.empty()) return chi_gb_marked_of(g, classes, shard);
    const std::string params =
        "marked=" + format_classes(classes) + " prefix=" + prefix_param(prefix);
    return cached_int(shard, graph_key(g), "chi_gb_prefixed", params, [&] {
        return solve_value(g, Variant::WithBlanks, {classes}, prefix);
    });
}

SuiteReport gated_report(std::string suite, std::string universe) {
    SuiteReport report;
    report.suite = std::move(suite);
    report.universe = std::move(universe);
    report.notes.push_back("skipped: requires the extended flag");
    return report;
}

}  // namespace

SuiteReport check_basic_bound(int n, const VerifyOptions& opts) {
    if (n < 2 || n > 7) throw std::invalid_argument("check_basic_bound: need 2 <= n <= 7");
    const std::string id = "basic(n=" + std::to_string(n) + ")";
    if (n == 7 && !opts.extended)
        return gated_report(id, "all isomorphism classes of order 7");
    Timer timer;
    SuiteReport report;
    report.suite = id;
    const int bound = n / 2 - 1;
    report.universe = "all isomorphism classes of order " + std::to_string(n) +
                      "; chi_g - chi <= " + std::to_string(bound);
    const auto& graphs = graphs_of_order(n);
    std::vector<std::pair<long long, long long>> values(graphs.size());
    parallel_items(graphs.size(), opts, [&](std::size_t i, CacheShard* shard) {
        values[i] = {chi_of(graphs[i], shard), chi_g_of(graphs[i], shard)};
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto [chi, chi_g] = values[i];
        const long long diff = chi_g - chi;
        WitnessRow row{"", graph_key(graphs[i]), "chi_g-chi", "n=" + std::to_string(n),
                       std::to_string(diff)};
        if (diff > bound) report.fail(row);
        else if (diff == bound) report.witness(row);
    }
    report.checked = graphs.size();
    report.seconds = timer.seconds();
    return report;
}

SuiteReport classify_equality(int n, const VerifyOptions& opts) {
    if (n < 4 || n > 7) throw std::invalid_argument("classify_equality: need 4 <= n <= 7");
    const std::string id = "equality(n=" + std::to_string(n) + ")";
    if (n == 7 && !opts.extended)
        return gated_report(id, "equality classification at order 7");
    Timer timer;
    SuiteReport report;
    report.suite = id;
    const int bound = n / 2 - 1;
    report.universe = "order " + std::to_string(n) + ": {chi_g - chi = " +
                      std::to_string(bound) + "} vs the exception predicate";
    const auto& graphs = graphs_of_order(n);
    std::vector<std::pair<long long, long long>> values(graphs.size());
    parallel_items(graphs.size(), opts, [&](std::size_t i, CacheShard* shard) {
        values[i] = {chi_of(graphs[i], shard), chi_g_of(graphs[i], shard)};
    });
    std::set<std::string> computed;
    std::set<std::string> predicted;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const std::string key = graph_key(graphs[i]);
        if (values[i].second - values[i].first == bound) computed.insert(key);
        if (equality_exception_predicate(graphs[i])) predicted.insert(key);
    }
    for (const auto& key : computed) {
        if (!predicted.count(key))
            report.fail({"", key, "equality-set", "computed-only", "1"});
        else
            report.witness({"", key, "equality-set", "n=" + std::to_string(n), "1"});
    }
    for (const auto& key : predicted)
        if (!computed.count(key)) report.fail({"", key, "equality-set", "predicate-only", "0"});
    report.checked = graphs.size();
    report.notes.push_back("equality set size: " + std::to_string(computed.size()));
    report.seconds = timer.seconds();
    return report;
}

namespace {

struct MarkedInstance {
    int graph_index = 0;
    Partition partition;
    std::uint32_t class_subset = 0;

    std::vector<std::uint32_t> selected() const {
        std::vector<std::uint32_t> out;
        for (int i = 0; i < partition.p(); ++i)
            if ((class_subset >> i) & 1u) out.push_back(partition.classes[i]);
        return out;
    }
};

// Every (partition, subset of classes) pair with s >= 1 for each graph of
// order n.
std::vector<MarkedInstance> exhaustive_marked_instances(int n) {
    std::vector<MarkedInstance> out;
    const auto& graphs = graphs_of_order(n);
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        for (const Partition& part : independent_partitions(graphs[gi], n)) {
            const std::uint32_t subsets = 1u << part.p();
            for (std::uint32_t smask = 1; smask < subsets; ++smask)
                out.push_back({static_cast<int>(gi), part, smask});
        }
    }
    return out;
}

void check_marked_instances(SuiteReport& report, const std::vector<Graph>& graphs,
                            const std::vector<MarkedInstance>& instances, int bound_base,
                            const VerifyOptions& opts) {
    // bound = p + bound_base for each instance
    std::vector<long long> values(instances.size());
    parallel_items(instances.size(), opts, [&](std::size_t i, CacheShard* shard) {
        const auto& inst = instances[i];
        values[i] = chi_gb_marked_of(graphs[inst.graph_index], inst.selected(), shard);
    });
    constexpr std::size_t kEqualityRowCap = 50;
    std::size_t equal_count = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& inst = instances[i];
        const long long bound = inst.partition.p() + bound_base;
        const std::string params = "partition=" + format_partition(inst.partition) +
                                   " marked=" + format_classes(inst.selected());
        if (values[i] > bound) {
            report.fail({"", graph_key(graphs[inst.graph_index]), "chi_gb_marked", params,
                         std::to_string(values[i])});
        } else if (values[i] == bound) {
            ++equal_count;
            if (equal_count <= kEqualityRowCap)
                report.witness({"", graph_key(graphs[inst.graph_index]), "chi_gb_marked",
                                params, std::to_string(values[i])});
        }
    }
    report.checked += instances.size();
    report.notes.push_back("instances meeting the bound exactly: " +
                           std::to_string(equal_count) + " (first " +
                           std::to_string(std::min(equal_count, kEqualityRowCap)) +
                           " listed)");
}

}  // namespace

SuiteReport check_partition_bound(int n, const VerifyOptions& opts) {
    if (n < 2 || n > 6) throw std::invalid_argument("check_partition_bound: need 2 <= n <= 6");
    Timer timer;
    SuiteReport report;
    report.suite = "main(n=" + std::to_string(n) + ")";
    const int bound_base = n / 2 - 2;
    const auto& graphs = graphs_of_order(n);
    std::vector<MarkedInstance> instances;
    if (n <= 5) {
        report.universe = "order " + std::to_string(n) +
                          ", every independent partition, every marked subset with s >= 1; "
                          "chi_gb(G;D) <= p + " +
                          std::to_string(bound_base);
        instances = exhaustive_marked_instances(n);
    } else {
        report.universe =
            "order 6, seeded samples over (partition, marked subset) triples with s >= 1 "
            "or (s = 0 and G not the balanced Turan graph); chi_gb(G;D) <= p + 1";
        report.header.push_back("seed: " + std::to_string(opts.seed));
        report.header.push_back("budget: " + std::to_string(opts.budget));
        Rng rng(opts.seed);
        const std::string turan_key = graph_key(canonical_form(turan(6, 3)));
        std::vector<std::vector<Partition>> parts(graphs.size());
        std::set<std::tuple<int, std::size_t, std::uint32_t>> seen;
        std::uint64_t attempts = 0;
        const std::uint64_t attempt_cap = opts.budget * 1000;
        while (instances.size() < opts.budget && attempts < attempt_cap) {
            ++attempts;
            const int gi = static_cast<int>(rng.below(static_cast<std::uint32_t>(graphs.size())));
            if (parts[gi].empty()) parts[gi] = independent_partitions(graphs[gi], 6);
            const std::size_t pi = rng.below(static_cast<std::uint32_t>(parts[gi].size()));
            const std::uint32_t smask = rng.below(1u << parts[gi][pi].p());
            if (smask == 0 && graph_key(graphs[gi]) == turan_key) continue;
            if (!seen.insert({gi, pi, smask}).second) continue;
            instances.push_back({gi, parts[gi][pi], smask});
        }
        if (instances.size() < opts.budget)
            report.notes.push_back("sampling exhausted after " + std::to_string(attempts) +
                                   " attempts");
    }
    check_marked_instances(report, graphs, instances, bound_base, opts);
    report.seconds = timer.seconds();
    return report;
}

SuiteReport check_greedy_bound(int n_max, int k_max, const VerifyOptions& opts) {
    if (n_max < 1 || n_max > 6)
        throw std::invalid_argument("check_greedy_bound: need 1 <= n_max <= 6");
    Timer timer;
    SuiteReport report;
    report.suite = "greedy(n<=" + std::to_string(n_max) + ",k<=" + std::to_string(k_max) + ")";
    report.universe =
        "graphs with at most ceil(k/2) vertices of degree >= k: chi_gb <= k and the "
        "greedy strategy wins every Breaker line at k colours";
    struct Item {
        int n;
        int graph_index;
        int k;
    };
    std::vector<Item> items;
    for (int n = 1; n <= n_max; ++n) {
        const auto& graphs = graphs_of_order(n);
        for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
            for (int k = 0; k <= k_max; ++k) {
                int high_degree = 0;
                for (int v = 0; v < n; ++v)
                    if (graphs[gi].degree(v) >= k) ++high_degree;
                if (high_degree <= (k + 1) / 2) items.push_back({n, static_cast<int>(gi), k});
            }
        }
    }
    struct Outcome {
        long long value = 0;
        bool strategy_wins = false;
        std::string counterexample;
        std::uint64_t lines = 0;
    };
    std::vector<Outcome> outcomes(items.size());
    parallel_items(items.size(), opts, [&](std::size_t i, CacheShard* shard) {
        const auto& item = items[i];
        const Graph& g = graphs_of_order(item.n)[item.graph_index];
        Outcome& out = outcomes[i];
        out.value = chi_gb_of(g, shard);
        const GameSpec spec{g, Variant::WithBlanks, item.k, {}};
        const auto strategy = greedy_strategy(item.k);
        const StrategyVerdict verdict = verify_strategy(spec, nullptr, *strategy);
        out.strategy_wins = verdict.wins_all_lines;
        out.lines = verdict.lines_explored;
        if (verdict.counterexample) {
            out.counterexample = prefix_param(*verdict.counterexample);
        }
    });
    std::uint64_t total_lines = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& item = items[i];
        const std::string key = graph_key(graphs_of_order(item.n)[item.graph_index]);
        const std::string params = "k=" + std::to_string(item.k);
        if (outcomes[i].value > item.k)
            report.fail({"", key, "chi_gb", params, std::to_string(outcomes[i].value)});
        if (!outcomes[i].strategy_wins)
            report.fail({"", key, "greedy_strategy", params,
                         "counterexample=" + outcomes[i].counterexample});
        total_lines += outcomes[i].lines;
    }
    report.checked = items.size();
    report.notes.push_back("adversary lines explored: " + std::to_string(total_lines));
    report.seconds = timer.seconds();
    return report;
}

namespace {

// Distinct spanning subgraphs of `host` up to isomorphism, optionally
// excluding the host itself.
std::vector<Graph> spanning_subgraphs_up_to_iso(const Graph& host, bool proper_only) {
    const std::uint64_t full = edge_mask_of(host);
    std::set<std::string> seen;
    std::vector<Graph> out;
    for (std::uint64_t drop = 0;; drop = (drop - full) & full) {
        if (!(proper_only && drop == 0)) {
            const Graph sub = graph_from_edge_mask(host.n, full & ~drop);
            if (seen.insert(canonical_key(sub)).second) out.push_back(canonical_form(sub));
        }
        if (drop == full) break;
    }
    return out;
}

void check_value_bound(SuiteReport& report, const std::vector<Graph>& graphs,
                       const std::function<long long(std::size_t)>& bound_of,
                       const std::string& invariant, const VerifyOptions& opts) {
    std::vector<long long> values(graphs.size());
    parallel_items(graphs.size(), opts, [&](std::size_t i, CacheShard* shard) {
        values[i] = chi_gb_of(graphs[i], shard);
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (values[i] > bound_of(i))
            report.fail({"", graph_key(graphs[i]), invariant,
                         "bound=" + std::to_string(bound_of(i)), std::to_string(values[i])});
    }
    report.checked += graphs.size();
}

}  // namespace

SuiteReport check_small_order_bounds(int part, const VerifyOptions& opts) {
    Timer timer;
    SuiteReport report;
    report.suite = "base(part=" + std::to_string(part) + ")";
    switch (part) {
        case 1: {
            report.universe = "order 6 except the balanced Turan graph: chi_gb <= chi + 1";
            const std::string turan_key = graph_key(canonical_form(turan(6, 3)));
            std::vector<Graph> graphs;
            for (const Graph& g : graphs_of_order(6))
                if (graph_key(g) != turan_key) graphs.push_back(g);
            std::vector<long long> chi(graphs.size());
            parallel_items(graphs.size(), opts, [&](std::size_t i, CacheShard* shard) {
                chi[i] = chi_of(graphs[i], shard);
            });
            check_value_bound(report, graphs, [&](std::size_t i) { return chi[i] + 1; },
                              "chi_gb", opts);
            break;
        }
        case 2: {
            if (!opts.extended)
                return gated_report(report.suite, "order 7: chi_gb <= chi + 1");
            report.universe = "order 7: chi_gb <= chi + 1";
            const auto& graphs = graphs_of_order(7);
            std::vector<long long> chi(graphs.size());
            parallel_items(graphs.size(), opts, [&](std::size_t i, CacheShard* shard) {
                chi[i] = chi_of(graphs[i], shard);
            });
            check_value_bound(report, graphs, [&](std::size_t i) { return chi[i] + 1; },
                              "chi_gb", opts);
            break;
        }
        case 3: {
            report.universe = "proper spanning subgraphs of T(6,3) up to isomorphism: "
                              "chi_gb <= 4";
            const std::vector<Graph> graphs =
                spanning_subgraphs_up_to_iso(turan(6, 3), /*proper_only=*/true);
            check_value_bound(report, graphs, [](std::size_t) { return 4; }, "chi_gb", opts);
            break;
        }
        case 4: {
            report.universe =
                "spanning subgraphs of K_{2,4} up to isomorphism: chi_gb <= 3";
            const std::vector<Graph> graphs =
                spanning_subgraphs_up_to_iso(complete_bipartite(2, 4), /*proper_only=*/false);
            check_value_bound(report, graphs, [](std::size_t) { return 3; }, "chi_gb", opts);
            break;
        }
        case 5:
        case 6: {
            const int n = part == 5 ? 2 : 3;
            report.universe = "order " + std::to_string(n) +
                              ", every partition and marked subset with s >= 1: "
                              "chi_gb(G;D) <= p - 1";
            check_marked_instances(report, graphs_of_order(n),
                                   exhaustive_marked_instances(n), /*bound_base=*/-1, opts);
            break;
        }
        case 7: {
            report.universe = "orders 2..5: chi_gb <= chi + floor(n/2) - 1";
            std::vector<Graph> graphs;
            std::vector<int> order;
            for (int n = 2; n <= 5; ++n)
                for (const Graph& g : graphs_of_order(n)) {
                    graphs.push_back(g);
                    order.push_back(n);
                }
            std::vector<long long> chi(graphs.size());
            parallel_items(graphs.size(), opts, [&](std::size_t i, CacheShard* shard) {
                chi[i] = chi_of(graphs[i], shard);
            });
            check_value_bound(report, graphs,
                              [&](std::size_t i) { return chi[i] + order[i] / 2 - 1; },
                              "chi_gb", opts);
            break;
        }
        default:
            throw std::invalid_argument("check_small_order_bounds: part must be 1..7");
    }
    report.seconds = timer.seconds();
    return report;
}

namespace {

// Vertex permutations preserving the size-2 class structure of T(2r,r):
// permute classes, swap within classes.
std::vector<std::array<int, kMaxVertices>> turan_symmetries(int r) {
    std::vector<std::array<int, kMaxVertices>> out;
    std::vector<int> sigma(r);
    for (int i = 0; i < r; ++i) sigma[i] = i;
    do {
        for (std::uint32_t swaps = 0; swaps < (1u << r); ++swaps) {
            std::array<int, kMaxVertices> perm{};
            for (int i = 0; i < r; ++i)
                for (int b = 0; b < 2; ++b)
                    perm[2 * i + b] = 2 * sigma[i] + (b ^ static_cast<int>((swaps >> i) & 1u));
            out.push_back(perm);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

}  // namespace

SuiteReport check_turan_marked_bound(int r_max, const VerifyOptions& opts) {
    if (r_max < 2 || r_max > 4)
        throw std::invalid_argument("check_turan_marked_bound: need 2 <= r_max <= 4");
    Timer timer;
    SuiteReport report;
    report.suite = "annotated(r<=" + std::to_string(r_max) + ")";
    report.universe =
        "spanning subgraphs of T(2r,r) with s of the r classes marked: "
        "chi_gb(G;D) <= 2r - s - 1, for r = 2.." +
        std::to_string(r_max);
    struct Item {
        int r;
        std::uint64_t emask;
        std::uint32_t smask;
    };
    std::vector<Item> items;
    for (int r = 2; r <= r_max; ++r) {
        const Graph host = turan(2 * r, r);
        const std::uint64_t full = edge_mask_of(host);
        const auto symmetries = turan_symmetries(r);
        // Edge-bit and class-index action of each symmetry.
        std::vector<std::array<std::uint8_t, 28>> edge_maps;
        std::vector<std::array<int, 8>> class_maps;
        for (const auto& perm : symmetries) {
            auto& emap = edge_maps.emplace_back();
            for (int j = 1; j < host.n; ++j)
                for (int i = 0; i < j; ++i) {
                    int a = perm[i], b = perm[j];
                    if (a > b) std::swap(a, b);
                    emap[edge_bit_index(i, j)] =
                        static_cast<std::uint8_t>(edge_bit_index(a, b));
                }
            auto& cmap = class_maps.emplace_back();
            for (int i = 0; i < r; ++i) cmap[i] = perm[2 * i] / 2;
        }
        for (std::uint64_t drop = 0;; drop = (drop - full) & full) {
            const std::uint64_t emask = full & ~drop;
            for (std::uint32_t smask = 0; smask < (1u << r); ++smask) {
                // Keep only the lexicographic minimum of the joint orbit.
                bool canonical = true;
                for (std::size_t s = 0; s < symmetries.size() && canonical; ++s) {
                    std::uint64_t pe = 0;
                    for (std::uint64_t rest = emask; rest;) {
                        const int b = std::countr_zero(rest);
                        rest &= rest - 1;
                        pe |= std::uint64_t{1} << edge_maps[s][b];
                    }
                    std::uint32_t ps = 0;
                    for (int i = 0; i < r; ++i)
                        if ((smask >> i) & 1u) ps |= 1u << class_maps[s][i];
                    if (pe < emask || (pe == emask && ps < smask)) canonical = false;
                }
                if (canonical) items.push_back({r, emask, smask});
            }
            if (drop == full) break;
        }
    }
    std::vector<long long> values(items.size());
    parallel_items(items.size(), opts, [&](std::size_t i, CacheShard* shard) {
        const auto& item = items[i];
        const Graph g = graph_from_edge_mask(2 * item.r, item.emask);
        std::vector<std::uint32_t> selected;
        const auto classes = turan_classes(2 * item.r, item.r);
        for (int c = 0; c < item.r; ++c)
            if ((item.smask >> c) & 1u) selected.push_back(classes[c]);
        values[i] = chi_gb_marked_of(g, selected, shard);
    });
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& item = items[i];
        const int s = std::popcount(item.smask);
        const long long bound = 2 * item.r - s - 1;
        if (values[i] > bound) {
            const Graph g = graph_from_edge_mask(2 * item.r, item.emask);
            report.fail({"", emit_graph6(g), "chi_gb_marked",
                         "r=" + std::to_string(item.r) + " s=" + std::to_string(s),
                         std::to_string(values[i])});
        }
    }
    report.checked = items.size();

    // Strategy witness at r = 2: blank-echo beats the exhaustive adversary at
    // the bound for every nonempty selection of classes.
    const Graph t42 = turan(4, 2);
    const auto classes42 = turan_classes(4, 2);
    std::uint64_t lines = 0;
    for (std::uint32_t smask = 1; smask < 4u; ++smask) {
        std::vector<std::uint32_t> selected;
        for (int c = 0; c < 2; ++c)
            if ((smask >> c) & 1u) selected.push_back(classes42[c]);
        const int s = static_cast<int>(selected.size());
        const GameSpec spec{t42, Variant::WithBlanks, 4 - s - 1, {selected}};
        const auto strategy = blank_echo_strategy();
        const StrategyVerdict verdict = verify_strategy(spec, nullptr, *strategy);
        lines += verdict.lines_explored;
        ++report.checked;
        if (!verdict.wins_all_lines)
            report.fail({"", emit_graph6(t42), "blank_echo_strategy",
                         "marked=" + format_classes(selected) + " k=" + std::to_string(4 - s - 1),
                         "counterexample=" + prefix_param(*verdict.counterexample)});
    }
    report.notes.push_back("blank-echo adversary lines explored: " + std::to_string(lines));
    report.seconds = timer.seconds();
    return report;
}

SuiteReport check_marking_gap(int r, const VerifyOptions& opts) {
    if (r < 2 || r > 3) throw std::invalid_argument("check_marking_gap: r must be 2 or 3");
    Timer timer;
    SuiteReport report;
    report.suite = "marking(r=" + std::to_string(r) + ")";
    report.universe = "marking game on T(r^2,r): m >= r(r-1)";
    const Graph g = turan(r * r, r);
    long long m = 0;
    long long chi = 0;
    parallel_items(1, opts, [&](std::size_t, CacheShard* shard) {
        m = m_of(g, shard);
        chi = chi_of(g, shard);
    });
    report.checked = 1;
    report.witness({"", emit_graph6(g), "m", "r=" + std::to_string(r), std::to_string(m)});
    report.witness({"", emit_graph6(g), "chi", "r=" + std::to_string(r), std::to_string(chi)});
    if (m < static_cast<long long>(r) * (r - 1))
        report.fail({"", emit_graph6(g), "m", "bound=" + std::to_string(r * (r - 1)),
                     std::to_string(m)});
    report.notes.push_back("gap m - chi = " + std::to_string(m - chi) +
                           " (target >= " + std::to_string(r * (r - 2)) + ")");
    report.seconds = timer.seconds();
    return report;
}

SuiteReport separation_report(int n_max, const VerifyOptions& opts) {
    if (n_max < 1 || n_max > 6)
        throw std::invalid_argument("separation_report: need 1 <= n_max <= 6");
    Timer timer;
    SuiteReport report;
    report.suite = "separation(n<=" + std::to_string(n_max) + ")";
    report.universe = "(chi, chi_g, chi_gb) for all orders <= " + std::to_string(n_max) +
                      "; the four-cycle + pendant + isolated example must give (2, 2, 3)";
    std::vector<Graph> graphs;
    for (int n = 1; n <= n_max; ++n)
        for (const Graph& g : graphs_of_order(n)) graphs.push_back(g);
    struct Triple {
        long long chi, chi_g, chi_gb;
    };
    std::vector<Triple> values(graphs.size());
    parallel_items(graphs.size(), opts, [&](std::size_t i, CacheShard* shard) {
        values[i] = {chi_of(graphs[i], shard), chi_g_of(graphs[i], shard),
                     chi_gb_of(graphs[i], shard)};
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (values[i].chi_gb > values[i].chi_g)
            report.witness({"", graph_key(graphs[i]), "chi,chi_g,chi_gb", "chi_gb>chi_g",
                            std::to_string(values[i].chi) + "," +
                                std::to_string(values[i].chi_g) + "," +
                                std::to_string(values[i].chi_gb)});
    }
    // The separating example, asserted regardless of n_max.
    const Graph example = separating_example();
    Triple ex{};
    parallel_items(1, opts, [&](std::size_t, CacheShard* shard) {
        ex = {chi_of(example, shard), chi_g_of(example, shard), chi_gb_of(example, shard)};
    });
    const std::string triple = std::to_string(ex.chi) + "," + std::to_string(ex.chi_g) + "," +
                               std::to_string(ex.chi_gb);
    if (ex.chi != 2 || ex.chi_g != 2 || ex.chi_gb != 3)
        report.fail({"", canonical_key(example), "chi,chi_g,chi_gb", "expected=2,2,3", triple});
    else
        report.witness({"", canonical_key(example), "chi,chi_g,chi_gb", "separating example",
                        triple});
    report.checked = graphs.size() + 1;
    report.seconds = timer.seconds();
    return report;
}

SuiteReport check_reduction_inequality(int samples, const VerifyOptions& opts) {
    if (samples < 1) throw std::invalid_argument("check_reduction_inequality: samples >= 1");
    Timer timer;
    SuiteReport report;
    report.suite = "imagination(samples=" + std::to_string(samples) + ")";
    report.universe =
        "seeded (graph, marked classes, prefix) instances with n <= 6 and t <= 2: "
        "chi_gb(G;E|P) <= chi_gb(G-U;D',E') + |X|";
    report.header.push_back("seed: " + std::to_string(opts.seed));
    Rng rng(opts.seed);

    struct Instance {
        Graph g;
        std::vector<std::uint32_t> eclasses;
        MovePrefix prefix;
        std::vector<std::uint32_t> dclasses;
    };
    std::vector<Instance> instances;
    std::uint64_t attempts = 0;
    const std::uint64_t attempt_cap = static_cast<std::uint64_t>(samples) * 400;
    while (instances.size() < static_cast<std::size_t>(samples) && attempts < attempt_cap) {
        ++attempts;
        const int n = 2 + static_cast<int>(rng.below(5));
        const int bits = n * (n - 1) / 2;
        const Graph g = graph_from_edge_mask(n, rng.below(1u << bits));

        // Disjoint non-empty independent sets marked for blanks up front.
        const int q = static_cast<int>(rng.below(3));
        std::vector<std::uint32_t> eclasses;
        std::uint32_t taken = 0;
        bool ok = true;
        for (int j = 0; j < q && ok; ++j) {
            const int want = 1 + static_cast<int>(rng.below(2));
            std::uint32_t mask = 0;
            for (int pick = 0; pick < want; ++pick) {
                const int v = static_cast<int>(rng.below(n));
                if (((taken | mask) >> v) & 1u) continue;
                if (g.adj[v] & mask) continue;
                mask |= 1u << v;
            }
            if (!mask) ok = false;
            else {
                eclasses.push_back(mask);
                taken |= mask;
            }
        }
        if (!ok) continue;

        int t = static_cast<int>(rng.below(3));
        if (2 * t > n - 1) t = (n - 1) / 2;
        const GameSpec spec{g, Variant::WithBlanks, n, {eclasses}};
        GameState state = initial_state(spec);
        MovePrefix prefix;
        bool dead = false;
        for (int step = 0; step < 2 * t; ++step) {
            if (status(spec, state) != Status::Ongoing) {
                dead = true;
                break;
            }
            const auto moves = legal_moves(spec, state);
            const Move m = moves[rng.below(static_cast<std::uint32_t>(moves.size()))];
            prefix.push_back(m);
            apply_move_unchecked(spec, state, m);
        }
        if (dead) continue;
        // The conditioned value only depends on the prefix up to a colour
        // permutation; relabel by first use so the palette scan starts at |X|.
        {
            std::array<std::uint8_t, 33> relabelled{};
            std::uint8_t next_colour = 1;
            for (Move& m : prefix) {
                if (m.kind != PlayKind::Colour) continue;
                if (!relabelled[m.colour]) relabelled[m.colour] = next_colour++;
                m.colour = relabelled[m.colour];
            }
            state = replay_prefix(spec, prefix);
        }

        // Colours whose class avoids every marked class can seed a D_i.
        std::uint32_t eunion = 0;
        for (std::uint32_t m : eclasses) eunion |= m;
        std::array<std::uint32_t, 33> colour_class{};
        for (int v = 0; v < n; ++v) {
            const std::uint8_t a = state.assign[v];
            if (a >= 1 && a <= 32) colour_class[a] |= 1u << v;
        }
        std::vector<int> candidates;
        for (int c = 1; c <= 32; ++c)
            if (colour_class[c] && !(colour_class[c] & eunion)) candidates.push_back(c);
        // Deterministic shuffle, then keep a random count.
        for (std::size_t i = candidates.size(); i > 1; --i)
            std::swap(candidates[i - 1], candidates[rng.below(static_cast<std::uint32_t>(i))]);
        const std::size_t s = rng.below(static_cast<std::uint32_t>(candidates.size()) + 1);
        candidates.resize(s);

        std::vector<std::uint32_t> dclasses;
        std::uint32_t dtaken = eunion;
        ok = true;
        for (int c : candidates) {
            std::uint32_t mask = colour_class[c];
            if (mask & dtaken) {
                ok = false;
                break;
            }
            // Occasionally grow D_i by an unplayed vertex to exercise D'.
            if (rng.below(2)) {
                const int v = static_cast<int>(rng.below(n));
                if (!((state.played >> v) & 1u) && !((dtaken | mask) & (1u << v)) &&
                    !(g.adj[v] & mask))
                    mask |= 1u << v;
            }
            dclasses.push_back(mask);
            dtaken |= mask;
        }
        if (!ok) continue;
        instances.push_back({g, eclasses, prefix, dclasses});
    }
    if (instances.size() < static_cast<std::size_t>(samples))
        report.notes.push_back("sampling exhausted after " + std::to_string(attempts) +
                               " attempts: " + std::to_string(instances.size()) +
                               " instances");

    struct Outcome {
        long long lhs = 0;
        long long rhs = 0;
        std::string reduced;
    };
    std::vector<Outcome> outcomes(instances.size());
    parallel_items(instances.size(), opts, [&](std::size_t i, CacheShard* shard) {
        const Instance& inst = instances[i];
        Outcome& out = outcomes[i];
        out.lhs = chi_gb_prefixed_of(inst.g, inst.eclasses, inst.prefix, shard);

        const GameSpec spec{inst.g, Variant::WithBlanks, inst.g.n, {inst.eclasses}};
        const GameState end = replay_prefix(spec, inst.prefix);
        std::uint32_t colours_used = 0;
        for (int v = 0; v < inst.g.n; ++v) {
            const std::uint8_t a = end.assign[v];
            if (a >= 1 && a <= 32) colours_used |= 1u << (a - 1);
        }
        std::array<int, kMaxVertices> map{};
        const Graph reduced =
            induced_subgraph(inst.g, inst.g.vertex_mask() & ~end.played, &map);
        auto remap = [&](std::uint32_t mask) {
            std::uint32_t out_mask = 0;
            for (std::uint32_t rest = mask & ~end.played; rest;) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                out_mask |= 1u << map[v];
            }
            return out_mask;
        };
        std::vector<std::uint32_t> reduced_classes;
        for (std::uint32_t dmask : inst.dclasses)
            if (const std::uint32_t m = remap(dmask)) reduced_classes.push_back(m);
        for (int j = 0; j < static_cast<int>(inst.eclasses.size()); ++j) {
            if (!((end.active >> j) & 1u)) continue;  // Breaker removed it
            if (const std::uint32_t m = remap(inst.eclasses[j])) reduced_classes.push_back(m);
        }
        out.rhs = chi_gb_marked_of(reduced, reduced_classes, shard) +
                  std::popcount(colours_used);
        out.reduced = emit_graph6(reduced);
    });
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const Instance& inst = instances[i];
        if (outcomes[i].lhs > outcomes[i].rhs) {
            report.fail({"", emit_graph6(inst.g), "chi_gb_prefixed",
                         "marked=" + format_classes(inst.eclasses) +
                             " prefix=" + prefix_param(inst.prefix) +
                             " reduced=" + outcomes[i].reduced,
                         "lhs=" + std::to_string(outcomes[i].lhs) +
                             " rhs=" + std::to_string(outcomes[i].rhs)});
        }
    }
    report.checked = instances.size();
    report.seconds = timer.seconds();
    return report;
}

std::string enumerate_invariant_csv(int n, const std::string& invariant,
                                    const VerifyOptions& opts) {
    const auto& graphs = graphs_of_order(n);
    std::vector<long long> values(graphs.size());
    parallel_items(graphs.size(), opts, [&](std::size_t i, CacheShard* shard) {
        if (invariant == "chi") values[i] = chi_of(graphs[i], shard);
        else if (invariant == "chi_g") values[i] = chi_g_of(graphs[i], shard);
        else if (invariant == "chi_gb") values[i] = chi_gb_of(graphs[i], shard);
        else if (invariant == "m") values[i] = m_of(graphs[i], shard);
        else throw std::invalid_argument("unknown invariant: " + invariant);
    });
    std::string out = "graph6,invariant,params,value\n";
    for (std::size_t i = 0; i < graphs.size(); ++i)
        out += csv_field(graph_key(graphs[i])) + "," + csv_field(invariant) + ",," +
               std::to_string(values[i]) + "\n";
    return out;
}

std::string separation_data_csv(int n_max, const VerifyOptions& opts) {
    std::vector<Graph> graphs;
    for (int n = 1; n <= n_max; ++n)
        for (const Graph& g : graphs_of_order(n)) graphs.push_back(g);
    struct Triple {
        long long chi, chi_g, chi_gb;
    };
    std::vector<Triple> values(graphs.size());
    parallel_items(graphs.size(), opts, [&](std::size_t i, CacheShard* shard) {
        values[i] = {chi_of(graphs[i], shard), chi_g_of(graphs[i], shard),
                     chi_gb_of(graphs[i], shard)};
    });
    std::string out = "graph6,chi,chi_g,chi_gb\n";
    for (std::size_t i = 0; i < graphs.size(); ++i)
        out += csv_field(graph_key(graphs[i])) + "," + std::to_string(values[i].chi) + "," +
               std::to_string(values[i].chi_g) + "," + std::to_string(values[i].chi_gb) + "\n";
    return out;
}

}  // namespace gamecol
