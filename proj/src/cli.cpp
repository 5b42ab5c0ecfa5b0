#include "gamecol/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "gamecol/canonical.hpp"
#include "gamecol/colouring.hpp"
#include "gamecol/generators.hpp"
#include "gamecol/solver.hpp"
#include "gamecol/verify.hpp"

namespace gamecol::cli {
namespace {

std::vector<std::uint32_t> parse_classes(const std::string& text) {
    std::vector<std::uint32_t> classes;
    std::istringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::uint32_t mask = 0;
        std::istringstream vertices(group);
        std::string field;
        while (std::getline(vertices, field, ',')) {
            if (field.empty()) continue;
            const int v = std::stoi(field);
            if (v < 0 || v >= kMaxVertices)
                throw std::invalid_argument("class vertex out of range: " + field);
            mask |= 1u << v;
        }
        if (mask) classes.push_back(mask);
    }
    return classes;
}

std::vector<std::pair<int, int>> parse_edge_pairs(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    std::istringstream pairs(text);
    std::string pair;
    while (std::getline(pairs, pair, ',')) {
        const auto dash = pair.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("expected u-v pairs, got: " + pair);
        edges.emplace_back(std::stoi(pair.substr(0, dash)), std::stoi(pair.substr(dash + 1)));
    }
    return edges;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Graph load_graph(const std::string& graph6, const std::string& edges_path) {
    if (!graph6.empty() && !edges_path.empty())
        throw std::invalid_argument("give either a graph6 string or --edges, not both");
    if (!graph6.empty()) return parse_graph6(graph6);
    if (!edges_path.empty()) return parse_edge_list(read_file(edges_path));
    throw std::invalid_argument("no graph given (positional graph6 or --edges)");
}

std::string value_name(Variant variant) {
    switch (variant) {
        case Variant::Plain: return "chi_g";
        case Variant::WithBlanks: return "chi_gb";
        case Variant::Marking: return "m";
    }
    return "?";
}

// --- gen ---

struct GenArgs {
    std::string family;
    int n = 0, r = 0, a = 0, b = 0;
    std::string sizes;
    std::string remove;
};

int run_gen(const GenArgs& args, std::ostream& out) {
    Graph g;
    const std::string& f = args.family;
    if (f == "empty") g = empty_graph(args.n);
    else if (f == "complete") g = complete_graph(args.n);
    else if (f == "path") g = path_graph(args.n);
    else if (f == "cycle") g = cycle_graph(args.n);
    else if (f == "complete_bipartite") g = complete_bipartite(args.a, args.b);
    else if (f == "turan") g = turan(args.n, args.r);
    else if (f == "complete_multipartite") {
        std::vector<int> sizes;
        std::istringstream in(args.sizes);
        std::string field;
        while (std::getline(in, field, ',')) sizes.push_back(std::stoi(field));
        g = complete_multipartite(sizes);
    } else if (f == "krr_minus_matching") g = k_rr_minus_matching(args.r);
    else if (f == "turan_minus_edges") g = turan_minus_edges(args.n, args.r,
                                                             parse_edge_pairs(args.remove));
    else if (f == "separating_example") g = separating_example();
    else throw std::invalid_argument("unknown family: " + f);
    out << emit_graph6(g) << "\n";
    return 0;
}

// --- solve ---

struct SolveArgs {
    std::string variant = "plain";
    std::string graph6;
    std::string edges;
    std::string marked;
    std::string prefix_path;
    int k = -1;
    bool profile = false;
    bool stats = false;
};

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(args.graph6, args.edges);
    const Variant variant = parse_variant(args.variant);
    const MarkedSelection marked{parse_classes(args.marked)};
    MovePrefix prefix;
    if (!args.prefix_path.empty()) prefix = parse_trace(read_file(args.prefix_path));
    if (args.k >= 0) {
        const GameSpec spec{g, variant, args.k, marked};
        Solver solver(spec);
        const Winner w = solver.solve(replay_prefix(spec, prefix));
        out << "winner = " << winner_name(w) << "\n";
        if (args.stats) err << stats_line(spec, w, solver.stats()) << "\n";
        return 0;
    }
    const SolveResult result = win_profile(g, variant, marked, prefix);
    if (args.profile) {
        out << "profile:";
        for (std::size_t k = 0; k < result.win.size(); ++k)
            out << " " << k << ":" << (result.win[k] ? "W" : "L");
        out << "\n";
    }
    out << value_name(variant) << " = " << result.value << "\n";
    if (args.stats)
        err << "nodes=" << result.stats.nodes << " memo_hits=" << result.stats.memo_hits
            << " distinct_states=" << result.stats.distinct_states << "\n";
    return 0;
}

// --- verify ---

struct VerifyArgs {
    std::string suite = "all";
    int n = 0;  // 0 = suite default range
    int part = 0;
    int r = 0;
    std::uint64_t budget = 0;
    std::uint32_t seed = 1;
    int jobs = 1;
    bool extended = false;
    std::string cache_path;
    std::string csv_path;
};

int run_verify(const VerifyArgs& args, std::ostream& out) {
    InvariantCache cache;
    if (!args.cache_path.empty()) cache.load_file(args.cache_path);
    VerifyOptions opts;
    opts.jobs = args.jobs;
    opts.seed = args.seed;
    opts.extended = args.extended;
    opts.cache = &cache;

    std::vector<SuiteReport> reports;
    const auto want = [&](const std::string& name) {
        return args.suite == "all" || args.suite == name;
    };
    const int max_basic_n = args.extended ? 7 : 6;

    if (want("basic")) {
        if (args.n) reports.push_back(check_basic_bound(args.n, opts));
        else
            for (int n = 2; n <= max_basic_n; ++n)
                reports.push_back(check_basic_bound(n, opts));
    }
    if (want("equality")) {
        if (args.n) reports.push_back(classify_equality(args.n, opts));
        else
            for (int n = 4; n <= max_basic_n; ++n)
                reports.push_back(classify_equality(n, opts));
    }
    if (want("main")) {
        opts.budget = args.budget ? args.budget : 500;
        if (args.n) reports.push_back(check_partition_bound(args.n, opts));
        else
            for (int n = 2; n <= 6; ++n) reports.push_back(check_partition_bound(n, opts));
    }
    if (want("greedy"))
        reports.push_back(check_greedy_bound(args.n ? args.n : 6, 6, opts));
    if (want("base")) {
        if (args.part) reports.push_back(check_small_order_bounds(args.part, opts));
        else
            for (int part = 1; part <= 7; ++part)
                reports.push_back(check_small_order_bounds(part, opts));
    }
    if (want("annotated"))
        reports.push_back(check_turan_marked_bound(args.r ? args.r : 3, opts));
    if (want("imagination")) {
        opts.budget = args.budget ? args.budget : 100;
        reports.push_back(
            check_reduction_inequality(static_cast<int>(opts.budget), opts));
    }
    if (want("marking")) {
        if (args.r) reports.push_back(check_marking_gap(args.r, opts));
        else
            for (int r = 2; r <= 3; ++r) reports.push_back(check_marking_gap(r, opts));
    }
    if (want("separation"))
        reports.push_back(separation_report(args.n ? args.n : 6, opts));

    if (reports.empty()) throw std::invalid_argument("unknown suite: " + args.suite);

    bool all_pass = true;
    double total_seconds = 0;
    for (const auto& report : reports) {
        out << report.text();
        out << "(took " << std::fixed << std::setprecision(2) << report.seconds << "s)\n\n";
        all_pass = all_pass && report.pass;
        total_seconds += report.seconds;
    }
    out << (all_pass ? "ALL SUITES PASS" : "SUITE FAILURES PRESENT") << "\n";
    out << "(took " << std::fixed << std::setprecision(2) << total_seconds << "s in total)\n";

    if (!args.csv_path.empty()) {
        std::ofstream csv(args.csv_path, std::ios::trunc);
        if (!csv) throw std::invalid_argument("cannot write csv: " + args.csv_path);
        for (std::size_t i = 0; i < reports.size(); ++i) {
            std::string block = reports[i].csv();
            if (i > 0) block.erase(0, block.find('\n') + 1);  // keep a single header
            csv << block;
        }
    }
    if (!args.cache_path.empty()) cache.save_file(args.cache_path);
    return all_pass ? 0 : 1;
}

// --- play ---

struct PlayArgs {
    std::string variant = "blanks";
    std::string graph6;
    std::string edges;
    std::string marked;
    std::string human = "breaker";
    int k = 0;
};

void print_board(const GameSpec& spec, const GameState& state, std::ostream& out) {
    out << "  vertex  assignment  neighbours\n";
    for (int v = 0; v < spec.graph.n; ++v) {
        std::string shown;
        const std::uint8_t a = state.assign[v];
        if (a == kUnplayed) shown = ".";
        else if (a == kBlanked) shown = "blank";
        else if (a == kMarked) shown = "marked";
        else shown = std::to_string(int(a));
        out << "  " << std::left << std::setw(8) << v << std::setw(12) << shown
            << format_vertex_set(spec.graph.adj[v]) << "\n";
    }
    if (!spec.marked.empty()) {
        out << "  active marked classes:";
        for (int i = 0; i < spec.marked.s(); ++i)
            if ((state.active >> i) & 1u)
                out << " " << i << "={" << format_vertex_set(spec.marked.classes[i]) << "}";
        out << "\n";
    }
}

std::string explain_illegal(const GameSpec& spec, const GameState& state, const Move& move) {
    if (move.vertex >= spec.graph.n) return "vertex out of range";
    if ((state.played >> move.vertex) & 1u) return "vertex already played";
    switch (move.kind) {
        case PlayKind::Colour: {
            if (spec.variant == Variant::Marking) return "colour moves need a colouring game";
            if (move.colour < 1 || move.colour > spec.k) return "colour outside the palette";
            if ((state.forbidden[move.vertex] >> (move.colour - 1)) & 1u)
                return "a neighbour already has that colour";
            return "move rejected";
        }
        case PlayKind::Blank: {
            if (spec.variant != Variant::WithBlanks)
                return "blanks only exist in the blanks variant";
            if (state.maker_to_move()) {
                if (move.removed_class >= 0) return "only Breaker removes marked classes";
                return "Maker may blank only inside an active marked class";
            }
            if (move.removed_class >= 0) {
                if (move.removed_class >= spec.marked.s()) return "no such marked class";
                if (!((state.active >> move.removed_class) & 1u))
                    return "that class is no longer active";
                if ((spec.marked.classes[move.removed_class] >> move.vertex) & 1u)
                    return "cannot remove the class containing the blanked vertex";
            }
            return "move rejected";
        }
        case PlayKind::Mark: {
            if (spec.variant != Variant::Marking) return "marking needs the marking game";
            return "that vertex already has k marked neighbours";
        }
    }
    return "move rejected";
}

int run_play(const PlayArgs& args, std::ostream& out, std::istream& in) {
    const Graph g = load_graph(args.graph6, args.edges);
    const Variant variant = parse_variant(args.variant);
    const GameSpec spec{g, variant, args.k, MarkedSelection{parse_classes(args.marked)}};
    if (args.human != "maker" && args.human != "breaker")
        throw std::invalid_argument("--human must be maker or breaker");
    const bool human_is_maker = args.human == "maker";
    Solver solver(spec);
    GameState state = initial_state(spec);
    out << "playing " << variant_name(variant) << " with k=" << args.k << "; you are "
        << args.human << "\n";
    for (;;) {
        print_board(spec, state, out);
        const Status st = status(spec, state);
        if (st != Status::Ongoing) {
            out << (st == Status::MakerWin ? "Maker wins.\n" : "Breaker wins.\n");
            return 0;
        }
        const bool human_turn = state.maker_to_move() == human_is_maker;
        if (human_turn) {
            for (;;) {
                out << "your move (vertex colour|blank[-class]|mark): " << std::flush;
                std::string line;
                if (!std::getline(in, line)) {
                    out << "\ninput closed; leaving the game.\n";
                    return 1;
                }
                if (line.empty()) continue;
                Move move;
                try {
                    // the mover tag carries no information here; parse as Maker
                    const MovePrefix parsed = parse_trace("M " + line);
                    if (parsed.size() != 1) throw std::invalid_argument("one move per line");
                    move = parsed[0];
                } catch (const std::exception& e) {
                    out << "cannot parse that move: " << e.what() << "\n";
                    continue;
                }
                if (!is_legal_move(spec, state, move)) {
                    out << "illegal move: " << explain_illegal(spec, state, move) << "\n";
                    continue;
                }
                apply_move_unchecked(spec, state, move);
                break;
            }
        } else {
            const Move move = solver.best_move(state);
            out << "engine plays: " << format_move(state.maker_to_move(), move) << "\n";
            apply_move_unchecked(spec, state, move);
        }
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
    CLI::App app{"colouring-game and marking-game solver", "gamecol"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "emit a named graph as graph6");
    gen->add_option("--family", gen_args.family,
                    "empty|complete|path|cycle|complete_bipartite|turan|"
                    "complete_multipartite|krr_minus_matching|turan_minus_edges|"
                    "separating_example")
        ->required();
    gen->add_option("--n", gen_args.n, "vertex count");
    gen->add_option("--r", gen_args.r, "part count / side size");
    gen->add_option("--a", gen_args.a, "first side size");
    gen->add_option("--b", gen_args.b, "second side size");
    gen->add_option("--sizes", gen_args.sizes, "comma-separated part sizes");
    gen->add_option("--remove", gen_args.remove, "comma-separated u-v edges to remove");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "compute the game value of one graph");
    solve->add_option("graph6,--graph", solve_args.graph6, "graph in graph6 form");
    solve->add_option("--variant", solve_args.variant, "plain|blanks|marking");
    solve->add_option("--edges", solve_args.edges, "edge-list file instead of graph6");
    solve->add_option("--marked", solve_args.marked,
                      "classes marked for blanks, e.g. \"0,1;2,3\"");
    solve->add_option("--prefix", solve_args.prefix_path, "trace file of forced opening moves");
    solve->add_option("--k", solve_args.k, "solve for one palette size only");
    solve->add_flag("--profile", solve_args.profile, "print the full per-k profile");
    solve->add_flag("--stats", solve_args.stats, "print search statistics to stderr");

    struct EnumArgs {
        int n = 0;
        std::string invariant = "chi_g";
        int jobs = 1;
    } enum_args;
    auto* enumerate = app.add_subcommand("enumerate",
                                         "CSV of an invariant over all graphs of order n");
    enumerate->add_option("--n", enum_args.n, "order (1..7)")->required();
    enumerate->add_option("--invariant", enum_args.invariant, "chi|chi_g|chi_gb|m");
    enumerate->add_option("--jobs", enum_args.jobs, "worker threads");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", verify_args.suite,
                       "basic|equality|main|greedy|base|annotated|imagination|marking|"
                       "separation|all");
    verify->add_option("--n", verify_args.n, "restrict to one order (suite-dependent)");
    verify->add_option("--part", verify_args.part, "base suite: run a single part");
    verify->add_option("--r", verify_args.r, "annotated/marking suites: part count");
    verify->add_option("--budget", verify_args.budget, "sample budget for randomized suites");
    verify->add_option("--seed", verify_args.seed, "seed for randomized suites");
    verify->add_option("--jobs", verify_args.jobs, "worker threads");
    verify->add_flag("--extended", verify_args.extended, "include the order-7 universes");
    verify->add_option("--cache", verify_args.cache_path, "invariant cache file (read/write)");
    verify->add_option("--csv", verify_args.csv_path, "write witness rows as CSV");

    struct ReportArgs {
        int n = 5;
        int jobs = 1;
    } report_args;
    auto* report = app.add_subcommand("report", "CSV of (chi, chi_g, chi_gb) per graph");
    report->add_option("--n", report_args.n, "maximum order (<= 6)");
    report->add_option("--jobs", report_args.jobs, "worker threads");

    PlayArgs play_args;
    auto* play = app.add_subcommand("play", "interactive game against the optimal engine");
    play->add_option("graph6,--graph", play_args.graph6, "graph in graph6 form");
    play->add_option("--variant", play_args.variant, "plain|blanks|marking");
    play->add_option("--edges", play_args.edges, "edge-list file instead of graph6");
    play->add_option("--marked", play_args.marked, "classes marked for blanks");
    play->add_option("--human", play_args.human, "breaker|maker")->required();
    play->add_option("--k", play_args.k, "palette size")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args, out);
        if (solve->parsed()) return run_solve(solve_args, out, err);
        if (enumerate->parsed()) {
            VerifyOptions opts;
            opts.jobs = enum_args.jobs;
            out << enumerate_invariant_csv(enum_args.n, enum_args.invariant, opts);
            return 0;
        }
        if (verify->parsed()) return run_verify(verify_args, out);
        if (report->parsed()) {
            VerifyOptions opts;
            opts.jobs = report_args.jobs;
            out << separation_data_csv(report_args.n, opts);
            return 0;
        }
        if (play->parsed()) return run_play(play_args, out, in);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace gamecol::cli
