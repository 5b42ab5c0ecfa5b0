#include "gamecol/solver.hpp"

#include <stdexcept>

#include "gamecol/canonical.hpp"

namespace gamecol {

std::string canonical_state_key(const GameSpec& spec, const GameState& state) {
    const int n = spec.graph.n;
    std::string key(static_cast<std::size_t>(n) + 4, '\0');
    std::array<std::uint8_t, 33> relabel{};
    std::uint8_t next = 1;
    for (int v = 0; v < n; ++v) {
        const std::uint8_t a = state.assign[v];
        if (a == kUnplayed || a == kBlanked || a == kMarked) {
            key[v] = static_cast<char>(a);
        } else {
            if (relabel[a] == 0) relabel[a] = next++;
            key[v] = static_cast<char>(relabel[a]);
        }
    }
    for (int b = 0; b < 4; ++b)
        key[n + b] = static_cast<char>((state.active >> (8 * b)) & 0xff);
    return key;
}

Solver::Solver(GameSpec spec, std::size_t memo_cap)
    : spec_(std::move(spec)), memo_cap_(memo_cap) {
    validate_spec(spec_);
}

Winner Solver::solve_state(const GameState& state) {
    const Status st = status(spec_, state);
    if (st != Status::Ongoing) return st == Status::MakerWin ? Winner::Maker : Winner::Breaker;
    std::string key = canonical_state_key(spec_, state);
    if (auto it = memo_.find(key); it != memo_.end()) {
        ++stats_.memo_hits;
        return static_cast<Winner>(it->second);
    }
    ++stats_.nodes;
    const bool maker = state.maker_to_move();
    Winner result = maker ? Winner::Breaker : Winner::Maker;
    for_each_legal_move(spec_, state, [&](const Move& move) {
        GameState child = state;
        apply_move_unchecked(spec_, child, move);
        const Winner w = solve_state(child);
        if (w == (maker ? Winner::Maker : Winner::Breaker)) {
            result = w;
            return false;
        }
        return true;
    });
    if (memo_.size() < memo_cap_) {
        memo_.emplace(std::move(key), static_cast<std::int8_t>(result));
        stats_.distinct_states = memo_.size();
    }
    return result;
}

Winner Solver::solve(const GameState& state) { return solve_state(state); }

Move Solver::best_move(const GameState& state) {
    if (status(spec_, state) != Status::Ongoing)
        throw std::logic_error("best_move called on a terminal state");
    const bool maker = state.maker_to_move();
    const Winner want = maker ? Winner::Maker : Winner::Breaker;
    std::optional<Move> first;
    std::optional<Move> winning;
    for_each_legal_move(spec_, state, [&](const Move& move) {
        if (!first) first = move;
        GameState child = state;
        apply_move_unchecked(spec_, child, move);
        if (solve_state(child) == want) {
            winning = move;
            return false;
        }
        return true;
    });
    return winning ? *winning : *first;
}

Winner solve_fixed_k(const GameSpec& spec, const MovePrefix& prefix) {
    Solver solver(spec);
    return solver.solve(replay_prefix(spec, prefix));
}

namespace {

// Shared scan over k. `stop_at_first_win` turns the profile sweep into the
// value computation.
SolveResult scan_palettes(const Graph& g, Variant variant, const MarkedSelection& marked,
                          const MovePrefix& prefix, bool stop_at_first_win) {
    SolveResult result;
    result.win.assign(static_cast<std::size_t>(g.n) + 1, false);
    bool any_replay_ok = false;
    std::exception_ptr last_error;
    for (int k = 0; k <= g.n; ++k) {
        GameSpec spec{g, variant, k, marked};
        GameState start;
        try {
            start = replay_prefix(spec, prefix);
        } catch (const PrefixError&) {
            last_error = std::current_exception();
            continue;  // prefix unplayable with this palette: not a win
        }
        any_replay_ok = true;
        Solver solver(spec);
        const Winner w = solver.solve(start);
        result.stats += solver.stats();
        if (w == Winner::Maker) {
            result.win[k] = true;
            if (result.value < 0) result.value = k;
            if (stop_at_first_win) return result;
        }
    }
    if (!any_replay_ok && last_error) std::rethrow_exception(last_error);
    if (result.value < 0)
        throw std::logic_error("no winning palette size; the full palette must win");
    return result;
}

}  // namespace

SolveResult win_profile(const Graph& g, Variant variant, const MarkedSelection& marked,
                        const MovePrefix& prefix) {
    return scan_palettes(g, variant, marked, prefix, false);
}

int solve_value(const Graph& g, Variant variant, const MarkedSelection& marked,
                const MovePrefix& prefix) {
    return scan_palettes(g, variant, marked, prefix, true).value;
}

int game_chromatic(const Graph& g) { return win_profile(g, Variant::Plain).value; }

int game_chromatic_blanks(const Graph& g, const MarkedSelection& marked,
                          const MovePrefix& prefix) {
    return win_profile(g, Variant::WithBlanks, marked, prefix).value;
}

int marking_number(const Graph& g) { return win_profile(g, Variant::Marking).value; }

std::string stats_line(const GameSpec& spec, Winner winner, const SolveStats& stats) {
    return canonical_key(spec.graph) + "\t" +
           variant_name(spec.variant) + "\t" + std::to_string(spec.k) + "\t" +
           winner_name(winner) + "\t" + std::to_string(stats.nodes) + "\t" +
           std::to_string(stats.memo_hits);
}

}  // namespace gamecol
