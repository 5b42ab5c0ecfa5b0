#ifndef GAMECOL_SOLVER_HPP
#define GAMECOL_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gamecol/game.hpp"

namespace gamecol {

enum class Winner { Maker, Breaker };

inline std::string winner_name(Winner w) { return w == Winner::Maker ? "Maker" : "Breaker"; }

struct SolveStats {
    std::uint64_t nodes = 0;           // non-terminal states expanded
    std::uint64_t memo_hits = 0;
    std::uint64_t distinct_states = 0;  // memo entries at end of solve

    SolveStats& operator+=(const SolveStats& o) {
        nodes += o.nodes;
        memo_hits += o.memo_hits;
        distinct_states += o.distinct_states;
        return *this;
    }
};

/// Key for the solver memo: assignment with colours relabelled 1,2,... in
/// order of first appearance scanning vertices 0..n-1, with blank/unplayed
/// markers preserved and the active class set appended. The mover is omitted
/// (derivable from the number of played vertices).
std::string canonical_state_key(const GameSpec& spec, const GameState& state);

/// Optimal play for one (spec, k) pair. Memo table is instance-local and
/// capped; past the cap the search keeps going without storing (fail-open).
class Solver {
  public:
    explicit Solver(GameSpec spec, std::size_t memo_cap = kDefaultMemoCap);

    Winner solve(const GameState& state);
    Winner solve_from_start() { return solve(initial_state(spec_)); }

    /// First legal move that preserves the mover's game value: a winning move
    /// when the mover wins, otherwise the first legal move.
    Move best_move(const GameState& state);

    const GameSpec& spec() const { return spec_; }
    const SolveStats& stats() const { return stats_; }

    static constexpr std::size_t kDefaultMemoCap = std::size_t{1} << 22;

  private:
    Winner solve_state(const GameState& state);

    GameSpec spec_;
    std::size_t memo_cap_;
    std::unordered_map<std::string, std::int8_t> memo_;
    SolveStats stats_;
};

/// Win/lose per palette size k = 0..n plus the derived invariant value
/// (minimum winning k; always <= n).
struct SolveResult {
    std::vector<bool> win;  // index k
    int value = -1;
    SolveStats stats;
};

/// Game value under optimal play from the post-prefix position.
Winner solve_fixed_k(const GameSpec& spec, const MovePrefix& prefix = {});

/// Full profile over k = 0..n. A prefix illegal at some k (colour beyond the
/// palette) scores as a loss at that k; a prefix illegal at every k is an
/// error.
SolveResult win_profile(const Graph& g, Variant variant, const MarkedSelection& marked = {},
                        const MovePrefix& prefix = {});

/// Minimum winning k, scanning k upward and stopping at the first win.
/// Agrees with win_profile().value for every variant by definition.
int solve_value(const Graph& g, Variant variant, const MarkedSelection& marked = {},
                const MovePrefix& prefix = {});

int game_chromatic(const Graph& g);
int game_chromatic_blanks(const Graph& g, const MarkedSelection& marked = {},
                          const MovePrefix& prefix = {});
int marking_number(const Graph& g);

/// One text line per solve: canonical graph key, variant, k, winner, nodes,
/// memo hits.
std::string stats_line(const GameSpec& spec, Winner winner, const SolveStats& stats);

}  // namespace gamecol

#endif
