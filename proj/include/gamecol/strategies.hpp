#ifndef GAMECOL_STRATEGIES_HPP
#define GAMECOL_STRATEGIES_HPP

#include <memory>
#include <optional>
#include <string>

#include "gamecol/colouring.hpp"
#include "gamecol/game.hpp"

namespace gamecol {

/// Everything a strategy may consult besides the position itself. The
/// partition defines "class" for class-based rules; it may be null for
/// strategies that do not need one.
struct StrategyContext {
    const GameSpec& spec;
    const Partition* partition = nullptr;
};

/// Deterministic Maker policy: the returned move must be legal in the given
/// state. `trace` holds every move made so far (prefix included).
class Strategy {
  public:
    virtual ~Strategy() = default;
    virtual Move next_move(const StrategyContext& ctx, const GameState& state,
                           const MovePrefix& trace) = 0;
    virtual std::string name() const = 0;
};

using StrategyPtr = std::unique_ptr<Strategy>;

/// Colours the lowest-index colourable vertex with its lowest legal colour;
/// if nothing is colourable (forced-blank phase), plays the first legal move.
StrategyPtr lowest_legal_strategy();

/// On Maker's first ceil(k/2) turns, colours the lowest-index colourable
/// vertex of degree >= k with its lowest legal colour, falling through to
/// lowest-legal play when no such vertex remains or the opening is over.
StrategyPtr greedy_strategy(int k);

/// Replies in the class of Breaker's previous move: with Breaker's colour
/// when it is playable there; after a Breaker blank, with a colour already
/// used in that class, or a fresh colour if none fits. Consults `fallback`
/// whenever the rule is inapplicable. Requires ctx.partition.
StrategyPtr copy_breaker_strategy(StrategyPtr fallback);

/// While any marked class is active, plays a blank: in the class of
/// Breaker's previous move when that class is an active marked class with an
/// unplayed vertex, else in the first such class. Once no blank is
/// available, delegates to optimal play via the solver.
StrategyPtr blank_echo_strategy();

/// Plays the given moves on Maker's first turns (each must be legal when its
/// turn comes), then delegates.
StrategyPtr scripted_opening(MovePrefix opening, StrategyPtr then);

struct StrategyVerdict {
    bool wins_all_lines = false;
    std::optional<MovePrefix> counterexample;  // full trace of a losing line
    std::uint64_t lines_explored = 0;          // leaves of the Breaker tree
};

/// Expands every Breaker reply with Maker's moves fixed by the strategy,
/// starting from the replayed prefix. wins_all_lines iff every leaf is a
/// Maker win; otherwise the first losing line (in move order) is returned.
/// Throws std::logic_error if the strategy returns an illegal move, naming
/// the trace.
StrategyVerdict verify_strategy(const GameSpec& spec, const Partition* partition,
                                Strategy& strategy, const MovePrefix& prefix = {});

}  // namespace gamecol

#endif
