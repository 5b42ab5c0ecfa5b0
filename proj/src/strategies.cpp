#include "gamecol/strategies.hpp"

#include <bit>
#include <stdexcept>

#include "gamecol/solver.hpp"

namespace gamecol {
namespace {

std::uint32_t palette_mask(const GameSpec& spec) {
    return spec.k >= 32 ? 0xffffffffu : ((1u << spec.k) - 1u);
}

// Lowest legal colour at v, or 0 if none.
int lowest_colour_at(const GameSpec& spec, const GameState& state, int v) {
    const std::uint32_t free = palette_mask(spec) & ~state.forbidden[v];
    return free ? std::countr_zero(free) + 1 : 0;
}

Move first_legal(const GameSpec& spec, const GameState& state) {
    std::optional<Move> first;
    for_each_legal_move(spec, state, [&](const Move& m) {
        first = m;
        return false;
    });
    if (!first) throw std::logic_error("no legal move in a non-terminal state");
    return *first;
}

Move lowest_colour_move(const GameSpec& spec, const GameState& state) {
    for (int v = 0; v < spec.graph.n; ++v) {
        if ((state.played >> v) & 1u) continue;
        if (const int c = lowest_colour_at(spec, state, v)) return Move::colour_at(v, c);
    }
    return first_legal(spec, state);
}

class LowestLegal final : public Strategy {
  public:
    Move next_move(const StrategyContext& ctx, const GameState& state,
                   const MovePrefix&) override {
        return lowest_colour_move(ctx.spec, state);
    }
    std::string name() const override { return "lowest-legal"; }
};

class Greedy final : public Strategy {
  public:
    explicit Greedy(int k) : k_(k) {}

    Move next_move(const StrategyContext& ctx, const GameState& state,
                   const MovePrefix&) override {
        const int maker_turn = state.moves_made / 2;  // 0-based
        if (maker_turn < (k_ + 1) / 2) {
            for (int v = 0; v < ctx.spec.graph.n; ++v) {
                if ((state.played >> v) & 1u) continue;
                if (ctx.spec.graph.degree(v) < k_) continue;
                if (const int c = lowest_colour_at(ctx.spec, state, v))
                    return Move::colour_at(v, c);
            }
        }
        return lowest_colour_move(ctx.spec, state);
    }
    std::string name() const override { return "greedy(" + std::to_string(k_) + ")"; }

  private:
    int k_;
};

class CopyBreaker final : public Strategy {
  public:
    explicit CopyBreaker(StrategyPtr fallback) : fallback_(std::move(fallback)) {}

    Move next_move(const StrategyContext& ctx, const GameState& state,
                   const MovePrefix& trace) override {
        if (!ctx.partition)
            throw std::invalid_argument("copy-breaker strategy needs a partition");
        if (trace.size() < 2 || trace.size() % 2 != 0)
            return fallback_->next_move(ctx, state, trace);
        const Move& reply = trace.back();
        if (reply.kind == PlayKind::Mark) return fallback_->next_move(ctx, state, trace);
        const int ci = ctx.partition->class_of(reply.vertex);
        if (ci < 0) return fallback_->next_move(ctx, state, trace);
        const std::uint32_t cls = ctx.partition->classes[ci];
        const std::uint32_t open = cls & ~state.played;
        if (open) {
            if (reply.kind == PlayKind::Colour) {
                for (std::uint32_t rest = open; rest;) {
                    const int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (!((state.forbidden[v] >> (reply.colour - 1)) & 1u))
                        return Move::colour_at(v, reply.colour);
                }
            } else {
                // Breaker blanked: repeat a colour already used in the class.
                std::uint32_t used_here = 0;
                for (std::uint32_t rest = cls & state.played; rest;) {
                    const int u = std::countr_zero(rest);
                    rest &= rest - 1;
                    const std::uint8_t a = state.assign[u];
                    if (a >= 1 && a <= 32) used_here |= 1u << (a - 1);
                }
                for (std::uint32_t rest = open; rest;) {
                    const int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    const std::uint32_t fits = used_here & ~state.forbidden[v];
                    if (fits) return Move::colour_at(v, std::countr_zero(fits) + 1);
                }
            }
            // A previously-unused colour is legal anywhere in the class.
            std::uint32_t used_anywhere = 0;
            for (int u = 0; u < ctx.spec.graph.n; ++u) {
                const std::uint8_t a = state.assign[u];
                if (a >= 1 && a <= 32) used_anywhere |= 1u << (a - 1);
            }
            const std::uint32_t fresh = palette_mask(ctx.spec) & ~used_anywhere;
            if (fresh)
                return Move::colour_at(std::countr_zero(open), std::countr_zero(fresh) + 1);
        }
        return fallback_->next_move(ctx, state, trace);
    }
    std::string name() const override { return "copy-breaker/" + fallback_->name(); }

  private:
    StrategyPtr fallback_;
};

class BlankEcho final : public Strategy {
  public:
    Move next_move(const StrategyContext& ctx, const GameState& state,
                   const MovePrefix& trace) override {
        const GameSpec& spec = ctx.spec;
        if (spec.variant != Variant::WithBlanks)
            throw std::invalid_argument("blank-echo strategy needs the blanks variant");
        if (!trace.empty() && trace.size() % 2 == 0) {
            const int w = trace.back().vertex;
            for (int i = 0; i < spec.marked.s(); ++i) {
                if (!((state.active >> i) & 1u)) continue;
                if (!((spec.marked.classes[i] >> w) & 1u)) continue;
                const std::uint32_t open = spec.marked.classes[i] & ~state.played;
                if (open) return Move::blank_at(std::countr_zero(open));
            }
        }
        for (int i = 0; i < spec.marked.s(); ++i) {
            if (!((state.active >> i) & 1u)) continue;
            const std::uint32_t open = spec.marked.classes[i] & ~state.played;
            if (open) return Move::blank_at(std::countr_zero(open));
        }
        // No blank available: finish with optimal play.
        if (!solver_ || !(solver_->spec() == spec)) solver_ = std::make_unique<Solver>(spec);
        return solver_->best_move(state);
    }
    std::string name() const override { return "blank-echo"; }

  private:
    std::unique_ptr<Solver> solver_;
};

class Scripted final : public Strategy {
  public:
    Scripted(MovePrefix opening, StrategyPtr then)
        : opening_(std::move(opening)), then_(std::move(then)) {}

    Move next_move(const StrategyContext& ctx, const GameState& state,
                   const MovePrefix& trace) override {
        const std::size_t maker_turn = state.moves_made / 2;
        if (maker_turn < opening_.size()) return opening_[maker_turn];
        return then_->next_move(ctx, state, trace);
    }
    std::string name() const override { return "scripted/" + then_->name(); }

  private:
    MovePrefix opening_;
    StrategyPtr then_;
};

}  // namespace

StrategyPtr lowest_legal_strategy() { return std::make_unique<LowestLegal>(); }
StrategyPtr greedy_strategy(int k) { return std::make_unique<Greedy>(k); }
StrategyPtr copy_breaker_strategy(StrategyPtr fallback) {
    return std::make_unique<CopyBreaker>(std::move(fallback));
}
StrategyPtr blank_echo_strategy() { return std::make_unique<BlankEcho>(); }
StrategyPtr scripted_opening(MovePrefix opening, StrategyPtr then) {
    return std::make_unique<Scripted>(std::move(opening), std::move(then));
}

namespace {

struct VerifyRun {
    const GameSpec& spec;
    StrategyContext ctx;
    Strategy& strategy;
    MovePrefix trace;
    StrategyVerdict verdict;

    // Returns false once a counterexample is recorded, aborting the sweep.
    bool expand(const GameState& state) {
        const Status st = status(spec, state);
        if (st != Status::Ongoing) {
            ++verdict.lines_explored;
            if (st == Status::BreakerWin) {
                verdict.wins_all_lines = false;
                verdict.counterexample = trace;
                return false;
            }
            return true;
        }
        if (state.maker_to_move()) {
            const Move move = strategy.next_move(ctx, state, trace);
            if (!is_legal_move(spec, state, move))
                throw std::logic_error("strategy " + strategy.name() +
                                       " returned an illegal move: " + format_move(true, move) +
                                       "\nafter trace:\n" + format_trace(trace));
            GameState child = state;
            apply_move_unchecked(spec, child, move);
            trace.push_back(move);
            const bool keep = expand(child);
            trace.pop_back();
            return keep;
        }
        return for_each_legal_move(spec, state, [&](const Move& move) {
            GameState child = state;
            apply_move_unchecked(spec, child, move);
            trace.push_back(move);
            const bool keep = expand(child);
            trace.pop_back();
            return keep;
        });
    }
};

}  // namespace

StrategyVerdict verify_strategy(const GameSpec& spec, const Partition* partition,
                                Strategy& strategy, const MovePrefix& prefix) {
    const GameState start = replay_prefix(spec, prefix);
    VerifyRun run{spec, StrategyContext{spec, partition}, strategy, prefix, {}};
    run.verdict.wins_all_lines = true;
    run.expand(start);
    return run.verdict;
}

}  // namespace gamecol
