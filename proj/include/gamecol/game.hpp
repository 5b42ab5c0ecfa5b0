#ifndef GAMECOL_GAME_HPP
#define GAMECOL_GAME_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gamecol/graph.hpp"

namespace gamecol {

enum class Variant { Plain, WithBlanks, Marking };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& name);

/// Independent sets in which both players may play blanks. Breaker may
/// deactivate one class per blank he plays; the game cannot end while an
/// active class has an unplayed vertex.
struct MarkedSelection {
    std::vector<std::uint32_t> classes;

    int s() const { return static_cast<int>(classes.size()); }
    bool empty() const { return classes.empty(); }
    bool operator==(const MarkedSelection&) const = default;
};

struct GameSpec {
    Graph graph;
    Variant variant = Variant::Plain;
    int k = 0;
    MarkedSelection marked;  // WithBlanks only

    bool operator==(const GameSpec&) const = default;
};

/// Throws std::invalid_argument on: k out of 0..32, marked classes outside
/// the colouring-with-blanks variant, or classes that are empty, overlapping,
/// or not independent.
void validate_spec(const GameSpec& spec);

enum class PlayKind : std::uint8_t { Colour, Blank, Mark };

struct Move {
    std::uint8_t vertex = 0;
    PlayKind kind = PlayKind::Colour;
    std::uint8_t colour = 0;      // 1..k, Colour only
    std::int8_t removed_class = -1;  // Blank only; index into spec.marked.classes

    static Move colour_at(int v, int c) {
        return Move{static_cast<std::uint8_t>(v), PlayKind::Colour,
                    static_cast<std::uint8_t>(c), -1};
    }
    static Move blank_at(int v, int removed = -1) {
        return Move{static_cast<std::uint8_t>(v), PlayKind::Blank, 0,
                    static_cast<std::int8_t>(removed)};
    }
    static Move mark_at(int v) {
        return Move{static_cast<std::uint8_t>(v), PlayKind::Mark, 0, -1};
    }

    bool operator==(const Move&) const = default;
};

// Per-vertex assignment values: 0 is unplayed, 1..k a colour.
inline constexpr std::uint8_t kUnplayed = 0;
inline constexpr std::uint8_t kBlanked = 0xfe;
inline constexpr std::uint8_t kMarked = 0xfd;

/// Value type holding one game position. `played` and `forbidden` are
/// derived from `assign` and kept in sync by apply_move.
struct GameState {
    std::array<std::uint8_t, kMaxVertices> assign{};
    std::uint32_t active = 0;  // bitmask of still-active marked-class indices
    int moves_made = 0;

    std::uint32_t played = 0;
    std::array<std::uint32_t, kMaxVertices> forbidden{};  // neighbour colours as bits

    bool maker_to_move() const { return moves_made % 2 == 0; }
    bool operator==(const GameState& o) const {
        return assign == o.assign && active == o.active && moves_made == o.moves_made;
    }
};

GameState initial_state(const GameSpec& spec);

enum class Status { Ongoing, MakerWin, BreakerWin };

/// Game over test, evaluated before the mover moves. Colouring variants:
/// everything played is a Maker win; otherwise the game continues while any
/// colour move exists anywhere or an active marked class holds an unplayed
/// vertex, and is a Breaker win once neither holds. Marking: all marked wins
/// for Maker; an unmarkable unmarked vertex wins for Breaker.
Status status(const GameSpec& spec, const GameState& state);

/// Visits the mover's legal moves in deterministic order (vertex ascending;
/// per vertex: colours ascending, then blank without removal, then blanks by
/// removed-class index). Visitor returns false to stop; returns true iff the
/// sweep was not stopped. Must not be called on a terminal state.
template <typename F>
bool for_each_legal_move(const GameSpec& spec, const GameState& state, F&& visit);

std::vector<Move> legal_moves(const GameSpec& spec, const GameState& state);

bool is_legal_move(const GameSpec& spec, const GameState& state, const Move& move);

/// apply_move throws std::logic_error on an illegal move (a caller bug);
/// malformed moves (bad vertex/colour ranges) are reported the same way.
GameState apply_move(const GameSpec& spec, const GameState& state, const Move& move);

/// No legality check; the move must come from the legal set.
void apply_move_unchecked(const GameSpec& spec, GameState& state, const Move& move);

using MovePrefix = std::vector<Move>;

/// Replays a prefix from the initial state. Throws PrefixError naming the
/// offending index on an illegal move or when the game ends before the last
/// prefix move.
struct PrefixError : std::invalid_argument {
    int index;
    PrefixError(int at, const std::string& what)
        : std::invalid_argument(what), index(at) {}
};

GameState replay_prefix(const GameSpec& spec, const MovePrefix& prefix);

// --- trace text format: "M|B vertex colour|blank[-removedClass]|mark" ---

std::string format_move(bool maker, const Move& move);
std::string format_trace(const MovePrefix& prefix);
MovePrefix parse_trace(const std::string& text);

// template definition

template <typename F>
bool for_each_legal_move(const GameSpec& spec, const GameState& state, F&& visit) {
    const Graph& g = spec.graph;
    const std::uint32_t palette = spec.k >= 32 ? 0xffffffffu : ((1u << spec.k) - 1u);
    const bool maker = state.maker_to_move();
    if (spec.variant == Variant::Marking) {
        for (int v = 0; v < g.n; ++v) {
            if ((state.played >> v) & 1u) continue;
            if (std::popcount(g.adj[v] & state.played) <= spec.k - 1)
                if (!visit(Move::mark_at(v))) return false;
        }
        return true;
    }
    std::uint32_t blankable = 0;  // union of active marked classes
    if (spec.variant == Variant::WithBlanks)
        for (int i = 0; i < spec.marked.s(); ++i)
            if ((state.active >> i) & 1u) blankable |= spec.marked.classes[i];
    for (int v = 0; v < g.n; ++v) {
        if ((state.played >> v) & 1u) continue;
        for (std::uint32_t free = palette & ~state.forbidden[v]; free;) {
            const int c = std::countr_zero(free) + 1;
            free &= free - 1;
            if (!visit(Move::colour_at(v, c))) return false;
        }
        if (spec.variant != Variant::WithBlanks) continue;
        if (maker) {
            if ((blankable >> v) & 1u)
                if (!visit(Move::blank_at(v))) return false;
        } else {
            if (!visit(Move::blank_at(v))) return false;
            for (int i = 0; i < spec.marked.s(); ++i) {
                if (!((state.active >> i) & 1u)) continue;
                if ((spec.marked.classes[i] >> v) & 1u) continue;
                if (!visit(Move::blank_at(v, i))) return false;
            }
        }
    }
    return true;
}

}  // namespace gamecol

#endif
