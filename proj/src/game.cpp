#include "gamecol/game.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace gamecol {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Plain: return "plain";
        case Variant::WithBlanks: return "blanks";
        case Variant::Marking: return "marking";
    }
    return "?";
}

Variant parse_variant(const std::string& name) {
    if (name == "plain") return Variant::Plain;
    if (name == "blanks") return Variant::WithBlanks;
    if (name == "marking") return Variant::Marking;
    throw std::invalid_argument("unknown variant: " + name);
}

void validate_spec(const GameSpec& spec) {
    validate(spec.graph);
    if (spec.k < 0 || spec.k > 32)
        throw std::invalid_argument("palette size out of range: " + std::to_string(spec.k));
    if (!spec.marked.empty() && spec.variant != Variant::WithBlanks)
        throw std::invalid_argument("marked classes only apply to the blanks variant");
    std::uint32_t seen = 0;
    for (std::uint32_t mask : spec.marked.classes) {
        if (mask == 0) throw std::invalid_argument("marked class is empty");
        if (mask & ~spec.graph.vertex_mask())
            throw std::invalid_argument("marked class contains an out-of-range vertex");
        if (mask & seen) throw std::invalid_argument("marked classes overlap");
        if (!spec.graph.is_independent(mask))
            throw std::invalid_argument("marked class is not independent");
        seen |= mask;
    }
    if (spec.marked.s() > 32) throw std::invalid_argument("too many marked classes");
}

GameState initial_state(const GameSpec& spec) {
    validate_spec(spec);
    GameState state;
    state.active = spec.marked.s() == 32 ? 0xffffffffu : ((1u << spec.marked.s()) - 1u);
    return state;
}

namespace {

// Union of active marked classes.
std::uint32_t active_union(const GameSpec& spec, const GameState& state) {
    std::uint32_t mask = 0;
    for (int i = 0; i < spec.marked.s(); ++i)
        if ((state.active >> i) & 1u) mask |= spec.marked.classes[i];
    return mask;
}

bool any_colour_move(const GameSpec& spec, const GameState& state) {
    if (spec.k <= 0) return false;
    const std::uint32_t palette = spec.k >= 32 ? 0xffffffffu : ((1u << spec.k) - 1u);
    for (int v = 0; v < spec.graph.n; ++v) {
        if ((state.played >> v) & 1u) continue;
        if ((state.forbidden[v] & palette) != palette) return true;
    }
    return false;
}

}  // namespace

Status status(const GameSpec& spec, const GameState& state) {
    const std::uint32_t all = spec.graph.vertex_mask();
    if (state.played == all) return Status::MakerWin;
    if (spec.variant == Variant::Marking) {
        for (int v = 0; v < spec.graph.n; ++v) {
            if ((state.played >> v) & 1u) continue;
            if (std::popcount(spec.graph.adj[v] & state.played) <= spec.k - 1)
                return Status::Ongoing;
        }
        return Status::BreakerWin;
    }
    if (any_colour_move(spec, state)) return Status::Ongoing;
    if (active_union(spec, state) & ~state.played) return Status::Ongoing;
    return Status::BreakerWin;
}

std::vector<Move> legal_moves(const GameSpec& spec, const GameState& state) {
    if (status(spec, state) != Status::Ongoing)
        throw std::logic_error("legal_moves called on a terminal state");
    std::vector<Move> moves;
    for_each_legal_move(spec, state, [&](const Move& m) {
        moves.push_back(m);
        return true;
    });
    return moves;
}

bool is_legal_move(const GameSpec& spec, const GameState& state, const Move& move) {
    if (status(spec, state) != Status::Ongoing) return false;
    bool found = false;
    for_each_legal_move(spec, state, [&](const Move& m) {
        if (m == move) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

void apply_move_unchecked(const GameSpec& spec, GameState& state, const Move& move) {
    const int v = move.vertex;
    switch (move.kind) {
        case PlayKind::Colour: {
            state.assign[v] = move.colour;
            const std::uint32_t colour_bit = 1u << (move.colour - 1);
            for (std::uint32_t rest = spec.graph.adj[v]; rest;) {
                const int u = std::countr_zero(rest);
                rest &= rest - 1;
                state.forbidden[u] |= colour_bit;
            }
            break;
        }
        case PlayKind::Blank:
            state.assign[v] = kBlanked;
            if (move.removed_class >= 0) state.active &= ~(1u << move.removed_class);
            break;
        case PlayKind::Mark:
            state.assign[v] = kMarked;
            break;
    }
    state.played |= 1u << v;
    ++state.moves_made;
}

GameState apply_move(const GameSpec& spec, const GameState& state, const Move& move) {
    if (move.vertex >= spec.graph.n)
        throw std::logic_error("apply_move: vertex out of range");
    if (move.kind == PlayKind::Colour && (move.colour < 1 || move.colour > spec.k))
        throw std::logic_error("apply_move: colour out of range");
    if (!is_legal_move(spec, state, move))
        throw std::logic_error("apply_move: illegal move " +
                               format_move(state.maker_to_move(), move));
    GameState next = state;
    apply_move_unchecked(spec, next, move);
    return next;
}

GameState replay_prefix(const GameSpec& spec, const MovePrefix& prefix) {
    GameState state = initial_state(spec);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (status(spec, state) != Status::Ongoing)
            throw PrefixError(static_cast<int>(i),
                              "prefix passes through a terminal state at move " +
                                  std::to_string(i));
        if (!is_legal_move(spec, state, prefix[i]))
            throw PrefixError(static_cast<int>(i),
                              "illegal prefix move at index " + std::to_string(i) + ": " +
                                  format_move(state.maker_to_move(), prefix[i]));
        apply_move_unchecked(spec, state, prefix[i]);
    }
    return state;
}

std::string format_move(bool maker, const Move& move) {
    std::string out = maker ? "M " : "B ";
    out += std::to_string(move.vertex);
    out.push_back(' ');
    switch (move.kind) {
        case PlayKind::Colour:
            out += std::to_string(move.colour);
            break;
        case PlayKind::Blank:
            out += "blank";
            if (move.removed_class >= 0) out += "-" + std::to_string(move.removed_class);
            break;
        case PlayKind::Mark:
            out += "mark";
            break;
    }
    return out;
}

std::string format_trace(const MovePrefix& prefix) {
    std::string out;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        out += format_move(i % 2 == 0, prefix[i]);
        out.push_back('\n');
    }
    return out;
}

MovePrefix parse_trace(const std::string& text) {
    MovePrefix prefix;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        std::string who, play;
        int vertex;
        if (!(fields >> who >> vertex >> play) || (who != "M" && who != "B"))
            throw std::invalid_argument("trace: malformed line " + std::to_string(line_no) +
                                        ": " + line);
        const bool expect_maker = prefix.size() % 2 == 0;
        if ((who == "M") != expect_maker)
            throw std::invalid_argument("trace: mover letter out of turn on line " +
                                        std::to_string(line_no));
        if (vertex < 0 || vertex >= kMaxVertices)
            throw std::invalid_argument("trace: vertex out of range on line " +
                                        std::to_string(line_no));
        if (play == "mark") {
            prefix.push_back(Move::mark_at(vertex));
        } else if (play.rfind("blank", 0) == 0) {
            int removed = -1;
            if (play.size() > 5) {
                if (play[5] != '-')
                    throw std::invalid_argument("trace: malformed blank on line " +
                                                std::to_string(line_no));
                removed = std::stoi(play.substr(6));
            }
            prefix.push_back(Move::blank_at(vertex, removed));
        } else {
            int colour;
            try {
                colour = std::stoi(play);
            } catch (const std::exception&) {
                throw std::invalid_argument("trace: malformed play on line " +
                                            std::to_string(line_no));
            }
            if (colour < 1 || colour > 32)
                throw std::invalid_argument("trace: colour out of range on line " +
                                            std::to_string(line_no));
            prefix.push_back(Move::colour_at(vertex, colour));
        }
    }
    return prefix;
}

}  // namespace gamecol
