#include "gamecol/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace gamecol {
namespace {

constexpr int kExhaustiveLimit = 8;

// bit -> bit maps for every permutation of 0..n-1, in std::next_permutation
// order starting from the identity.
struct PermBitTables {
    int n = 0;
    int bits = 0;
    std::vector<std::array<std::uint8_t, 28>> maps;  // 28 = C(8,2)

    explicit PermBitTables(int order) : n(order), bits(order * (order - 1) / 2) {
        std::array<int, kMaxVertices> perm{};
        std::iota(perm.begin(), perm.begin() + n, 0);
        do {
            auto& map = maps.emplace_back();
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i) {
                    int a = perm[i], b = perm[j];
                    if (a > b) std::swap(a, b);
                    map[edge_bit_index(i, j)] =
                        static_cast<std::uint8_t>(edge_bit_index(a, b));
                }
        } while (std::next_permutation(perm.begin(), perm.begin() + n));
    }

    std::uint64_t apply(const std::array<std::uint8_t, 28>& map, std::uint64_t mask) const {
        std::uint64_t out = 0;
        while (mask) {
            const int b = std::countr_zero(mask);
            mask &= mask - 1;
            out |= std::uint64_t{1} << map[b];
        }
        return out;
    }
};

// graph6 compares bit streams with the earliest bit most significant, so
// reverse the mask within `bits` positions before numeric comparison.
std::uint64_t lex_value(std::uint64_t mask, int bits) {
    std::uint64_t out = 0;
    while (mask) {
        const int b = std::countr_zero(mask);
        mask &= mask - 1;
        out |= std::uint64_t{1} << (bits - 1 - b);
    }
    return out;
}

std::uint64_t canonical_edge_mask(const Graph& g) {
    const PermBitTables tables(g.n);
    const std::uint64_t mask = edge_mask_of(g);
    std::uint64_t best_mask = mask;
    std::uint64_t best_lex = lex_value(mask, tables.bits);
    for (const auto& map : tables.maps) {
        const std::uint64_t permuted = tables.apply(map, mask);
        const std::uint64_t lex = lex_value(permuted, tables.bits);
        if (lex < best_lex) {
            best_lex = lex;
            best_mask = permuted;
        }
    }
    return best_mask;
}

}  // namespace

Graph canonical_form(const Graph& g) {
    validate(g);
    if (g.n > kExhaustiveLimit) return g;
    return graph_from_edge_mask(g.n, canonical_edge_mask(g));
}

CanonicalKey canonical_key(const Graph& g) { return emit_graph6(canonical_form(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n) return false;
    if (a.n > kExhaustiveLimit)
        throw std::invalid_argument("isomorphic: order exceeds exhaustive-permutation capacity");
    if (a.edge_count() != b.edge_count()) return false;
    return canonical_edge_mask(a) == canonical_edge_mask(b);
}

void enumerate_graphs(int n, const std::function<void(const Graph&)>& emit) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("enumerate_graphs: order must be in 1..7");
    const PermBitTables tables(n);
    const int bits = tables.bits;
    std::vector<bool> seen(std::uint64_t{1} << bits, false);
    for (int edges = 0; edges <= bits; ++edges) {
        // Masks of fixed popcount in increasing numeric order (Gosper).
        std::uint64_t mask = (std::uint64_t{1} << edges) - 1;
        const std::uint64_t limit = std::uint64_t{1} << bits;
        while (mask < limit) {
            if (!seen[mask]) {
                std::uint64_t best_mask = mask;
                std::uint64_t best_lex = lex_value(mask, bits);
                for (const auto& map : tables.maps) {
                    const std::uint64_t permuted = tables.apply(map, mask);
                    seen[permuted] = true;
                    const std::uint64_t lex = lex_value(permuted, bits);
                    if (lex < best_lex) {
                        best_lex = lex;
                        best_mask = permuted;
                    }
                }
                emit(graph_from_edge_mask(n, best_mask));
            }
            if (mask == 0) break;  // the single zero-edge mask
            const std::uint64_t low = mask & (~mask + 1);
            const std::uint64_t ripple = mask + low;
            mask = ripple | (((mask ^ ripple) >> 2) / low);
        }
    }
}

std::vector<Graph> all_graphs(int n) {
    std::vector<Graph> out;
    enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace gamecol
