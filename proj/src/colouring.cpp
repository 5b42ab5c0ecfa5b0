#include "gamecol/colouring.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>
#include <stdexcept>

#include "gamecol/canonical.hpp"
#include "gamecol/generators.hpp"

namespace gamecol {
namespace {

// Extends a partial proper colouring; picks the uncoloured vertex whose
// neighbours use the most distinct colours (saturation), breaking ties by
// degree. New colours are introduced at most one at a time.
bool extend_colouring(const Graph& g, int k, std::vector<int>& colour, int coloured,
                      int used) {
    if (coloured == g.n) return true;
    int pick = -1;
    int pick_sat = -1;
    for (int v = 0; v < g.n; ++v) {
        if (colour[v] != 0) continue;
        std::uint32_t neighbour_colours = 0;
        for (std::uint32_t rest = g.adj[v]; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (colour[u]) neighbour_colours |= 1u << (colour[u] - 1);
        }
        const int sat = std::popcount(neighbour_colours) * 64 + g.degree(v);
        if (sat > pick_sat) {
            pick_sat = sat;
            pick = v;
        }
    }
    std::uint32_t forbidden = 0;
    for (std::uint32_t rest = g.adj[pick]; rest;) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        if (colour[u]) forbidden |= 1u << (colour[u] - 1);
    }
    const int try_max = std::min(k, used + 1);
    for (int c = 1; c <= try_max; ++c) {
        if ((forbidden >> (c - 1)) & 1u) continue;
        colour[pick] = c;
        if (extend_colouring(g, k, colour, coloured + 1, std::max(used, c))) return true;
        colour[pick] = 0;
    }
    return false;
}

}  // namespace

bool colourable(const Graph& g, int k) {
    validate(g);
    if (k >= g.n) return true;
    if (k < 1) return false;
    std::vector<int> colour(g.n, 0);
    return extend_colouring(g, k, colour, 0, 0);
}

int chromatic_number(const Graph& g) {
    validate(g);
    for (int k = 1; k < g.n; ++k)
        if (colourable(g, k)) return k;
    return g.n;
}

int Partition::class_of(int v) const {
    for (int i = 0; i < p(); ++i)
        if ((classes[i] >> v) & 1u) return i;
    return -1;
}

std::vector<int> Partition::size_sequence() const {
    std::vector<int> sizes;
    for (std::uint32_t mask : classes) sizes.push_back(std::popcount(mask));
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

std::string format_partition(const Partition& part) {
    std::string out;
    for (std::uint32_t mask : part.classes) {
        if (!out.empty()) out.push_back(';');
        out += format_vertex_set(mask);
    }
    return out;
}

void for_each_independent_partition(const Graph& g, int max_p,
                                    const std::function<void(const Partition&)>& emit) {
    validate(g);
    if (g.n > 8)
        throw std::invalid_argument("independent_partitions: order exceeds enumeration capacity");
    if (max_p < 1) return;
    // Assign vertices in index order; vertex v joins an existing class or
    // opens the next one, so each set partition appears exactly once with
    // classes ordered by smallest member.
    Partition part;
    auto recurse = [&](auto&& self, int v) -> void {
        if (v == g.n) {
            emit(part);
            return;
        }
        for (std::size_t ci = 0; ci < part.classes.size(); ++ci) {
            if (g.adj[v] & part.classes[ci]) continue;
            part.classes[ci] |= 1u << v;
            self(self, v + 1);
            part.classes[ci] &= ~(1u << v);
        }
        if (part.p() < max_p) {
            part.classes.push_back(1u << v);
            self(self, v + 1);
            part.classes.pop_back();
        }
    };
    recurse(recurse, 0);
}

std::vector<Partition> independent_partitions(const Graph& g, int max_p) {
    std::vector<Partition> out;
    for_each_independent_partition(g, max_p, [&](const Partition& p) { out.push_back(p); });
    return out;
}

namespace {

bool contains_p4(const Graph& g) {
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            if (b == a || !g.has_edge(a, b)) continue;
            for (int c = 0; c < g.n; ++c) {
                if (c == a || c == b || !g.has_edge(b, c)) continue;
                for (int d = 0; d < g.n; ++d)
                    if (d != a && d != b && d != c && g.has_edge(c, d)) return true;
            }
        }
    return false;
}

// Canonical keys of all connected subgraphs of K_{2,3} that contain P4,
// grouped by order. Subgraphs range over vertex subsets and edge subsets.
const std::set<CanonicalKey>& k23_subgraph_keys() {
    static std::set<CanonicalKey> keys;
    static std::once_flag once;
    std::call_once(once, [] {
        const Graph host = complete_bipartite(2, 3);
        for (std::uint32_t vmask = 1; vmask < (1u << host.n); ++vmask) {
            const Graph induced = induced_subgraph(host, vmask);
            if (induced.n < 4) continue;  // P4 needs four vertices
            const std::uint64_t full = edge_mask_of(induced);
            for (std::uint64_t emask = 0;; emask = (emask - full) & full) {
                const Graph sub = graph_from_edge_mask(induced.n, full & ~emask);
                if (sub.is_connected_within(sub.vertex_mask()) && contains_p4(sub))
                    keys.insert(canonical_key(sub));
                if (emask == full) break;
            }
        }
    });
    return keys;
}

}  // namespace

bool equality_exception_predicate(const Graph& g) {
    validate(g);
    if (g.n > 7)
        throw std::invalid_argument("equality_exception_predicate: order must be <= 7");
    if (g.n <= 3) return true;
    if (g.n % 2 == 0 && isomorphic(g, turan(g.n, g.n / 2))) return true;
    if (g.n <= 5 && k23_subgraph_keys().count(canonical_key(g))) return true;
    return false;
}

}  // namespace gamecol
