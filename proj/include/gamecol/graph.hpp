#ifndef GAMECOL_GRAPH_HPP
#define GAMECOL_GRAPH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gamecol {

/// Maximum number of vertices; one 32-bit adjacency word per vertex.
inline constexpr int kMaxVertices = 32;

/// Simple undirected graph on at most 32 vertices, adjacency as per-vertex
/// bit masks. Invariants: adjacency symmetric, no loops, all set bits < n.
struct Graph {
    int n = 0;
    std::array<std::uint32_t, kMaxVertices> adj{};

    explicit Graph(int vertices = 0);

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    int edge_count() const;

    /// Mask with bits 0..n-1 set.
    std::uint32_t vertex_mask() const {
        return n == 32 ? 0xffffffffu : ((1u << n) - 1u);
    }

    /// True iff no two vertices of `mask` are adjacent.
    bool is_independent(std::uint32_t mask) const;

    /// True iff the graph restricted to `mask` is connected (empty mask and
    /// singletons count as connected).
    bool is_connected_within(std::uint32_t mask) const;

    bool operator==(const Graph&) const = default;
};

/// Throws std::invalid_argument if the adjacency data violates the Graph
/// invariants (asymmetry, loops, bits >= n, n out of range).
void validate(const Graph& g);

/// Induced subgraph on the vertices of `mask`, relabelled to 0..k-1 in
/// increasing order of original index. `old_to_new`, when non-null, receives
/// the relabelling (-1 for dropped vertices).
Graph induced_subgraph(const Graph& g, std::uint32_t mask,
                       std::array<int, kMaxVertices>* old_to_new = nullptr);

/// Applies a vertex relabelling: vertex v of `g` becomes perm[v].
Graph relabel(const Graph& g, const std::array<int, kMaxVertices>& perm);

// --- upper-triangle edge masks (column-major, the graph6 bit order) ---

/// Stream position of edge {i,j}, i < j: pairs ordered (0,1),(0,2),(1,2),...
inline int edge_bit_index(int i, int j) { return j * (j - 1) / 2 + i; }

std::uint64_t edge_mask_of(const Graph& g);
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// --- graph6 (short form only) ---

/// Parses a short-form graph6 line. Throws std::invalid_argument on a
/// malformed header byte, truncated or overlong body, out-of-range body
/// bytes, nonzero padding bits, or decoded n > 32.
Graph parse_graph6(const std::string& text);

/// Short-form graph6 encoding of g as labelled. parse/emit are inverses.
std::string emit_graph6(const Graph& g);

// --- edge-list text format ---

/// Parses "u v" lines ('#' comments allowed). An optional leading line with
/// a single integer fixes the vertex count; otherwise n = max index + 1.
Graph parse_edge_list(const std::string& text);

std::string format_vertex_set(std::uint32_t mask);

}  // namespace gamecol

#endif
