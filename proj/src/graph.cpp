#include "gamecol/graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace gamecol {

Graph::Graph(int vertices) : n(vertices) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order out of range: " + std::to_string(vertices));
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge");
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
}

void Graph::remove_edge(int u, int v) {
    adj[u] &= ~(1u << v);
    adj[v] &= ~(1u << u);
}

int Graph::degree(int v) const { return std::popcount(adj[v]); }

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n; ++v) total += degree(v);
    return total / 2;
}

bool Graph::is_independent(std::uint32_t mask) const {
    for (std::uint32_t rest = mask; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (adj[v] & mask) return false;
    }
    return true;
}

bool Graph::is_connected_within(std::uint32_t mask) const {
    if (mask == 0) return true;
    std::uint32_t reached = mask & (~mask + 1u);  // lowest set bit
    for (;;) {
        std::uint32_t next = reached;
        for (std::uint32_t rest = reached; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            next |= adj[v] & mask;
        }
        if (next == reached) break;
        reached = next;
    }
    return reached == mask;
}

void validate(const Graph& g) {
    if (g.n < 1 || g.n > kMaxVertices)
        throw std::invalid_argument("graph order out of range: " + std::to_string(g.n));
    const std::uint32_t all = g.vertex_mask();
    for (int v = 0; v < g.n; ++v) {
        if (g.adj[v] & ~all) throw std::invalid_argument("adjacency bit beyond vertex count");
        if ((g.adj[v] >> v) & 1u) throw std::invalid_argument("loop at vertex " + std::to_string(v));
        for (std::uint32_t rest = g.adj[v]; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (!g.has_edge(u, v)) throw std::invalid_argument("asymmetric adjacency");
        }
    }
    for (int v = g.n; v < kMaxVertices; ++v)
        if (g.adj[v]) throw std::invalid_argument("adjacency row beyond vertex count");
}

Graph induced_subgraph(const Graph& g, std::uint32_t mask,
                       std::array<int, kMaxVertices>* old_to_new) {
    std::array<int, kMaxVertices> map;
    map.fill(-1);
    int next = 0;
    for (int v = 0; v < g.n; ++v)
        if ((mask >> v) & 1u) map[v] = next++;
    Graph sub(next);
    for (int v = 0; v < g.n; ++v) {
        if (map[v] < 0) continue;
        for (std::uint32_t rest = g.adj[v] & mask; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (u > v) sub.add_edge(map[v], map[u]);
        }
    }
    if (old_to_new) *old_to_new = map;
    return sub;
}

Graph relabel(const Graph& g, const std::array<int, kMaxVertices>& perm) {
    Graph out(g.n);
    for (int v = 0; v < g.n; ++v) {
        for (std::uint32_t rest = g.adj[v]; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (u > v) out.add_edge(perm[v], perm[u]);
        }
    }
    return out;
}

std::uint64_t edge_mask_of(const Graph& g) {
    std::uint64_t mask = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) mask |= std::uint64_t{1} << edge_bit_index(i, j);
    return mask;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> edge_bit_index(i, j)) & 1u) g.add_edge(i, j);
    return g;
}

Graph parse_graph6(const std::string& text) {
    // Strip surrounding whitespace and an optional ">>graph6<<" prefix.
    std::string s;
    for (char c : text)
        if (c != '\n' && c != '\r' && c != ' ' && c != '\t') s.push_back(c);
    if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
    if (s.empty()) throw std::invalid_argument("graph6: empty string");

    const unsigned char header = static_cast<unsigned char>(s[0]);
    if (header == 126)
        throw std::invalid_argument("graph6: long form not supported");
    if (header < 63 || header > 125)
        throw std::invalid_argument("graph6: malformed header byte");
    const int n = header - 63;
    if (n < 1) throw std::invalid_argument("graph6: the null graph is out of domain");
    if (n > kMaxVertices)
        throw std::invalid_argument("graph6: order " + std::to_string(n) +
                                    " exceeds capacity " + std::to_string(kMaxVertices));

    const int bits = n * (n - 1) / 2;
    const int body_len = (bits + 5) / 6;
    if (static_cast<int>(s.size()) - 1 < body_len)
        throw std::invalid_argument("graph6: truncated bit body");
    if (static_cast<int>(s.size()) - 1 > body_len)
        throw std::invalid_argument("graph6: trailing bytes after bit body");

    Graph g(n);
    int bit = 0;
    for (int b = 0; b < body_len; ++b) {
        const int raw = static_cast<unsigned char>(s[1 + b]) - 63;
        if (raw < 0 || raw > 63)
            throw std::invalid_argument("graph6: body byte out of range");
        for (int shift = 5; shift >= 0; --shift, ++bit) {
            const int value = (raw >> shift) & 1;
            if (bit >= bits) {
                if (value) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (value) {
                // Invert edge_bit_index: find column j with j(j-1)/2 <= bit.
                int j = 1;
                while ((j + 1) * j / 2 <= bit) ++j;
                g.add_edge(bit - j * (j - 1) / 2, j);
            }
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    validate(g);
    std::string out;
    out.push_back(static_cast<char>(63 + g.n));
    const int bits = g.n * (g.n - 1) / 2;
    int bit = 0;
    int acc = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bit % 6 == 0) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
            }
        }
    }
    if (bit % 6 != 0) {
        acc <<= 6 - bit % 6;
        out.push_back(static_cast<char>(63 + acc));
    }
    (void)bits;
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int declared_n = -1;
    bool first_content = true;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        long u, v;
        if (fields >> u) {
            if (fields >> v) {
                if (u < 0 || v < 0 || u >= kMaxVertices || v >= kMaxVertices)
                    throw std::invalid_argument("edge list: vertex out of range: " + line);
                edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
                max_vertex = std::max(max_vertex, static_cast<int>(std::max(u, v)));
            } else if (first_content) {
                if (u < 1 || u > kMaxVertices)
                    throw std::invalid_argument("edge list: vertex count out of range");
                declared_n = static_cast<int>(u);
            } else {
                throw std::invalid_argument("edge list: malformed line: " + line);
            }
            first_content = false;
        } else {
            throw std::invalid_argument("edge list: malformed line: " + line);
        }
    }
    const int n = declared_n >= 0 ? declared_n : max_vertex + 1;
    if (n < 1) throw std::invalid_argument("edge list: no vertices");
    if (max_vertex >= n) throw std::invalid_argument("edge list: edge beyond declared order");
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::string format_vertex_set(std::uint32_t mask) {
    std::string out;
    for (std::uint32_t rest = mask; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (!out.empty()) out.push_back(',');
        out += std::to_string(v);
    }
    return out;
}

}  // namespace gamecol
