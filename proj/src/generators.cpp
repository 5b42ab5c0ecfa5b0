#include "gamecol/generators.hpp"

#include <numeric>
#include <stdexcept>

namespace gamecol {

Graph empty_graph(int n) {
    if (n < 1) throw std::invalid_argument("empty_graph: n must be positive");
    return Graph(n);
}

Graph complete_graph(int n) {
    Graph g = empty_graph(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g = empty_graph(n);
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be at least 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("complete_multipartite: no parts");
    int total = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("complete_multipartite: part size must be positive");
        total += s;
    }
    Graph g = empty_graph(total);
    int row_start = 0;
    for (int s : sizes) {
        for (int v = row_start; v < row_start + s; ++v)
            for (int u = 0; u < row_start; ++u) g.add_edge(u, v);
        row_start += s;
    }
    return g;
}

Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

std::vector<int> turan_part_sizes(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("turan: need 1 <= r <= n");
    std::vector<int> sizes(r, n / r);
    for (int i = 0; i < n % r; ++i) ++sizes[i];
    return sizes;
}

Graph turan(int n, int r) { return complete_multipartite(turan_part_sizes(n, r)); }

std::vector<std::uint32_t> turan_classes(int n, int r) {
    std::vector<std::uint32_t> classes;
    int start = 0;
    for (int s : turan_part_sizes(n, r)) {
        std::uint32_t mask = 0;
        for (int v = start; v < start + s; ++v) mask |= 1u << v;
        classes.push_back(mask);
        start += s;
    }
    return classes;
}

Graph k_rr_minus_matching(int r) {
    if (r < 1) throw std::invalid_argument("k_rr_minus_matching: r must be positive");
    Graph g = empty_graph(2 * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (i != j) g.add_edge(i, r + j);
    return g;
}

Graph turan_minus_edges(int n, int r, const std::vector<std::pair<int, int>>& removed) {
    Graph g = turan(n, r);
    for (auto [u, v] : removed) {
        if (u < 0 || v < 0 || u >= n || v >= n || !g.has_edge(u, v))
            throw std::invalid_argument("turan_minus_edges: edge " + std::to_string(u) + "-" +
                                        std::to_string(v) + " not present");
        g.remove_edge(u, v);
    }
    return g;
}

Graph separating_example() {
    Graph g = empty_graph(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(0, 4);
    return g;
}

}  // namespace gamecol
