#ifndef GAMECOL_GENERATORS_HPP
#define GAMECOL_GENERATORS_HPP

#include <utility>
#include <vector>

#include "gamecol/graph.hpp"

namespace gamecol {

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);

/// Complete multipartite graph with parts of the given sizes, assigned to
/// contiguous vertex blocks in the order given.
Graph complete_multipartite(const std::vector<int>& sizes);

/// Turan graph T(n,r): complete r-partite, part sizes as equal as possible,
/// larger parts first, contiguous vertex blocks.
Graph turan(int n, int r);

/// Part sizes of T(n,r), larger first.
std::vector<int> turan_part_sizes(int n, int r);

/// The classes of turan(n,r) as vertex masks (contiguous blocks).
std::vector<std::uint32_t> turan_classes(int n, int r);

/// K_{r,r} minus a perfect matching (left i matched to right i).
Graph k_rr_minus_matching(int r);

/// turan(n,r) with the listed edges removed; every listed edge must exist.
Graph turan_minus_edges(int n, int r, const std::vector<std::pair<int, int>>& removed);

/// Six vertices: a four-cycle 0-1-2-3, a pendant edge 0-4, and the isolated
/// vertex 5. The blanks game needs one more colour than the plain game here.
Graph separating_example();

}  // namespace gamecol

#endif
