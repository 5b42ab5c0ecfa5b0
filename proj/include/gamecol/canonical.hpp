#ifndef GAMECOL_CANONICAL_HPP
#define GAMECOL_CANONICAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "gamecol/graph.hpp"

namespace gamecol {

/// Canonical graph6 string of the isomorphism class: the lexicographically
/// smallest graph6 encoding over all vertex relabellings. Exhaustive over all
/// n! permutations, so restricted to n <= 8; beyond that the labelled
/// encoding is returned unchanged (keys then distinguish labelled graphs, not
/// isomorphism classes).
using CanonicalKey = std::string;

CanonicalKey canonical_key(const Graph& g);

/// The graph that canonical_key(g) encodes.
Graph canonical_form(const Graph& g);

/// True iff canonical keys agree; requires n <= 8.
bool isomorphic(const Graph& a, const Graph& b);

/// Streams exactly one representative per isomorphism class of order n
/// (1 <= n <= 7), in increasing edge count; each emitted graph is its own
/// canonical form. Implemented by sweeping all labelled edge masks and
/// marking the whole permutation orbit of each new class as seen.
void enumerate_graphs(int n, const std::function<void(const Graph&)>& emit);

std::vector<Graph> all_graphs(int n);

}  // namespace gamecol

#endif
