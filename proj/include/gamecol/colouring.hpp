#ifndef GAMECOL_COLOURING_HPP
#define GAMECOL_COLOURING_HPP

#include <functional>
#include <string>
#include <vector>

#include "gamecol/graph.hpp"

namespace gamecol {

/// Minimum number of colours in a proper colouring. Backtracking with
/// saturation-based vertex ordering; exact for any graph within capacity.
int chromatic_number(const Graph& g);

/// True iff g admits a proper colouring with at most k colours.
bool colourable(const Graph& g, int k);

/// Ordered list of disjoint non-empty vertex classes covering V(G); every
/// class is an independent set of the associated graph.
struct Partition {
    std::vector<std::uint32_t> classes;

    int p() const { return static_cast<int>(classes.size()); }
    int class_of(int v) const;
    /// Class sizes sorted in decreasing order.
    std::vector<int> size_sequence() const;
};

std::string format_partition(const Partition& part);

/// Streams every set partition of V(G) into at most max_p non-empty
/// independent sets, each exactly once, classes ordered by smallest member.
/// Full enumeration capped at n <= 8.
void for_each_independent_partition(const Graph& g, int max_p,
                                    const std::function<void(const Partition&)>& emit);

std::vector<Partition> independent_partitions(const Graph& g, int max_p);

/// True iff g is one of the known extremal cases for the colouring-game gap:
/// order at most 3, a balanced Turan graph T(2r,r), or a connected subgraph
/// of K_{2,3} containing P4. Requires n <= 7.
bool equality_exception_predicate(const Graph& g);

}  // namespace gamecol

#endif
