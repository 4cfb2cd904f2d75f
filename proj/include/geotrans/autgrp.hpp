#ifndef GEOTRANS_AUTGRP_HPP
#define GEOTRANS_AUTGRP_HPP

#include <vector>

#include "geotrans/graph.hpp"
#include "geotrans/perm_group.hpp"

namespace geotrans {

// ordered list of disjoint cells covering all vertices; finer cells to the
// left split off earlier and generators must respect cell membership
using ColoredPartition = std::vector<std::vector<int>>;

// coarsest equitable refinement: afterwards any two vertices in the same
// cell have equally many neighbours in every cell. Deterministic: splitter
// cells are processed first in, first out, split parts are ordered by
// ascending neighbour count, and the whole trace depends only on the graph
// up to relabelling.
ColoredPartition refine(const Graph& g, const ColoredPartition& partition);

// the full automorphism group, via refinement plus individualization
// backtracking. Pruning uses a per-depth partition invariant against the
// first (leftmost) root-to-leaf path, orbit filtering under the generators
// found so far, and early exit from non-leftmost subtrees once a single
// automorphism appears there.
PermGroup automorphism_group(const Graph& g, const Caps& caps = {});

// same, but only permutations preserving each starting cell are considered
PermGroup automorphism_group(const Graph& g, const ColoredPartition& initial,
                             const Caps& caps = {});

bool is_isomorphic(const Graph& a, const Graph& b, const Caps& caps = {});

}  // namespace geotrans

#endif
