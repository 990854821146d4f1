#pragma once

#include <string>
#include <vector>

#include "ksgraph/graph.hpp"
#include "ksgraph/matrix.hpp"

namespace ksg {

/// Fundamental cycle and cocycle vectors induced by a spanning tree. All
/// vectors are in canonical edge order (cochords first, then chords) and
/// have entries in {-1, 0, +1}. Construction verifies in exact arithmetic
/// that the defining orthogonality relations hold.
struct BasisBundle {
  OrientedGraph graph;
  TreeSelection tree;
  std::vector<IntVec> cycles;    // one per chord, canonical chord order
  std::vector<IntVec> cocycles;  // one per cochord, canonical cochord order

  std::size_t num_edges() const { return graph.num_edges(); }
  std::size_t num_cochords() const { return tree.num_cochords(); }
  std::size_t num_chords() const { return tree.num_chords(); }

  /// |C| x |E| matrix whose rows are the cycle vectors.
  RatMat cycle_matrix() const;
  /// (|V|-1) x |E| matrix whose rows are the cocycle vectors.
  RatMat cocycle_matrix() const;
  /// Incidence matrix with columns in canonical edge order.
  RatMat incidence_canonical() const;
};

/// Cycle closed by adding `chord_id` to the tree: +1 on the chord, +-1 on the
/// tree path from the chord's head back to its tail (+1 when the path
/// traverses a tree edge along its own orientation). A self-loop chord yields
/// the unit vector on itself. Canonical edge order. Throws NotAChord.
IntVec fundamental_cycle(const OrientedGraph& g, const TreeSelection& t,
                         const std::string& chord_id);

/// Cut produced by removing `cochord_id` from the tree: +1 on edges from the
/// source component (the one holding the cochord's tail) to the sink, -1 on
/// edges the other way. Canonical edge order. Throws NotACochord.
IntVec fundamental_cocycle(const OrientedGraph& g, const TreeSelection& t,
                           const std::string& cochord_id);

/// Builds all fundamental cycles and cocycles and verifies the bundle
/// invariants exactly (null space, row space, orthogonality table, entries).
BasisBundle build_basis(const OrientedGraph& g, const TreeSelection& t);

}  // namespace ksg
