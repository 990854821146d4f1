#pragma once

#include <string>
#include <vector>

#include "ksgraph/graph.hpp"
#include "ksgraph/matrix.hpp"
#include "ksgraph/report.hpp"

namespace ksg {

/// Graph Laplacian D = d d^T of a simple connected graph (degrees on the
/// diagonal, -1 for adjacency). Throws NotSimple.
RatMat laplacian(const OrientedGraph& g);

/// Cone over a simple connected graph: an apex vertex joined to every
/// original vertex by an edge oriented out of the apex.
struct ConeResult {
  OrientedGraph augmented;   // apex first, then original vertices; apex edges appended
  TreeSelection star_tree;   // the apex star
  std::string apex_id;
  std::vector<std::string> apex_edge_ids;  // ordered by target vertex user order
  /// Canonical cochord index of the apex edge targeting each original vertex.
  std::vector<std::size_t> cochord_index_of_vertex;
};

/// Throws NotSimple.
ConeResult cone_augment(const OrientedGraph& g);

/// Exact check that the cocycle KS matrix of the cone under the star tree
/// equals the Laplacian plus the identity.
VerificationReport laplacian_shift_check(const OrientedGraph& g);

}  // namespace ksg
