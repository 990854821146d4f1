#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ksgraph/basis.hpp"
#include "ksgraph/graph.hpp"
#include "ksgraph/projections.hpp"
#include "ksgraph/report.hpp"

namespace ksg {

/// One side of an edge: "e" is the tail end, "-e" the head end (the end at
/// which the edge arrives).
struct EdgeEnd {
  std::string edge_id;
  bool at_head = false;

  bool operator==(const EdgeEnd& other) const {
    return edge_id == other.edge_id && at_head == other.at_head;
  }
  static EdgeEnd parse(const std::string& text);
  std::string to_string() const { return at_head ? "-" + edge_id : edge_id; }
};

/// A directed edge side: +e traverses tail->head, -e the reverse.
struct Dart {
  std::size_t edge = 0;
  bool forward = true;

  bool operator==(const Dart& other) const {
    return edge == other.edge && forward == other.forward;
  }
  bool operator<(const Dart& other) const {
    return edge != other.edge ? edge < other.edge : forward > other.forward;  // +e before -e
  }
};

/// A face as the cyclic dart sequence produced by tracing, starting at its
/// smallest dart.
using Face = std::vector<Dart>;

/// Combinatorial sphere embedding: either per-vertex rotations (cyclic edge-
/// end order) or an explicit face list.
struct PlanarEmbedding {
  std::optional<std::map<std::string, std::vector<EdgeEnd>>> rotations;
  std::optional<std::vector<std::vector<std::string>>> faces;  // signed edge ids
};

/// Faces of the rotation system, traced with the next-end rule (leave along
/// the cyclic successor of the arrival end). Deterministic: each face starts
/// at its smallest dart (by edge user order, +e before -e) and faces are
/// sorted by that dart. Throws BadRotation.
std::vector<Face> trace_faces(const OrientedGraph& g,
                              const std::map<std::string, std::vector<EdgeEnd>>& rotations);

/// Resolves an embedding to its face list (tracing rotations or validating an
/// explicit face list). Throws BadRotation.
std::vector<Face> resolve_faces(const OrientedGraph& g, const PlanarEmbedding& embedding);

struct DualResult {
  OrientedGraph dual;        // vertices f1..fF in face order; edge ids reused
  TreeSelection dual_tree;   // the primal cotree
  std::vector<Face> faces;   // primal faces backing the dual vertices
  PlanarEmbedding dual_embedding;  // induced rotations on the dual
  bool flipped = false;      // all dual orientations globally reversed
};

/// Dual graph of a sphere embedding: one vertex per face, one edge per primal
/// edge oriented left-face -> right-face, dual tree = primal chords.
/// Throws EulerViolation, NonSpanningCotree.
DualResult dual_graph(const OrientedGraph& g, const PlanarEmbedding& embedding,
                      const TreeSelection& t);

struct DualityReport {
  VerificationReport checks;
  bool flipped = false;      // global orientation flip applied to pass
  DualResult dual;           // as used by the passing convention
};

/// Builds the dual basis and projections and checks exactly *P = Q^T,
/// *Q = P^T, *Omega = Omega under the edge-id identification, trying the
/// as-built orientation first and the global flip second.
DualityReport verify_duality(const BasisBundle& primal_basis, const ProjectionPair& primal_proj,
                             const DualResult& dual);

/// Reverses every dual edge (and the induced embedding ends).
DualResult flip_dual(const DualResult& dual);

}  // namespace ksg
