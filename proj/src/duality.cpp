#include "ksgraph/duality.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ksgraph/error.hpp"

namespace ksg {

EdgeEnd EdgeEnd::parse(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty edge end");
  if (text[0] == '-') {
    if (text.size() == 1) throw Error(ErrorCode::ParseError, "bad edge end '-'");
    return {text.substr(1), true};
  }
  return {text, false};
}

namespace {

/// Dart index: 2*edge for +e, 2*edge+1 for -e.
std::size_t dart_key(const Dart& d) { return 2 * d.edge + (d.forward ? 0 : 1); }

Dart dart_from_key(std::size_t key) { return {key / 2, key % 2 == 0}; }

/// Arrival end of a dart: +e arrives on the head end "-e", -e on the tail
/// end "e".
EdgeEnd arrival_end(const OrientedGraph& g, const Dart& d) {
  return {g.edge(d.edge).id, d.forward};
}

/// Departing dart for an edge end: leaving through the tail end means
/// traversing forward, through the head end backward.
Dart departing_dart(const OrientedGraph& g, const EdgeEnd& end) {
  return {g.edge_index(end.edge_id), !end.at_head};
}

}  // namespace

std::vector<Face> trace_faces(const OrientedGraph& g,
                              const std::map<std::string, std::vector<EdgeEnd>>& rotations) {
  // Validate: each edge contributes its tail end at the tail vertex and its
  // head end at the head vertex, exactly once each, and nothing else.
  std::vector<int> tail_seen(g.num_edges(), 0), head_seen(g.num_edges(), 0);
  for (const auto& [vertex_id, ends] : rotations) {
    const std::size_t v = g.vertex_index(vertex_id);
    for (const auto& end : ends) {
      if (!g.has_edge(end.edge_id))
        throw Error(ErrorCode::BadRotation, "unknown edge '" + end.edge_id + "' in rotation");
      const std::size_t e = g.edge_index(end.edge_id);
      const std::size_t expected = end.at_head ? g.head_index(e) : g.tail_index(e);
      if (expected != v)
        throw Error(ErrorCode::BadRotation,
                    "end '" + end.to_string() + "' listed at wrong vertex '" + vertex_id + "'");
      (end.at_head ? head_seen : tail_seen)[e] += 1;
    }
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (tail_seen[e] != 1 || head_seen[e] != 1)
      throw Error(ErrorCode::BadRotation,
                  "edge '" + g.edge(e).id + "' must appear exactly once per end");
  }

  // Successor lookup: for each end, the next end in its vertex's cyclic order.
  // Ends are keyed like darts: 2*edge for the tail end, 2*edge+1 for head.
  auto end_key = [&](const EdgeEnd& end) {
    return 2 * g.edge_index(end.edge_id) + (end.at_head ? 1 : 0);
  };
  std::vector<EdgeEnd> successor(2 * g.num_edges());
  for (const auto& [vertex_id, ends] : rotations) {
    for (std::size_t i = 0; i < ends.size(); ++i)
      successor[end_key(ends[i])] = ends[(i + 1) % ends.size()];
  }

  std::vector<bool> traced(2 * g.num_edges(), false);
  std::vector<Face> faces;
  for (std::size_t start = 0; start < 2 * g.num_edges(); ++start) {
    if (traced[start]) continue;
    Face face;
    Dart d = dart_from_key(start);
    do {
      traced[dart_key(d)] = true;
      face.push_back(d);
      const EdgeEnd arrived = arrival_end(g, d);
      d = departing_dart(g, successor[end_key(arrived)]);
    } while (dart_key(d) != start);
    faces.push_back(std::move(face));
  }
  // Faces already start at their smallest dart (the scan order) and are
  // produced in sorted order by that dart.
  return faces;
}

namespace {

std::vector<Face> faces_from_lists(const OrientedGraph& g,
                                   const std::vector<std::vector<std::string>>& lists) {
  std::vector<int> plus_seen(g.num_edges(), 0), minus_seen(g.num_edges(), 0);
  std::vector<Face> faces;
  for (const auto& list : lists) {
    Face face;
    for (const auto& signed_id : list) {
      const EdgeEnd end = EdgeEnd::parse(signed_id);
      if (!g.has_edge(end.edge_id))
        throw Error(ErrorCode::BadRotation, "unknown edge '" + end.edge_id + "' in face");
      const std::size_t e = g.edge_index(end.edge_id);
      (end.at_head ? minus_seen : plus_seen)[e] += 1;
      face.push_back({e, !end.at_head});
    }
    if (face.empty()) throw Error(ErrorCode::BadRotation, "empty face");
    faces.push_back(std::move(face));
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (plus_seen[e] != 1 || minus_seen[e] != 1)
      throw Error(ErrorCode::BadRotation,
                  "edge '" + g.edge(e).id + "' must appear exactly once per side across faces");
  // Canonical start and order, matching trace_faces output.
  for (auto& face : faces) {
    const auto smallest = std::min_element(face.begin(), face.end());
    std::rotate(face.begin(), smallest, face.end());
  }
  std::sort(faces.begin(), faces.end(),
            [](const Face& a, const Face& b) { return a.front() < b.front(); });
  return faces;
}

}  // namespace

std::vector<Face> resolve_faces(const OrientedGraph& g, const PlanarEmbedding& embedding) {
  if (embedding.rotations) return trace_faces(g, *embedding.rotations);
  if (embedding.faces) return faces_from_lists(g, *embedding.faces);
  throw Error(ErrorCode::BadRotation, "embedding carries neither rotations nor faces");
}

DualResult dual_graph(const OrientedGraph& g, const PlanarEmbedding& embedding,
                      const TreeSelection& t) {
  DualResult result;
  result.faces = resolve_faces(g, embedding);
  const std::size_t nf = result.faces.size();

  const long long euler = static_cast<long long>(g.num_vertices()) -
                          static_cast<long long>(g.num_edges()) + static_cast<long long>(nf);
  if (euler != 2) {
    std::ostringstream os;
    os << "|V| - |E| + |F| = " << euler << " != 2";
    throw Error(ErrorCode::EulerViolation, os.str());
  }

  // Face of each dart; the face containing +e is the right side of e.
  std::vector<std::size_t> face_of_dart(2 * g.num_edges());
  std::vector<std::string> face_names(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    face_names[f] = "f" + std::to_string(f + 1);
    for (const Dart& d : result.faces[f]) face_of_dart[2 * d.edge + (d.forward ? 0 : 1)] = f;
  }

  // Dual edge: left face -> right face, i.e. face(-e) -> face(+e).
  std::vector<Edge> dual_edges;
  dual_edges.reserve(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    dual_edges.push_back({g.edge(e).id, face_names[face_of_dart[2 * e + 1]],
                          face_names[face_of_dart[2 * e]]});
  }
  result.dual = OrientedGraph::create(face_names, std::move(dual_edges));

  std::set<std::string> cotree(t.chord_edges.begin(), t.chord_edges.end());
  try {
    result.dual_tree = validate_tree(result.dual, cotree);
  } catch (const Error& err) {
    throw Error(ErrorCode::NonSpanningCotree,
                std::string("primal cotree is not a dual spanning tree (") + err.what() + ")");
  }

  // Induced rotation at a face-vertex: walk the face and record, for each
  // dart, the end of the dual edge incident to that face.
  std::map<std::string, std::vector<EdgeEnd>> dual_rotations;
  for (std::size_t f = 0; f < nf; ++f) {
    std::vector<EdgeEnd> ends;
    for (const Dart& d : result.faces[f])
      ends.push_back({g.edge(d.edge).id, d.forward});  // +e dart: dual head end
    dual_rotations[face_names[f]] = std::move(ends);
  }
  result.dual_embedding.rotations = std::move(dual_rotations);
  result.flipped = false;
  return result;
}

DualResult flip_dual(const DualResult& dual) {
  DualResult out;
  out.faces = dual.faces;
  out.flipped = !dual.flipped;
  std::vector<Edge> edges;
  for (const Edge& e : dual.dual.edges()) edges.push_back({e.id, e.head, e.tail});
  out.dual = OrientedGraph::create(dual.dual.vertices(), std::move(edges));
  std::set<std::string> tree_ids(dual.dual_tree.tree_edges.begin(),
                                 dual.dual_tree.tree_edges.end());
  out.dual_tree = validate_tree(out.dual, tree_ids);
  if (dual.dual_embedding.rotations) {
    std::map<std::string, std::vector<EdgeEnd>> rotations;
    for (const auto& [vertex, ends] : *dual.dual_embedding.rotations) {
      std::vector<EdgeEnd> flipped_ends;
      for (const auto& end : ends) flipped_ends.push_back({end.edge_id, !end.at_head});
      rotations[vertex] = std::move(flipped_ends);
    }
    out.dual_embedding.rotations = std::move(rotations);
  }
  return out;
}

namespace {

/// Reindexes a canonical-order matrix to user edge order.
RatMat to_user_order(const RatMat& canonical, const TreeSelection& t) {
  return canonical.permuted(t.user_to_canon, t.user_to_canon);
}

/// Maps user order of the dual graph to user order of the primal: the dual
/// reuses primal edge ids, so this is the identity whenever the dual edge
/// list is emitted in primal user order (it is).
VerificationReport duality_checks(const BasisBundle& primal_basis,
                                  const ProjectionPair& primal_proj, const DualResult& dual) {
  const BasisBundle dual_basis = build_basis(dual.dual, dual.dual_tree);
  const ProjectionPair dual_proj = build_projections(dual_basis);

  const RatMat p_user = to_user_order(primal_proj.P, primal_basis.tree);
  const RatMat q_user = to_user_order(primal_proj.Q, primal_basis.tree);
  const RatMat omega_user = to_user_order(primal_proj.omega_full, primal_basis.tree);
  const RatMat dp_user = to_user_order(dual_proj.P, dual_basis.tree);
  const RatMat dq_user = to_user_order(dual_proj.Q, dual_basis.tree);
  const RatMat domega_user = to_user_order(dual_proj.omega_full, dual_basis.tree);

  VerificationReport report;
  report.add("dual_P_is_Q_transpose", dp_user == q_user.transpose(),
             RatMat::first_difference(dp_user, q_user.transpose()));
  report.add("dual_Q_is_P_transpose", dq_user == p_user.transpose(),
             RatMat::first_difference(dq_user, p_user.transpose()));
  report.add("omega_self_dual", domega_user == omega_user,
             RatMat::first_difference(domega_user, omega_user));
  return report;
}

}  // namespace

DualityReport verify_duality(const BasisBundle& primal_basis, const ProjectionPair& primal_proj,
                             const DualResult& dual) {
  DualityReport report;
  report.checks = duality_checks(primal_basis, primal_proj, dual);
  report.flipped = dual.flipped;
  report.dual = dual;
  if (!report.checks.all_pass()) {
    const DualResult flipped = flip_dual(dual);
    VerificationReport retry = duality_checks(primal_basis, primal_proj, flipped);
    if (retry.all_pass()) {
      report.checks = std::move(retry);
      report.flipped = flipped.flipped;
      report.dual = flipped;
    }
  }
  return report;
}

}  // namespace ksg
