#include "ksgraph/laplacian.hpp"

#include <set>

#include "ksgraph/basis.hpp"
#include "ksgraph/error.hpp"

namespace ksg {

namespace {

void require_simple(const OrientedGraph& g) {
  if (!g.is_simple())
    throw Error(ErrorCode::NotSimple, "graph has a self-loop or parallel edges");
}

std::string fresh_id(const std::string& base, const std::set<std::string>& taken) {
  std::string id = base;
  while (taken.count(id)) id = "_" + id;
  return id;
}

}  // namespace

RatMat laplacian(const OrientedGraph& g) {
  require_simple(g);
  const RatMat incidence = g.incidence();
  return incidence * incidence.transpose();
}

ConeResult cone_augment(const OrientedGraph& g) {
  require_simple(g);
  ConeResult result;

  std::set<std::string> vertex_ids(g.vertices().begin(), g.vertices().end());
  result.apex_id = fresh_id("v0", vertex_ids);

  std::set<std::string> edge_ids;
  for (const Edge& e : g.edges()) edge_ids.insert(e.id);

  std::vector<std::string> vertices;
  vertices.push_back(result.apex_id);
  vertices.insert(vertices.end(), g.vertices().begin(), g.vertices().end());

  std::vector<Edge> edges = g.edges();
  for (const std::string& target : g.vertices()) {
    const std::string id = fresh_id("a_" + target, edge_ids);
    edge_ids.insert(id);
    result.apex_edge_ids.push_back(id);
    edges.push_back({id, result.apex_id, target});
  }
  result.augmented = OrientedGraph::create(std::move(vertices), std::move(edges));
  result.star_tree = validate_tree(
      result.augmented,
      std::set<std::string>(result.apex_edge_ids.begin(), result.apex_edge_ids.end()));
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const std::size_t user = result.augmented.edge_index(result.apex_edge_ids[v]);
    result.cochord_index_of_vertex.push_back(result.star_tree.user_to_canon[user]);
  }
  return result;
}

VerificationReport laplacian_shift_check(const OrientedGraph& g) {
  VerificationReport report;
  const RatMat delta = laplacian(g);
  const ConeResult cone = cone_augment(g);
  const BasisBundle basis = build_basis(cone.augmented, cone.star_tree);
  const RatMat cocycles = basis.cocycle_matrix();
  const RatMat kstar = cocycles * cocycles.transpose();
  const RatMat shifted = delta + RatMat::identity(g.num_vertices());
  report.add("cone_kstar_is_laplacian_plus_identity", kstar == shifted,
             RatMat::first_difference(kstar, shifted));
  return report;
}

}  // namespace ksg
