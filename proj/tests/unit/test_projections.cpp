#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ksgraph/projections.hpp"
#include "ksgraph/random_graphs.hpp"

using ksg::BasisBundle;
using ksg::ProjectionPair;
using ksg::RatMat;

namespace {

ProjectionPair pair_for(const ksg::GraphDocument& doc) {
  return ksg::build_projections(ksg::build_basis(doc.graph, ksg::testing::document_tree(doc)));
}

}  // namespace

TEST_CASE("P, Q, Omega of the square-diagonal fixture match the reference matrices") {
  const auto expected = ksg::testing::expected_square_diagonal();
  const ProjectionPair p = pair_for(ksg::testing::square_diagonal());
  CHECK(p.P == ksg::testing::matrix_from_json(expected["P"]));
  CHECK(p.Q == ksg::testing::matrix_from_json(expected["Q"]));
  CHECK(p.omega_full == ksg::testing::matrix_from_json(expected["Omega"]));
}

TEST_CASE("degenerate pairs: single edge and loop graph") {
  const ProjectionPair edge = pair_for(ksg::testing::single_edge());
  CHECK(edge.P == RatMat::zero(1, 1));
  CHECK(edge.Q == RatMat::identity(1));

  const ProjectionPair loop = pair_for(ksg::testing::loop_graph());
  CHECK(loop.P == RatMat::from_int_rows({{0, 0}, {0, 1}}));
  CHECK(loop.Q == RatMat::from_int_rows({{1, 0}, {0, 0}}));
  CHECK(loop.omega_full.is_zero());
  CHECK(loop.P.is_symmetric());
}

TEST_CASE("projection identity reports pass on the fixtures") {
  for (const auto& doc : {ksg::testing::square_diagonal(), ksg::testing::triangle(),
                          ksg::testing::single_edge(), ksg::testing::loop_graph()}) {
    const BasisBundle b = ksg::build_basis(doc.graph, ksg::testing::document_tree(doc));
    const ProjectionPair p = ksg::build_projections(b);
    CHECK(ksg::verify_projection_identities(b, p).all_pass());
    CHECK(ksg::verify_two_form(b, p).all_pass());
  }
}

TEST_CASE("triangle superposition block") {
  const auto tri = ksg::testing::triangle();
  const ProjectionPair p = pair_for(tri);
  CHECK(p.omega_block == RatMat::from_int_rows({{1}, {1}}));
}

TEST_CASE("failed checks carry the first offending coordinates") {
  const auto doc = ksg::testing::square_diagonal();
  const BasisBundle b = ksg::build_basis(doc.graph, ksg::testing::document_tree(doc));
  ProjectionPair p = ksg::build_projections(b);
  p.P(0, 0) = 7;  // sabotage
  const auto report = ksg::verify_projection_identities(b, p);
  CHECK_FALSE(report.all_pass());
  const auto* idem = report.find("P_idempotent");
  REQUIRE(idem != nullptr);
  CHECK_FALSE(idem->pass);
  CHECK(idem->detail.find("(0,0)") != std::string::npos);
}

TEST_CASE("pair invariants hold on random connected multigraphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 220; ++trial) {
    const ksg::OrientedGraph g = ksg::random_connected_multigraph(rng, 8, 14);
    const BasisBundle b = ksg::build_basis(g, ksg::default_spanning_tree(g));
    const ProjectionPair p = ksg::build_projections(b);  // asserts the algebra
    CHECK(ksg::verify_projection_identities(b, p).all_pass());
    CHECK(ksg::verify_two_form(b, p).all_pass());
    // orthogonality <=> vanishing two-form
    CHECK(p.omega_full.is_zero() == p.P.is_symmetric());
  }
}
