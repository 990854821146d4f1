#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ksgraph/error.hpp"
#include "ksgraph/laplacian.hpp"
#include "ksgraph/random_graphs.hpp"

using ksg::OrientedGraph;
using ksg::RatMat;

TEST_CASE("laplacians of the fixtures") {
  const auto quad = ksg::testing::square_diagonal();
  const auto expected = ksg::testing::expected_square_diagonal();
  CHECK(ksg::laplacian(quad.graph) == ksg::testing::matrix_from_json(expected["laplacian"]));

  const auto edge = ksg::testing::single_edge();
  CHECK(ksg::laplacian(edge.graph) == RatMat::from_int_rows({{1, -1}, {-1, 1}}));

  const auto tri = ksg::testing::triangle();
  CHECK(ksg::laplacian(tri.graph) ==
        RatMat::from_int_rows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
}

TEST_CASE("laplacian requires a simple graph") {
  CHECK_THROWS_WITH_AS(ksg::laplacian(ksg::testing::loop_graph().graph),
                       doctest::Contains("NotSimple"), ksg::Error);
  const OrientedGraph parallel =
      OrientedGraph::create({"a", "b"}, {{"e1", "a", "b"}, {"e2", "b", "a"}});
  CHECK_THROWS_WITH_AS(ksg::laplacian(parallel), doctest::Contains("NotSimple"), ksg::Error);
}

TEST_CASE("cone augmentation shape") {
  const auto quad = ksg::testing::square_diagonal();
  const auto cone = ksg::cone_augment(quad.graph);
  CHECK(cone.augmented.num_vertices() == 5);
  CHECK(cone.augmented.num_edges() == 9);
  CHECK(cone.star_tree.num_cochords() == 4);
  CHECK(cone.star_tree.num_chords() == 5);  // cyclomatic number |E|
  CHECK(cone.apex_id == "v0");
  CHECK(cone.cochord_index_of_vertex == std::vector<std::size_t>{0, 1, 2, 3});

  const auto edge = ksg::testing::single_edge();
  CHECK(ksg::cone_augment(edge.graph).augmented.num_edges() == 3);

  const auto tri = ksg::testing::triangle();
  const auto tri_cone = ksg::cone_augment(tri.graph);
  CHECK(tri_cone.augmented.num_edges() == 6);
  CHECK(tri_cone.star_tree.num_chords() == 3);
}

TEST_CASE("apex naming avoids collisions") {
  const OrientedGraph g =
      OrientedGraph::create({"v0", "x"}, {{"e1", "v0", "x"}});
  const auto cone = ksg::cone_augment(g);
  CHECK(cone.apex_id == "_v0");
  CHECK(cone.augmented.num_vertices() == 3);
}

TEST_CASE("cone cocycle KS matrix equals laplacian plus identity") {
  for (const auto& doc :
       {ksg::testing::square_diagonal(), ksg::testing::single_edge(), ksg::testing::triangle()}) {
    CHECK(ksg::laplacian_shift_check(doc.graph).all_pass());
  }
  const auto edge = ksg::testing::single_edge();
  const auto cone = ksg::cone_augment(edge.graph);
  const auto basis = ksg::build_basis(cone.augmented, cone.star_tree);
  const RatMat kstar = basis.cocycle_matrix() * basis.cocycle_matrix().transpose();
  CHECK(kstar == RatMat::from_int_rows({{2, -1}, {-1, 2}}));
}

TEST_CASE("laplacian properties and the shift identity on random simple graphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 110; ++trial) {
    const OrientedGraph g = ksg::random_connected_simple_graph(rng, 8);
    const RatMat delta = ksg::laplacian(g);
    CHECK(delta.is_symmetric());
    for (std::size_t i = 0; i < delta.rows(); ++i) {
      ksg::Rat row_sum = 0;
      for (std::size_t j = 0; j < delta.cols(); ++j) row_sum += delta(i, j);
      CHECK(row_sum == 0);
    }
    // eigenvalue 0 is simple for connected graphs
    CHECK(delta.rank() == g.num_vertices() - 1);
    CHECK(ksg::laplacian_shift_check(g).all_pass());

    // matrix-tree cross-check through the cone
    const auto cone = ksg::cone_augment(g);
    if (cone.augmented.num_edges() <= 24) {
      const auto basis = ksg::build_basis(cone.augmented, cone.star_tree);
      const RatMat kstar = basis.cocycle_matrix() * basis.cocycle_matrix().transpose();
      CHECK(kstar.det() == ksg::Rat(ksg::enumerate_spanning_trees(cone.augmented)));
    }

    // a third route to the tree count: any principal minor of the Laplacian
    if (g.num_edges() <= 24) {
      const std::size_t nv = g.num_vertices();
      const RatMat minor = delta.block(1, 1, nv - 1, nv - 1);
      CHECK(minor.det() == ksg::Rat(ksg::enumerate_spanning_trees(g)));
    }
  }
}
