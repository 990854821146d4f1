#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ksgraph/basis.hpp"
#include "ksgraph/error.hpp"
#include "ksgraph/random_graphs.hpp"

using ksg::BasisBundle;
using ksg::IntVec;
using ksg::OrientedGraph;
using ksg::TreeSelection;

TEST_CASE("fundamental cycles of the square-diagonal fixture") {
  const auto doc = ksg::testing::square_diagonal();
  const TreeSelection t = ksg::testing::document_tree(doc);
  CHECK(ksg::fundamental_cycle(doc.graph, t, "e4") == IntVec{0, 1, 1, 1, 0});
  CHECK(ksg::fundamental_cycle(doc.graph, t, "e5") == IntVec{1, -1, 0, 0, 1});
  CHECK_THROWS_WITH_AS(ksg::fundamental_cycle(doc.graph, t, "e1"),
                       doctest::Contains("NotAChord"), ksg::Error);
}

TEST_CASE("self-loop chord cycles are the loop alone") {
  const auto doc = ksg::testing::loop_graph();
  const TreeSelection t = ksg::testing::document_tree(doc);
  CHECK(ksg::fundamental_cycle(doc.graph, t, "e2") == IntVec{0, 1});
}

TEST_CASE("fundamental cocycles of the square-diagonal fixture") {
  const auto doc = ksg::testing::square_diagonal();
  const TreeSelection t = ksg::testing::document_tree(doc);
  CHECK(ksg::fundamental_cocycle(doc.graph, t, "e1") == IntVec{1, 0, 0, 0, -1});
  CHECK(ksg::fundamental_cocycle(doc.graph, t, "e2") == IntVec{0, 1, 0, -1, 1});
  CHECK(ksg::fundamental_cocycle(doc.graph, t, "e3") == IntVec{0, 0, 1, -1, 0});
  CHECK_THROWS_WITH_AS(ksg::fundamental_cocycle(doc.graph, t, "e4"),
                       doctest::Contains("NotACochord"), ksg::Error);
}

TEST_CASE("single-edge cocycle") {
  const auto doc = ksg::testing::single_edge();
  const TreeSelection t = ksg::testing::document_tree(doc);
  CHECK(ksg::fundamental_cocycle(doc.graph, t, "e1") == IntVec{1});
}

TEST_CASE("build_basis on the fixtures") {
  const auto quad = ksg::testing::square_diagonal();
  const BasisBundle b = ksg::build_basis(quad.graph, ksg::testing::document_tree(quad));
  CHECK(b.cycles.size() == 2);
  CHECK(b.cocycles.size() == 3);
  CHECK(b.cycles[0] == IntVec{0, 1, 1, 1, 0});
  CHECK(b.cycles[1] == IntVec{1, -1, 0, 0, 1});
  CHECK(b.cocycles[0] == IntVec{1, 0, 0, 0, -1});

  const auto edge = ksg::testing::single_edge();
  const BasisBundle be = ksg::build_basis(edge.graph, ksg::testing::document_tree(edge));
  CHECK(be.cycles.empty());
  CHECK(be.cocycles.size() == 1);
  CHECK(be.cocycles[0] == IntVec{1});

  const auto tri = ksg::testing::triangle();
  const BasisBundle bt = ksg::build_basis(tri.graph, ksg::testing::document_tree(tri));
  CHECK(bt.cycles[0] == IntVec{1, 1, 1});
  CHECK(bt.cocycles[0] == IntVec{1, 0, -1});
  CHECK(bt.cocycles[1] == IntVec{0, 1, -1});
}

TEST_CASE("parallel chords and their cocycle contributions") {
  // e2 runs parallel to the tree edge e1, e3 antiparallel.
  const OrientedGraph g = OrientedGraph::create(
      {"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "b", "a"}});
  const TreeSelection t = ksg::validate_tree(g, {"e1"});
  CHECK(ksg::fundamental_cycle(g, t, "e2") == IntVec{-1, 1, 0});
  CHECK(ksg::fundamental_cycle(g, t, "e3") == IntVec{1, 0, 1});
  CHECK(ksg::fundamental_cocycle(g, t, "e1") == IntVec{1, 1, -1});
}

TEST_CASE("orthogonality table holds on random connected multigraphs") {
  // build_basis verifies the full table exactly and throws on violation.
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 220; ++trial) {
    const OrientedGraph g = ksg::random_connected_multigraph(rng, 8, 14);
    CHECK_NOTHROW(ksg::build_basis(g, ksg::default_spanning_tree(g)));
  }
}

TEST_CASE("canonical order with a non-prefix tree") {
  const auto quad = ksg::testing::square_diagonal();
  const TreeSelection t = ksg::validate_tree(quad.graph, {"e1", "e3", "e4"});
  CHECK(t.tree_edges == std::vector<std::string>{"e1", "e3", "e4"});
  CHECK(t.chord_edges == std::vector<std::string>{"e2", "e5"});
  CHECK(t.canon_to_user == std::vector<std::size_t>{0, 2, 3, 1, 4});
  const BasisBundle b = ksg::build_basis(quad.graph, t);
  // c_{e2} = e2 + e3 + e4 in user terms -> canonical (e1,e3,e4,e2,e5)
  CHECK(b.cycles[0] == IntVec{0, 1, 1, 1, 0});
}
