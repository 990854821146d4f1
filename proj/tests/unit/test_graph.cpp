#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ksgraph/error.hpp"
#include "ksgraph/graph.hpp"
#include "ksgraph/random_graphs.hpp"
#include "oracles.hpp"

using ksg::Edge;
using ksg::ErrorCode;
using ksg::OrientedGraph;
using ksg::RatMat;
using ksg::TreeSelection;

TEST_CASE("loading the square-diagonal fixture") {
  const auto doc = ksg::testing::square_diagonal();
  CHECK(doc.graph.num_vertices() == 4);
  CHECK(doc.graph.num_edges() == 5);
  CHECK(doc.tree.has_value());
}

TEST_CASE("load errors: duplicate ids, unknown endpoints, disconnection") {
  CHECK_THROWS_WITH_AS(
      OrientedGraph::create({"a", "a"}, {}), doctest::Contains("DuplicateId"), ksg::Error);
  CHECK_THROWS_WITH_AS(
      OrientedGraph::create({"a", "b"}, {{"e1", "a", "b"}, {"e1", "b", "a"}}),
      doctest::Contains("DuplicateId"), ksg::Error);
  CHECK_THROWS_WITH_AS(OrientedGraph::create({"a", "b"}, {{"e1", "a", "c"}}),
                       doctest::Contains("UnknownEndpoint"), ksg::Error);
  CHECK_THROWS_WITH_AS(OrientedGraph::create({"a", "b"}, {}),
                       doctest::Contains("Disconnected"), ksg::Error);
}

TEST_CASE("connectivity on edge-deleted variants, against the union-find oracle") {
  const auto doc = ksg::testing::square_diagonal();
  const auto& g = doc.graph;

  // dropping e5 leaves the graph connected
  {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
      if (e.id != "e5") edges.push_back(e);
    CHECK_NOTHROW(OrientedGraph::create(g.vertices(), edges));
    CHECK(ksg::testing::connected_with_edges(g, {0, 1, 2, 3}));
  }
  // dropping e5 and e1 isolates v1
  {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
      if (e.id != "e5" && e.id != "e1") edges.push_back(e);
    CHECK_THROWS_WITH_AS(OrientedGraph::create(g.vertices(), edges),
                         doctest::Contains("Disconnected"), ksg::Error);
    CHECK_FALSE(ksg::testing::connected_with_edges(g, {1, 2, 3}));
  }
}

TEST_CASE("incidence matrices of the fixtures") {
  const auto quad = ksg::testing::square_diagonal();
  const RatMat expected = RatMat::from_int_rows({{-1, 0, 0, 0, 1},
                                                 {1, 1, 0, -1, 0},
                                                 {0, -1, 1, 0, -1},
                                                 {0, 0, -1, 1, 0}});
  CHECK(quad.graph.incidence() == expected);

  const auto edge = ksg::testing::single_edge();
  CHECK(edge.graph.incidence() == RatMat::from_int_rows({{-1}, {1}}));

  const auto loop = ksg::testing::loop_graph();
  CHECK(loop.graph.incidence() == RatMat::from_int_rows({{-1, 0}, {1, 0}}));
}

TEST_CASE("incidence columns sum to zero and rank is |V|-1") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const OrientedGraph g = ksg::random_connected_multigraph(rng, 8, 14);
    const RatMat incidence = g.incidence();
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      ksg::Rat sum = 0;
      for (std::size_t v = 0; v < g.num_vertices(); ++v) sum += incidence(v, e);
      CHECK(sum == 0);
    }
    CHECK(incidence.rank() == g.num_vertices() - 1);
  }
}

TEST_CASE("default spanning trees follow the documented traversal") {
  const auto quad = ksg::testing::square_diagonal();
  CHECK(ksg::default_spanning_tree(quad.graph).tree_edges ==
        std::vector<std::string>{"e1", "e3", "e4"});

  const auto edge = ksg::testing::single_edge();
  CHECK(ksg::default_spanning_tree(edge.graph).tree_edges == std::vector<std::string>{"e1"});

  const auto tri = ksg::testing::triangle();
  CHECK(ksg::default_spanning_tree(tri.graph).tree_edges ==
        std::vector<std::string>{"e1", "e2"});
}

TEST_CASE("validate_tree on the square-diagonal fixture") {
  const auto quad = ksg::testing::square_diagonal();
  const TreeSelection t = ksg::validate_tree(quad.graph, {"e1", "e2", "e3"});
  CHECK(t.tree_edges == std::vector<std::string>{"e1", "e2", "e3"});
  CHECK(t.chord_edges == std::vector<std::string>{"e4", "e5"});
  CHECK(t.canon_to_user == std::vector<std::size_t>{0, 1, 2, 3, 4});

  CHECK_THROWS_WITH_AS(ksg::validate_tree(quad.graph, {"e1", "e2", "e4", "e5"}),
                       doctest::Contains("WrongCardinality"), ksg::Error);
  CHECK_THROWS_WITH_AS(ksg::validate_tree(quad.graph, {"e1", "e2", "e5"}),
                       doctest::Contains("ContainsCycle"), ksg::Error);
}

TEST_CASE("validate_tree rejects self-loops and non-spanning sets") {
  const OrientedGraph g = OrientedGraph::create(
      {"a", "b", "c"},
      {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "a", "a"}, {"e4", "a", "b"}});
  CHECK_THROWS_WITH_AS(ksg::validate_tree(g, {"e1", "e3"}),
                       doctest::Contains("ContainsSelfLoop"), ksg::Error);
  CHECK_THROWS_WITH_AS(ksg::validate_tree(g, {"e1", "e4"}),
                       doctest::Contains("ContainsCycle"), ksg::Error);
  const TreeSelection t = ksg::validate_tree(g, {"e1", "e2"});
  CHECK(t.chord_edges == std::vector<std::string>{"e3", "e4"});
}

TEST_CASE("triangle tree variants") {
  const auto tri = ksg::testing::triangle();
  const TreeSelection t = ksg::validate_tree(tri.graph, {"e1", "e3"});
  CHECK(t.chord_edges == std::vector<std::string>{"e2"});
}

TEST_CASE("spanning tree enumeration on fixtures") {
  CHECK(ksg::enumerate_spanning_trees(ksg::testing::square_diagonal().graph) == 8);
  CHECK(ksg::enumerate_spanning_trees(ksg::testing::single_edge().graph) == 1);
  CHECK(ksg::enumerate_spanning_trees(ksg::testing::triangle().graph) == 3);
  CHECK(ksg::enumerate_spanning_trees(ksg::testing::loop_graph().graph) == 1);
}

TEST_CASE("enumeration guard") {
  std::vector<std::string> vertices{"a", "b"};
  std::vector<Edge> edges;
  for (int i = 0; i < 25; ++i)
    edges.push_back({"e" + std::to_string(i), "a", "b"});
  const OrientedGraph g = OrientedGraph::create(vertices, edges);
  CHECK_THROWS_WITH_AS(ksg::enumerate_spanning_trees(g), doctest::Contains("TooLarge"),
                       ksg::Error);
}

TEST_CASE("round-trip: the default tree validates") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const OrientedGraph g = ksg::random_connected_multigraph(rng, 8, 14);
    const TreeSelection t = ksg::default_spanning_tree(g);
    const std::set<std::string> ids(t.tree_edges.begin(), t.tree_edges.end());
    const TreeSelection revalidated = ksg::validate_tree(g, ids);
    CHECK(revalidated.tree_edges == t.tree_edges);
    CHECK(revalidated.chord_edges == t.chord_edges);
    CHECK(ksg::enumerate_spanning_trees(g) >= 1);
  }
}
