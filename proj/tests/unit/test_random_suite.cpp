#include <doctest.h>

#include "ksgraph/analyze.hpp"

TEST_CASE("the randomized property suite passes and is reproducible") {
  ksg::RandomSuiteOptions options;
  options.graph_cases = 25;
  options.projection_cases = 25;
  options.seed = 20240817;

  const auto first = ksg::run_random_suite(options);
  CHECK(first.graph_cases_run == 25);
  CHECK(first.projection_cases_run == 25);
  for (const auto& failure : first.failures) MESSAGE(failure);
  CHECK(first.all_pass());

  const auto second = ksg::run_random_suite(options);
  CHECK(second.failures == first.failures);
}

TEST_CASE("empty suite passes") {
  ksg::RandomSuiteOptions options;
  options.graph_cases = 0;
  options.projection_cases = 0;
  const auto report = ksg::run_random_suite(options);
  CHECK(report.all_pass());
  CHECK(report.graph_cases_run == 0);
}

TEST_CASE("degenerate graphs: bouquets and an isolated vertex") {
  // single vertex, no edges: everything is 0x0
  const auto lonely = ksg::OrientedGraph::create({"a"}, {});
  const auto empty_analysis = ksg::analyze_graph(lonely);
  CHECK(empty_analysis.all_pass());
  CHECK(empty_analysis.ks.K.rows() == 0);
  CHECK(empty_analysis.ks.Kstar.rows() == 0);
  CHECK(ksg::enumerate_spanning_trees(lonely) == 1);

  // single vertex with self-loops: every edge is a loop chord, P = I
  const auto bouquet = ksg::OrientedGraph::create(
      {"a"}, {{"e1", "a", "a"}, {"e2", "a", "a"}});
  const auto analysis = ksg::analyze_graph(bouquet);
  CHECK(analysis.all_pass());
  CHECK(analysis.basis.tree.tree_edges.empty());
  CHECK(analysis.projections.P == ksg::RatMat::identity(2));
  CHECK(analysis.projections.omega_full.is_zero());
  CHECK(ksg::enumerate_spanning_trees(bouquet) == 1);
}

TEST_CASE("analyze_graph aggregates the identity suite") {
  const auto g = ksg::OrientedGraph::create(
      {"a", "b", "c"}, {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "c", "a"}});
  const auto analysis = ksg::analyze_graph(g);
  CHECK(analysis.all_pass());
  CHECK(analysis.basis.tree.tree_edges == std::vector<std::string>{"e1", "e2"});
  CHECK(analysis.ks.K == ksg::RatMat::from_int_rows({{3}}));
}
