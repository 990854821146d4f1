// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "ksgraph/analyze.hpp"
#include "ksgraph/duality.hpp"
#include "ksgraph/eig.hpp"
#include "ksgraph/json_io.hpp"
#include "ksgraph/laplacian.hpp"
#include "ksgraph/projection_lab.hpp"
#include "ksgraph/random_graphs.hpp"
#include "ksgraph/thermo.hpp"

namespace {

using ksg::BasisBundle;
using ksg::IntPoly;
using ksg::ObliquePair;
using ksg::OrientedGraph;
using ksg::Rat;
using ksg::RatMat;
using ksg::RatVec;

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << what
            << std::endl;
  if (!pass) ++failures;
}

struct QuadSetup {
  ksg::GraphDocument doc;
  BasisBundle basis;
  ksg::ProjectionPair proj;
  ksg::KsPair ks;
};

QuadSetup quad_setup() {
  QuadSetup s{ksg::testing::square_diagonal(), {}, {}, {}};
  s.basis = ksg::build_basis(s.doc.graph, ksg::testing::document_tree(s.doc));
  s.proj = ksg::build_projections(s.basis);
  s.ks = ksg::ks_matrices(s.basis, s.proj);
  return s;
}

/// Canonical serialization used for the byte-identity comparison.
std::string serialize(const RatMat& m) { return m.to_string(); }

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const QuadSetup s = quad_setup();
  const auto expected = ksg::testing::expected_square_diagonal();
  const RatMat identity = RatMat::identity(5);
  const RatMat i_minus_omega2 = identity - s.proj.omega_full * s.proj.omega_full;

  bool pass = true;
  auto check = [&](const char* key, const RatMat& computed) {
    const RatMat fixture = ksg::testing::matrix_from_json(expected[key]);
    if (serialize(computed) != serialize(fixture)) pass = false;
  };
  check("incidence", s.basis.incidence_canonical());
  check("cocycles", s.basis.cocycle_matrix());
  check("cycles", s.basis.cycle_matrix());
  check("P", s.proj.P);
  check("Q", s.proj.Q);
  check("Omega", s.proj.omega_full);
  check("I_minus_Omega2", i_minus_omega2);
  check("K", s.ks.K);
  check("Kstar", s.ks.Kstar);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  pass = pass && seconds < 1.0;
  std::ostringstream os;
  os << "square-diagonal fixture matrices byte-identical to the reference data ("
     << seconds << " s)";
  report(1, pass, os.str());
}

void criterion_2() {
  const QuadSetup s = quad_setup();
  const auto spectral = ksg::spectra_match_mod_one(s.ks);
  bool pass = spectral.char_K == IntPoly({8, -6, 1});
  pass = pass && spectral.char_Kstar == IntPoly({8, -6, 1}) * IntPoly::linear_minus(1);
  const std::vector<double> expected_k{2, 4}, expected_kstar{1, 2, 4};
  pass = pass && spectral.eig_K.size() == 2 && spectral.eig_Kstar.size() == 3;
  for (std::size_t i = 0; i < 2 && pass; ++i)
    pass = std::abs(spectral.eig_K[i].value - expected_k[i]) <= 1e-9;
  for (std::size_t i = 0; i < 3 && pass; ++i)
    pass = std::abs(spectral.eig_Kstar[i].value - expected_kstar[i]) <= 1e-9;
  report(2, pass, "char(K) = x^2-6x+8, char(*K) = (x-1)(x^2-6x+8), eigenvalues {2,4}/{1,2,4}");
}

void criterion_3() {
  const QuadSetup s = quad_setup();
  bool pass = ksg::eigenvector_transport_check(s.basis, s.proj, s.ks).all_pass();
  // the reference transport vectors, at their computed eigenvalues
  pass = pass && ksg::eigen_residual(s.ks.K, {1, 1}, 2.0) <= 1e-9;
  pass = pass && ksg::eigen_residual(s.ks.K, {-1, 1}, 4.0) <= 1e-9;
  pass = pass && ksg::eigen_residual(s.ks.Kstar, {1, 0, 1}, 2.0) <= 1e-9;
  pass = pass && ksg::eigen_residual(s.ks.Kstar, {1, -2, -1}, 4.0) <= 1e-9;
  const std::vector<double> unit{-1, -1, 1, 0, 0};
  for (std::size_t i = 0; i < 5 && pass; ++i) {
    double row_q = 0, row_qt = 0;
    for (std::size_t j = 0; j < 5; ++j) {
      row_q += ksg::to_double(s.proj.Q(i, j)) * unit[j];
      row_qt += ksg::to_double(s.proj.Q(j, i)) * unit[j];
    }
    pass = std::abs(row_q - unit[i]) <= 1e-9 && std::abs(row_qt - unit[i]) <= 1e-9;
  }
  report(3, pass, "eigenvector transport incl. the reference vectors, residuals <= 1e-9");
}

void criterion_4() {
  bool pass = true;
  auto matrix_tree = [&](const ksg::GraphDocument& doc, std::uint64_t expected) {
    const BasisBundle b = ksg::build_basis(doc.graph, ksg::testing::document_tree(doc));
    const auto proj = ksg::build_projections(b);
    const auto ks = ksg::ks_matrices(b, proj);
    pass = pass && ks.K.det() == Rat(expected) && ks.Kstar.det() == Rat(expected) &&
           ksg::enumerate_spanning_trees(doc.graph) == expected;
  };
  matrix_tree(ksg::testing::square_diagonal(), 8);
  matrix_tree(ksg::testing::triangle(), 3);
  matrix_tree(ksg::testing::single_edge(), 1);

  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 100 && pass; ++trial) {
    const OrientedGraph g = ksg::random_connected_multigraph(rng, 7, 14);
    const BasisBundle b = ksg::build_basis(g, ksg::default_spanning_tree(g));
    const auto proj = ksg::build_projections(b);
    const auto ks = ksg::ks_matrices(b, proj);
    pass = ksg::matrix_tree_check(g, ks).all_pass();
  }
  report(4, pass, "det K = det *K = spanning-tree count (fixtures + 100 random graphs)");
}

void criterion_5() {
  const auto start = std::chrono::steady_clock::now();
  ksg::RandomSuiteOptions options;
  options.graph_cases = 200;
  options.projection_cases = 0;
  options.seed = 505;
  options.max_vertices = 8;
  options.max_edges = 14;
  const auto suite = ksg::run_random_suite(options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = suite.all_pass() && suite.graph_cases_run == 200 && seconds < 60.0;
  for (const auto& failure : suite.failures) std::cout << "    " << failure << "\n";
  std::ostringstream os;
  os << "200 random multigraphs: basis orthogonality, spanning decompositions, "
        "projection algebra, two-form and KS identities, spectra mod eigenvalue 1, "
        "no eigenvalues in (0,1) ("
     << seconds << " s)";
  report(5, pass, os.str());
}

void criterion_6() {
  bool pass = true;
  bool quad_flip = false;
  for (const auto& doc : {ksg::testing::square_diagonal(), ksg::testing::triangle(),
                          ksg::testing::single_edge()}) {
    const BasisBundle b = ksg::build_basis(doc.graph, ksg::testing::document_tree(doc));
    const auto proj = ksg::build_projections(b);
    const auto dual = ksg::dual_graph(doc.graph, *doc.embedding, b.tree);
    const auto duality = ksg::verify_duality(b, proj, dual);
    pass = pass && duality.checks.all_pass();

    // dual of the dual restores the primal graph and tree
    const auto dd = ksg::dual_graph(duality.dual.dual, duality.dual.dual_embedding,
                                    duality.dual.dual_tree);
    pass = pass && dd.dual.num_vertices() == doc.graph.num_vertices();
    std::map<std::string, std::string> vertex_map;
    for (std::size_t e = 0; e < doc.graph.num_edges() && pass; ++e) {
      const auto& primal_edge = doc.graph.edge(e);
      const auto& dd_edge = dd.dual.edge(dd.dual.edge_index(primal_edge.id));
      auto bind = [&](const std::string& from, const std::string& to) {
        auto [it, inserted] = vertex_map.emplace(from, to);
        if (it->second != to) pass = false;
      };
      bind(dd_edge.tail, primal_edge.tail);
      bind(dd_edge.head, primal_edge.head);
    }
    pass = pass && dd.dual_tree.tree_edges == b.tree.tree_edges;
    if (doc.graph.num_edges() == 5) quad_flip = duality.flipped;
  }
  std::ostringstream os;
  os << "*P = Q^T, *Q = P^T, self-dual Omega; dual-of-dual isomorphic (flip recorded: "
     << (quad_flip ? "yes" : "no") << ")";
  report(6, pass, os.str());
}

void criterion_7() {
  bool pass = true;
  for (const auto& doc : {ksg::testing::square_diagonal(), ksg::testing::single_edge(),
                          ksg::testing::triangle()}) {
    pass = pass && ksg::laplacian_shift_check(doc.graph).all_pass();
  }
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 100 && pass; ++trial) {
    const OrientedGraph g = ksg::random_connected_simple_graph(rng, 8);
    pass = ksg::laplacian_shift_check(g).all_pass();
  }
  report(7, pass, "*K of the cone equals the Laplacian + identity (fixtures + 100 random)");
}

void criterion_8() {
  const QuadSetup s = quad_setup();
  const RatVec c4{Rat(0), Rat(1), Rat(1), Rat(1), Rat(0)};
  const auto ep = ksg::entropy_production(s.basis, {c4, c4});
  bool pass = ep.sigma == 3 && ep.vortex_part == 3 && ep.tidal_part == 0;

  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 200 && pass; ++trial) {
    const OrientedGraph g = ksg::random_connected_multigraph(rng, 8, 14);
    const BasisBundle b = ksg::build_basis(g, ksg::default_spanning_tree(g));
    const auto proj = ksg::build_projections(b);
    const auto ks = ksg::ks_matrices(b, proj);
    const RatVec j = ksg::random_state_vector(rng, g.num_edges());
    pass = ksg::linear_regime_epr(b, ks, j).equal;
    if (pass) ksg::orthogonal_projectors(b, ks);  // asserts symmetry/idempotence/sum
  }
  report(8, pass, "sigma = 3 with (vortex, tidal) = (3, 0); linear-regime identity on 200 "
                  "random states; P' + Q' = I");
}

void criterion_9() {
  std::mt19937_64 rng(909);
  bool pass = true;
  for (int trial = 0; trial < 100 && pass; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const std::size_t k = 1 + rng() % (n - 1);
    const ObliquePair pair = ksg::random_oblique_projection(n, k, rng());
    pass = ksg::verify_complementary_spectra(pair).checks.all_pass();
  }
  const QuadSetup s = quad_setup();
  const ObliquePair graph_pair = ObliquePair::from_matrix(s.proj.P);
  const auto lab = ksg::verify_complementary_spectra(graph_pair);
  pass = pass && lab.checks.all_pass();
  pass = pass && ksg::clear_denominators(lab.char_PtP) == IntPoly({0, 0, 0, 8, -6, 1});
  pass = pass && lab.mult0_PtP == 3 && lab.mult1_PtP == 0 && lab.mult0_QtQ == 2 &&
         lab.mult1_QtQ == 1;
  report(9, pass, "100 random oblique pairs pass the complementary-spectra checks; "
                  "graph pair spectra {0^3,2,4} / {0^2,1,2,4}");
}

void criterion_10() {
  const auto loop = ksg::testing::loop_graph();
  const BasisBundle b = ksg::build_basis(loop.graph, ksg::testing::document_tree(loop));
  const auto proj = ksg::build_projections(b);
  bool pass = proj.omega_full.is_zero() && proj.P.is_symmetric();

  std::mt19937_64 rng(1010);
  for (int trial = 0; trial < 50 && pass; ++trial) {
    const OrientedGraph g = ksg::random_loop_bridge_graph(rng, 8, 5);
    const BasisBundle rb = ksg::build_basis(g, ksg::default_spanning_tree(g));
    const auto rproj = ksg::build_projections(rb);
    pass = rproj.omega_full.is_zero() && rproj.P.is_symmetric();
  }
  report(10, pass, "loop/bridge class: Omega = 0 and P symmetric, exactly");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << failures << " acceptance criteria failed" << std::endl;
  return 1;
}
