#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "ksgraph/basis.hpp"
#include "ksgraph/ks.hpp"
#include "ksgraph/projections.hpp"
#include "ksgraph/report.hpp"

namespace ksg {

/// Everything the identity suite derives from one graph and tree choice.
struct Analysis {
  BasisBundle basis;
  ProjectionPair projections;
  KsPair ks;
  SpectralReport spectral;
  VerificationReport checks;  // projection algebra, two-form, KS identities,
                              // eigenvector transport, matrix-tree, spectra
  bool all_pass() const;
};

/// Runs the full identity suite. Uses the default spanning tree when no tree
/// is given. The matrix-tree enumeration is skipped above the brute-force
/// guard.
Analysis analyze_graph(const OrientedGraph& g,
                       const std::optional<std::set<std::string>>& tree = std::nullopt);

struct RandomSuiteOptions {
  std::size_t graph_cases = 200;
  std::size_t projection_cases = 200;
  std::uint64_t seed = 1;
  std::size_t max_vertices = 8;
  std::size_t max_edges = 14;
  std::size_t lab_max_dim = 8;
};

struct RandomSuiteReport {
  std::size_t graph_cases_run = 0;
  std::size_t projection_cases_run = 0;
  std::vector<std::string> failures;  // one line per failed case/check
  bool all_pass() const { return failures.empty(); }
};

/// Property suite over random connected multigraphs (full identity suite,
/// thermo reconstruction, linear regime, Laplacian shift on simple graphs,
/// loop/bridge orthogonality) plus random oblique pairs (Appendix facts).
/// Deterministic for a fixed seed.
RandomSuiteReport run_random_suite(const RandomSuiteOptions& options);

}  // namespace ksg
