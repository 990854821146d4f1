#include "ksgraph/analyze.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ksgraph/error.hpp"
#include "ksgraph/laplacian.hpp"
#include "ksgraph/projection_lab.hpp"
#include "ksgraph/random_graphs.hpp"
#include "ksgraph/thermo.hpp"

namespace ksg {

bool Analysis::all_pass() const { return spectral.pass && checks.all_pass(); }

Analysis analyze_graph(const OrientedGraph& g, const std::optional<std::set<std::string>>& tree) {
  const TreeSelection selection = tree ? validate_tree(g, *tree) : default_spanning_tree(g);
  Analysis analysis{build_basis(g, selection), {}, {}, {}, {}};
  analysis.projections = build_projections(analysis.basis);
  analysis.ks = ks_matrices(analysis.basis, analysis.projections);
  analysis.spectral = spectra_match_mod_one(analysis.ks);

  analysis.checks.merge(verify_projection_identities(analysis.basis, analysis.projections));
  analysis.checks.merge(verify_two_form(analysis.basis, analysis.projections));
  analysis.checks.merge(verify_ks_identities(analysis.basis, analysis.projections, analysis.ks));
  analysis.checks.merge(
      eigenvector_transport_check(analysis.basis, analysis.projections, analysis.ks));
  analysis.checks.add("spectra_match_mod_one", analysis.spectral.pass,
                      analysis.spectral.pass
                          ? ""
                          : "reduced " + analysis.spectral.reduced_K.to_string() + " vs " +
                                analysis.spectral.reduced_Kstar.to_string());
  if (g.num_edges() <= 24)
    analysis.checks.merge(matrix_tree_check(g, analysis.ks));
  return analysis;
}

namespace {

void check_basis_completeness(const Analysis& analysis, VerificationReport& report) {
  // The families {cycles, cochord units} and {cocycles, chord units} each
  // span the whole edge space.
  const BasisBundle& b = analysis.basis;
  const std::size_t ne = b.num_edges();
  const std::size_t nco = b.num_cochords();
  const std::size_t nch = b.num_chords();
  RatMat stacked1(ne, ne);
  for (std::size_t m = 0; m < nco; ++m) stacked1(m, m) = 1;  // cochord unit vectors
  for (std::size_t a = 0; a < nch; ++a)
    for (std::size_t j = 0; j < ne; ++j) stacked1(nco + a, j) = b.cycles[a][j];
  RatMat stacked2(ne, ne);
  for (std::size_t m = 0; m < nco; ++m)
    for (std::size_t j = 0; j < ne; ++j) stacked2(m, j) = b.cocycles[m][j];
  for (std::size_t a = 0; a < nch; ++a) stacked2(nco + a, nco + a) = 1;  // chord unit vectors
  report.add("cycles_plus_cochords_full_rank", stacked1.rank() == ne);
  report.add("cocycles_plus_chords_full_rank", stacked2.rank() == ne);
}

void check_orthogonality_class(const Analysis& analysis, VerificationReport& report) {
  // Omega = 0 iff P is symmetric (orthogonal projections).
  const bool omega_zero = analysis.projections.omega_full.is_zero();
  const bool symmetric = analysis.projections.P.is_symmetric();
  report.add("omega_zero_iff_orthogonal", omega_zero == symmetric);
}

void check_thermo_properties(const Analysis& analysis, std::mt19937_64& rng,
                             VerificationReport& report) {
  const BasisBundle& b = analysis.basis;
  const std::size_t ne = b.num_edges();
  const std::size_t nco = b.num_cochords();
  ThermoState state{random_state_vector(rng, ne), random_state_vector(rng, ne)};
  const MacroObservables obs = macroscopic_observables(b, state);

  // Reconstruction: j = sum J_m e_m + sum J_a c_a, f = sum F_m c_m + sum F_a e_a.
  RatVec j_rebuilt(ne, Rat(0));
  for (std::size_t m = 0; m < nco; ++m) j_rebuilt[m] += obs.J_mu[m];
  for (std::size_t a = 0; a < b.num_chords(); ++a)
    for (std::size_t i = 0; i < ne; ++i) j_rebuilt[i] += obs.J_alpha[a] * Rat(b.cycles[a][i]);
  RatVec f_rebuilt(ne, Rat(0));
  for (std::size_t m = 0; m < nco; ++m)
    for (std::size_t i = 0; i < ne; ++i) f_rebuilt[i] += obs.F_mu[m] * Rat(b.cocycles[m][i]);
  for (std::size_t a = 0; a < b.num_chords(); ++a) f_rebuilt[nco + a] += obs.F_alpha[a];
  report.add("current_reconstruction", j_rebuilt == state.currents);
  report.add("force_reconstruction", f_rebuilt == state.forces);

  // KCL iff all J_mu vanish; KVL iff all F_alpha vanish.
  const KirchhoffReport kirchhoff = kirchhoff_checks(b, analysis.projections, state);
  const bool all_jmu_zero =
      std::all_of(obs.J_mu.begin(), obs.J_mu.end(), [](const Rat& v) { return v == 0; });
  const bool all_fa_zero =
      std::all_of(obs.F_alpha.begin(), obs.F_alpha.end(), [](const Rat& v) { return v == 0; });
  report.add("kcl_iff_tidal_currents_vanish", kirchhoff.kcl == all_jmu_zero);
  report.add("kvl_iff_circuitations_vanish", kirchhoff.kvl == all_fa_zero);

  // Entropy production decomposition and Gram positivity for f = j.
  const EntropyProduction ep = entropy_production(b, state);
  report.add("entropy_decomposition", ep.sigma == ep.tidal_part + ep.vortex_part);
  const LinearRegimeReport linear = linear_regime_epr(b, analysis.ks, state.currents);
  report.add("linear_regime_identity", linear.equal,
             linear.equal ? ""
                          : rational_to_string(linear.direct) + " vs " +
                                rational_to_string(linear.macroscopic));
  report.add("gram_positivity", linear.direct >= 0);

  orthogonal_projectors(b, analysis.ks);  // asserts internally
  report.merge(verify_lambda_duality(b));
}

}  // namespace

RandomSuiteReport run_random_suite(const RandomSuiteOptions& options) {
  RandomSuiteReport report;
  std::mt19937_64 rng(options.seed);

  for (std::size_t case_index = 0; case_index < options.graph_cases; ++case_index) {
    const OrientedGraph g =
        random_connected_multigraph(rng, options.max_vertices, options.max_edges);
    std::ostringstream label;
    label << "graph_case " << case_index << " (|V|=" << g.num_vertices()
          << ", |E|=" << g.num_edges() << ")";
    try {
      Analysis analysis = analyze_graph(g);
      check_basis_completeness(analysis, analysis.checks);
      check_orthogonality_class(analysis, analysis.checks);
      check_thermo_properties(analysis, rng, analysis.checks);

      // Eigenvalue-1 multiplicity lower bounds from the dimension gap.
      const long long nch = static_cast<long long>(analysis.basis.num_chords());
      const long long nco = static_cast<long long>(analysis.basis.num_cochords());
      if (nch >= nco)
        analysis.checks.add("unit_multiplicity_bound_K",
                            analysis.spectral.mult1_K >= nch - nco);
      else
        analysis.checks.add("unit_multiplicity_bound_Kstar",
                            analysis.spectral.mult1_Kstar >= nco - nch);
      if (nch == nco)
        analysis.checks.add("equal_spectra_square_case",
                            analysis.spectral.char_K == analysis.spectral.char_Kstar);

      if (!analysis.all_pass()) {
        for (const auto& check : analysis.checks.checks)
          if (!check.pass)
            report.failures.push_back(label.str() + ": " + check.name +
                                      (check.detail.empty() ? "" : " [" + check.detail + "]"));
      }
    } catch (const std::exception& error) {
      report.failures.push_back(label.str() + ": exception " + error.what());
    }
    ++report.graph_cases_run;

    // Laplacian shift on a fresh simple graph, and the loop/bridge class.
    try {
      const OrientedGraph simple = random_connected_simple_graph(rng, options.max_vertices);
      const VerificationReport shift = laplacian_shift_check(simple);
      if (!shift.all_pass())
        report.failures.push_back(label.str() + ": laplacian_shift failed");
    } catch (const std::exception& error) {
      report.failures.push_back(label.str() + ": laplacian exception " + error.what());
    }
    try {
      const OrientedGraph loops = random_loop_bridge_graph(rng, options.max_vertices, 4);
      const Analysis analysis = analyze_graph(loops);
      if (!analysis.projections.omega_full.is_zero() ||
          !analysis.projections.P.is_symmetric())
        report.failures.push_back(label.str() + ": loop/bridge class is not orthogonal");
    } catch (const std::exception& error) {
      report.failures.push_back(label.str() + ": loop/bridge exception " + error.what());
    }
  }

  for (std::size_t case_index = 0; case_index < options.projection_cases; ++case_index) {
    const std::size_t n = 2 + rng() % (options.lab_max_dim - 1);
    const std::size_t k = 1 + rng() % (n - 1);
    std::ostringstream label;
    label << "projection_case " << case_index << " (n=" << n << ", k=" << k << ")";
    try {
      const ObliquePair pair = random_oblique_projection(n, k, rng());
      const LabReport lab = verify_complementary_spectra(pair);
      if (!lab.checks.all_pass()) {
        for (const auto& check : lab.checks.checks)
          if (!check.pass) report.failures.push_back(label.str() + ": " + check.name);
      }
    } catch (const std::exception& error) {
      report.failures.push_back(label.str() + ": exception " + error.what());
    }
    ++report.projection_cases_run;
  }
  return report;
}

}  // namespace ksg
