#include <chrono>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ksgraph/analyze.hpp"
#include "ksgraph/duality.hpp"
#include "ksgraph/error.hpp"
#include "ksgraph/json_io.hpp"
#include "ksgraph/laplacian.hpp"
#include "ksgraph/thermo.hpp"

namespace {

using ksg::Analysis;
using ksg::RatMat;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

std::optional<std::set<std::string>> parse_tree_flag(const std::string& flag) {
  if (flag.empty()) return std::nullopt;
  std::set<std::string> out;
  std::stringstream stream(flag);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

ordered_json matrix_to_json(const RatMat& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ksg::rational_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json checks_to_json(const ksg::VerificationReport& report) {
  ordered_json out = ordered_json::array();
  for (const auto& check : report.checks) {
    ordered_json entry;
    entry["name"] = check.name;
    entry["pass"] = check.pass;
    if (!check.detail.empty()) entry["detail"] = check.detail;
    out.push_back(std::move(entry));
  }
  return out;
}

void print_matrix(std::ostream& os, const std::string& label, const RatMat& m) {
  os << label << " (" << m.rows() << "x" << m.cols() << "):\n" << m.to_string();
}

void print_checks(std::ostream& os, const ksg::VerificationReport& report) {
  for (const auto& check : report.checks) {
    os << "  [" << (check.pass ? "PASS" : "FAIL") << "] " << check.name;
    if (!check.detail.empty()) os << "  (" << check.detail << ")";
    os << "\n";
  }
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

int emit_analyze(const ksg::GraphDocument& doc, const std::optional<std::set<std::string>>& tree,
                 const std::string& format) {
  Timer timer;
  const auto chosen = tree ? tree : doc.tree;
  const Analysis analysis = ksg::analyze_graph(doc.graph, chosen);
  const ksg::BasisBundle& b = analysis.basis;
  const auto canonical = b.tree.canonical_edge_ids(doc.graph);
  const RatMat identity = RatMat::identity(b.num_edges());
  const RatMat i_minus_omega2 =
      identity - analysis.projections.omega_full * analysis.projections.omega_full;
  const bool pass = analysis.all_pass();

  if (format == "json") {
    ordered_json out;
    out["command"] = "analyze";
    out["vertices"] = doc.graph.vertices();
    out["canonical_order"] = canonical;
    out["tree"] = b.tree.tree_edges;
    out["chords"] = b.tree.chord_edges;
    out["matrices"]["incidence"] = matrix_to_json(b.incidence_canonical());
    out["matrices"]["cycles"] = matrix_to_json(b.cycle_matrix());
    out["matrices"]["cocycles"] = matrix_to_json(b.cocycle_matrix());
    out["matrices"]["P"] = matrix_to_json(analysis.projections.P);
    out["matrices"]["Q"] = matrix_to_json(analysis.projections.Q);
    out["matrices"]["Omega"] = matrix_to_json(analysis.projections.omega_full);
    out["matrices"]["I_minus_Omega2"] = matrix_to_json(i_minus_omega2);
    out["matrices"]["K"] = matrix_to_json(analysis.ks.K);
    out["matrices"]["Kstar"] = matrix_to_json(analysis.ks.Kstar);
    out["char_poly_K"] = analysis.spectral.char_K.to_string();
    out["char_poly_Kstar"] = analysis.spectral.char_Kstar.to_string();
    out["checks"] = checks_to_json(analysis.checks);
    out["pass"] = pass;
    out["timing_ms"] = timer.ms();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "vertices: " << join(doc.graph.vertices(), " ") << "\n";
    std::cout << "canonical edge order (cochords | chords): " << join(canonical, " ") << "\n";
    std::cout << "tree: " << join(b.tree.tree_edges, " ") << "   chords: "
              << join(b.tree.chord_edges, " ") << "\n\n";
    print_matrix(std::cout, "incidence", b.incidence_canonical());
    print_matrix(std::cout, "cycles (rows)", b.cycle_matrix());
    print_matrix(std::cout, "cocycles (rows)", b.cocycle_matrix());
    print_matrix(std::cout, "P", analysis.projections.P);
    print_matrix(std::cout, "Q", analysis.projections.Q);
    print_matrix(std::cout, "Omega", analysis.projections.omega_full);
    print_matrix(std::cout, "I - Omega^2", i_minus_omega2);
    print_matrix(std::cout, "K", analysis.ks.K);
    print_matrix(std::cout, "*K", analysis.ks.Kstar);
    std::cout << "char(K)  = " << analysis.spectral.char_K.to_string() << "\n";
    std::cout << "char(*K) = " << analysis.spectral.char_Kstar.to_string() << "\n\n";
    std::cout << "checks:\n";
    print_checks(std::cout, analysis.checks);
    std::cout << (pass ? "PASS" : "FAIL") << "  (" << timer.ms() << " ms)\n";
  }
  return pass ? kExitPass : kExitCheckFailure;
}

int emit_count_trees(const ksg::GraphDocument& doc, const std::optional<std::set<std::string>>& tree,
                     const std::string& format) {
  Timer timer;
  const auto chosen = tree ? tree : doc.tree;
  const ksg::TreeSelection selection =
      chosen ? ksg::validate_tree(doc.graph, *chosen) : ksg::default_spanning_tree(doc.graph);
  const ksg::BasisBundle b = ksg::build_basis(doc.graph, selection);
  const ksg::ProjectionPair p = ksg::build_projections(b);
  const ksg::KsPair ks = ksg::ks_matrices(b, p);
  const std::uint64_t count = ksg::enumerate_spanning_trees(doc.graph);
  const ksg::VerificationReport report = ksg::matrix_tree_check(doc.graph, ks);
  const bool pass = report.all_pass();

  if (format == "json") {
    ordered_json out;
    out["command"] = "count-trees";
    out["det_K"] = ksg::rational_to_string(ks.K.det());
    out["det_Kstar"] = ksg::rational_to_string(ks.Kstar.det());
    out["spanning_trees"] = count;
    out["checks"] = checks_to_json(report);
    out["pass"] = pass;
    out["timing_ms"] = timer.ms();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "det K = " << ksg::rational_to_string(ks.K.det())
              << ", det *K = " << ksg::rational_to_string(ks.Kstar.det())
              << ", brute-force count = " << count << "\n";
    print_checks(std::cout, report);
    std::cout << (pass ? "PASS" : "FAIL") << "  (" << timer.ms() << " ms)\n";
  }
  return pass ? kExitPass : kExitCheckFailure;
}

int emit_dual(const ksg::GraphDocument& doc, const std::optional<std::set<std::string>>& tree,
              const std::string& format) {
  Timer timer;
  if (!doc.embedding)
    throw ksg::Error(ksg::ErrorCode::BadRotation, "graph document carries no embedding");
  const auto chosen = tree ? tree : doc.tree;
  const ksg::TreeSelection selection =
      chosen ? ksg::validate_tree(doc.graph, *chosen) : ksg::default_spanning_tree(doc.graph);
  const ksg::BasisBundle b = ksg::build_basis(doc.graph, selection);
  const ksg::ProjectionPair p = ksg::build_projections(b);
  const ksg::DualResult dual = ksg::dual_graph(doc.graph, *doc.embedding, selection);
  const ksg::DualityReport report = ksg::verify_duality(b, p, dual);
  const bool pass = report.checks.all_pass();

  std::set<std::string> dual_tree_ids(report.dual.dual_tree.tree_edges.begin(),
                                      report.dual.dual_tree.tree_edges.end());
  const std::string dual_json =
      ksg::graph_to_json(report.dual.dual, &report.dual.dual_embedding, &dual_tree_ids);

  if (format == "json") {
    ordered_json out;
    out["command"] = "dual";
    out["dual_graph"] = ordered_json::parse(dual_json);
    out["orientation_flipped"] = report.flipped;
    out["checks"] = checks_to_json(report.checks);
    out["pass"] = pass;
    out["timing_ms"] = timer.ms();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "dual graph:\n" << dual_json << "\n";
    std::cout << "orientation flipped: " << (report.flipped ? "yes" : "no") << "\n";
    print_checks(std::cout, report.checks);
    std::cout << (pass ? "PASS" : "FAIL") << "  (" << timer.ms() << " ms)\n";
  }
  return pass ? kExitPass : kExitCheckFailure;
}

ordered_json rationals_to_json(const ksg::RatVec& values) {
  ordered_json out = ordered_json::array();
  for (const auto& v : values) out.push_back(ksg::rational_to_string(v));
  return out;
}

int emit_thermo(const ksg::GraphDocument& doc, const std::string& state_path,
                const std::optional<std::set<std::string>>& tree, const std::string& format) {
  Timer timer;
  const auto chosen = tree ? tree : doc.tree;
  const ksg::TreeSelection selection =
      chosen ? ksg::validate_tree(doc.graph, *chosen) : ksg::default_spanning_tree(doc.graph);
  const ksg::BasisBundle b = ksg::build_basis(doc.graph, selection);
  const ksg::ProjectionPair p = ksg::build_projections(b);
  const ksg::KsPair ks = ksg::ks_matrices(b, p);
  const ksg::ThermoState state = ksg::load_thermo_state_file(state_path, doc.graph, selection);

  const ksg::MacroObservables obs = ksg::macroscopic_observables(b, state);
  const ksg::KirchhoffReport kirchhoff = ksg::kirchhoff_checks(b, p, state);
  const ksg::EntropyProduction entropy = ksg::entropy_production(b, state);

  ksg::VerificationReport checks;
  checks.add("entropy_decomposition",
             entropy.sigma == entropy.tidal_part + entropy.vortex_part);
  const bool unit_resistance = state.currents == state.forces;
  if (unit_resistance) {
    const ksg::LinearRegimeReport linear = ksg::linear_regime_epr(b, ks, state.currents);
    checks.add("linear_regime_identity", linear.equal,
               linear.equal ? ""
                            : ksg::rational_to_string(linear.direct) + " vs " +
                                  ksg::rational_to_string(linear.macroscopic));
  }
  checks.merge(ksg::verify_lambda_duality(b));
  const bool pass = checks.all_pass();

  if (format == "json") {
    ordered_json out;
    out["command"] = "thermo";
    out["canonical_order"] = b.tree.canonical_edge_ids(doc.graph);
    out["observables"]["J_mu"] = rationals_to_json(obs.J_mu);
    out["observables"]["J_alpha"] = rationals_to_json(obs.J_alpha);
    out["observables"]["F_mu"] = rationals_to_json(obs.F_mu);
    out["observables"]["F_alpha"] = rationals_to_json(obs.F_alpha);
    out["kcl"] = kirchhoff.kcl;
    out["kvl"] = kirchhoff.kvl;
    out["equilibrium"] = kirchhoff.equilibrium;
    out["sigma"] = ksg::rational_to_string(entropy.sigma);
    out["tidal_part"] = ksg::rational_to_string(entropy.tidal_part);
    out["vortex_part"] = ksg::rational_to_string(entropy.vortex_part);
    out["unit_resistance"] = unit_resistance;
    out["checks"] = checks_to_json(checks);
    out["pass"] = pass;
    out["timing_ms"] = timer.ms();
    std::cout << out.dump(2) << "\n";
  } else {
    auto print_vec = [](const char* label, const ksg::RatVec& values) {
      std::cout << label << ": (";
      for (std::size_t i = 0; i < values.size(); ++i)
        std::cout << (i ? ", " : "") << ksg::rational_to_string(values[i]);
      std::cout << ")\n";
    };
    print_vec("J_mu (tidal currents)", obs.J_mu);
    print_vec("J_alpha (vortex currents)", obs.J_alpha);
    print_vec("F_mu (potential drops)", obs.F_mu);
    print_vec("F_alpha (circuitations)", obs.F_alpha);
    std::cout << "KCL: " << (kirchhoff.kcl ? "satisfied" : "violated")
              << ", KVL: " << (kirchhoff.kvl ? "satisfied" : "violated")
              << ", equilibrium: " << (kirchhoff.equilibrium ? "yes" : "no") << "\n";
    std::cout << "sigma = " << ksg::rational_to_string(entropy.sigma)
              << " (tidal " << ksg::rational_to_string(entropy.tidal_part) << " + vortex "
              << ksg::rational_to_string(entropy.vortex_part) << ")\n";
    print_checks(std::cout, checks);
    std::cout << (pass ? "PASS" : "FAIL") << "  (" << timer.ms() << " ms)\n";
  }
  return pass ? kExitPass : kExitCheckFailure;
}

int emit_verify(const ksg::RandomSuiteOptions& options, const std::string& format) {
  Timer timer;
  const ksg::RandomSuiteReport report = ksg::run_random_suite(options);
  if (format == "json") {
    ordered_json out;
    out["command"] = "verify";
    out["graph_cases"] = report.graph_cases_run;
    out["projection_cases"] = report.projection_cases_run;
    out["failures"] = report.failures;
    out["pass"] = report.all_pass();
    out["timing_ms"] = timer.ms();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "graph cases: " << report.graph_cases_run
              << ", projection cases: " << report.projection_cases_run << "\n";
    for (const auto& failure : report.failures) std::cout << "  FAIL " << failure << "\n";
    std::cout << (report.all_pass() ? "PASS" : "FAIL") << "  (" << timer.ms() << " ms)\n";
  }
  return report.all_pass() ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycle/cocycle bases, oblique projections, and Kirchhoff-Symanzik matrices "
               "of oriented multigraphs, in exact rational arithmetic"};
  app.require_subcommand(1);

  std::string graph_path, state_path, tree_flag, format = "text";

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "matrices and the full identity suite");
  analyze->add_option("graph", graph_path, "graph JSON file")->required();
  analyze->add_option("--tree", tree_flag, "comma-separated tree edge ids");
  add_format(analyze);

  CLI::App* count = app.add_subcommand("count-trees", "matrix-tree check");
  count->add_option("graph", graph_path, "graph JSON file")->required();
  add_format(count);

  CLI::App* dual = app.add_subcommand("dual", "planar dual and duality checks");
  dual->add_option("graph", graph_path, "graph JSON file with embedding")->required();
  dual->add_option("--tree", tree_flag, "comma-separated tree edge ids");
  add_format(dual);

  CLI::App* thermo = app.add_subcommand("thermo", "thermodynamic-network observables");
  thermo->add_option("graph", graph_path, "graph JSON file")->required();
  thermo->add_option("state", state_path, "thermo-state JSON file")->required();
  thermo->add_option("--tree", tree_flag, "comma-separated tree edge ids");
  add_format(thermo);

  ksg::RandomSuiteOptions options;
  CLI::App* verify = app.add_subcommand("verify", "randomized property suite");
  verify->add_option("--random", options.graph_cases, "number of random graph cases")
      ->capture_default_str();
  verify->add_option("--seed", options.seed, "random seed")->capture_default_str();
  verify->add_option("--max-v", options.max_vertices, "max vertices")->capture_default_str();
  verify->add_option("--max-e", options.max_edges, "max edges")->capture_default_str();
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*analyze)
      return emit_analyze(ksg::load_graph_file(graph_path), parse_tree_flag(tree_flag), format);
    if (*count) return emit_count_trees(ksg::load_graph_file(graph_path), std::nullopt, format);
    if (*dual)
      return emit_dual(ksg::load_graph_file(graph_path), parse_tree_flag(tree_flag), format);
    if (*thermo)
      return emit_thermo(ksg::load_graph_file(graph_path), state_path, parse_tree_flag(tree_flag),
                         format);
    if (*verify) {
      options.projection_cases = options.graph_cases;
      return emit_verify(options, format);
    }
  } catch (const ksg::Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& error) {
    std::cerr << "internal error: " << error.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitInputError;
}
