#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ksgraph/analyze.hpp"
#include "ksgraph/duality.hpp"
#include "ksgraph/error.hpp"
#include "ksgraph/json_io.hpp"
#include "ksgraph/laplacian.hpp"
#include "ksgraph/projection_lab.hpp"
#include "ksgraph/thermo.hpp"

namespace py = pybind11;

namespace {

/// Exact rational -> fractions.Fraction
py::object to_fraction(const ksg::Rat& value) {
  static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
  return fraction_type(ksg::rational_to_string(value));
}

py::list matrix_to_list(const ksg::RatMat& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_fraction(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::list vector_to_list(const ksg::RatVec& v) {
  py::list out;
  for (const auto& value : v) out.append(to_fraction(value));
  return out;
}

py::list poly_to_list(const ksg::IntPoly& p) {
  static py::object int_type = py::module_::import("builtins").attr("int");
  py::list out;
  for (const auto& c : p.coeffs()) out.append(int_type(c.str()));
  return out;
}

py::list checks_to_list(const ksg::VerificationReport& report) {
  py::list out;
  for (const auto& check : report.checks)
    out.append(py::make_tuple(check.name, check.pass, check.detail));
  return out;
}

std::optional<std::set<std::string>> tree_arg(const py::object& tree) {
  if (tree.is_none()) return std::nullopt;
  std::set<std::string> out;
  for (const auto& item : tree) out.insert(py::cast<std::string>(item));
  return out;
}

ksg::GraphDocument load_document(const std::string& text) { return ksg::load_graph_json(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "cycle/cocycle oblique projections and Kirchhoff-Symanzik matrices "
            "of oriented multigraphs, exact rational arithmetic";

  py::register_exception<ksg::Error>(m, "KsgraphError");

  py::class_<ksg::OrientedGraph>(m, "Graph")
      .def_property_readonly("vertices", &ksg::OrientedGraph::vertices)
      .def_property_readonly("num_vertices", &ksg::OrientedGraph::num_vertices)
      .def_property_readonly("num_edges", &ksg::OrientedGraph::num_edges)
      .def_property_readonly("edges",
                             [](const ksg::OrientedGraph& g) {
                               py::list out;
                               for (const auto& e : g.edges())
                                 out.append(py::make_tuple(e.id, e.tail, e.head));
                               return out;
                             })
      .def("incidence", [](const ksg::OrientedGraph& g) { return matrix_to_list(g.incidence()); })
      .def("is_simple", &ksg::OrientedGraph::is_simple);

  m.def("load_graph", [](const std::string& text) { return load_document(text).graph; },
        py::arg("json_text"), "Parse a graph JSON document (schema as in the README).");

  m.def("document_tree", [](const std::string& text) -> py::object {
    const auto doc = load_document(text);
    if (!doc.tree) return py::none();
    return py::cast(std::vector<std::string>(doc.tree->begin(), doc.tree->end()));
  }, py::arg("json_text"), "The optional 'tree' field of a graph document.");

  m.def("default_tree", [](const ksg::OrientedGraph& g) {
    return ksg::default_spanning_tree(g).tree_edges;
  }, py::arg("graph"));

  m.def("validate_tree", [](const ksg::OrientedGraph& g, const std::vector<std::string>& ids) {
    const auto t = ksg::validate_tree(g, std::set<std::string>(ids.begin(), ids.end()));
    return py::make_tuple(t.tree_edges, t.chord_edges);
  }, py::arg("graph"), py::arg("tree_edges"));

  m.def("count_spanning_trees", [](const ksg::OrientedGraph& g) {
    return ksg::enumerate_spanning_trees(g);
  }, py::arg("graph"));

  m.def("analyze", [](const ksg::OrientedGraph& g, const py::object& tree) {
    const ksg::Analysis analysis = ksg::analyze_graph(g, tree_arg(tree));
    py::dict out;
    out["tree"] = analysis.basis.tree.tree_edges;
    out["chords"] = analysis.basis.tree.chord_edges;
    out["canonical_order"] = analysis.basis.tree.canonical_edge_ids(g);
    out["incidence"] = matrix_to_list(analysis.basis.incidence_canonical());
    out["cycles"] = matrix_to_list(analysis.basis.cycle_matrix());
    out["cocycles"] = matrix_to_list(analysis.basis.cocycle_matrix());
    out["P"] = matrix_to_list(analysis.projections.P);
    out["Q"] = matrix_to_list(analysis.projections.Q);
    out["Omega"] = matrix_to_list(analysis.projections.omega_full);
    out["K"] = matrix_to_list(analysis.ks.K);
    out["Kstar"] = matrix_to_list(analysis.ks.Kstar);
    out["char_poly_K"] = poly_to_list(analysis.spectral.char_K);
    out["char_poly_Kstar"] = poly_to_list(analysis.spectral.char_Kstar);
    out["checks"] = checks_to_list(analysis.checks);
    out["pass"] = analysis.all_pass();
    return out;
  }, py::arg("graph"), py::arg("tree") = py::none(),
     "Full identity suite: basis, projections, KS matrices, exact checks.");

  m.def("dual", [](const std::string& json_text, const py::object& tree) {
    const auto doc = load_document(json_text);
    if (!doc.embedding)
      throw ksg::Error(ksg::ErrorCode::BadRotation, "graph document carries no embedding");
    const auto chosen = tree_arg(tree);
    const ksg::TreeSelection selection = chosen       ? ksg::validate_tree(doc.graph, *chosen)
                                         : doc.tree   ? ksg::validate_tree(doc.graph, *doc.tree)
                                                      : ksg::default_spanning_tree(doc.graph);
    const ksg::BasisBundle b = ksg::build_basis(doc.graph, selection);
    const ksg::ProjectionPair p = ksg::build_projections(b);
    const ksg::DualResult dual = ksg::dual_graph(doc.graph, *doc.embedding, selection);
    const ksg::DualityReport report = ksg::verify_duality(b, p, dual);
    py::dict out;
    std::set<std::string> dual_tree(report.dual.dual_tree.tree_edges.begin(),
                                    report.dual.dual_tree.tree_edges.end());
    out["dual_json"] = ksg::graph_to_json(report.dual.dual, &report.dual.dual_embedding,
                                          &dual_tree);
    out["flipped"] = report.flipped;
    out["checks"] = checks_to_list(report.checks);
    out["pass"] = report.checks.all_pass();
    return out;
  }, py::arg("json_text"), py::arg("tree") = py::none(),
     "Planar dual from the document's embedding, plus the duality checks.");

  m.def("thermo", [](const ksg::OrientedGraph& g, const std::string& state_json,
                     const py::object& tree) {
    const auto chosen = tree_arg(tree);
    const ksg::TreeSelection selection =
        chosen ? ksg::validate_tree(g, *chosen) : ksg::default_spanning_tree(g);
    const ksg::BasisBundle b = ksg::build_basis(g, selection);
    const ksg::ProjectionPair p = ksg::build_projections(b);
    const ksg::KsPair ks = ksg::ks_matrices(b, p);
    const ksg::ThermoState state = ksg::load_thermo_state_json(state_json, g, selection);
    const ksg::MacroObservables obs = ksg::macroscopic_observables(b, state);
    const ksg::KirchhoffReport kirchhoff = ksg::kirchhoff_checks(b, p, state);
    const ksg::EntropyProduction entropy = ksg::entropy_production(b, state);
    py::dict out;
    out["J_mu"] = vector_to_list(obs.J_mu);
    out["J_alpha"] = vector_to_list(obs.J_alpha);
    out["F_mu"] = vector_to_list(obs.F_mu);
    out["F_alpha"] = vector_to_list(obs.F_alpha);
    out["kcl"] = kirchhoff.kcl;
    out["kvl"] = kirchhoff.kvl;
    out["equilibrium"] = kirchhoff.equilibrium;
    out["sigma"] = to_fraction(entropy.sigma);
    out["tidal_part"] = to_fraction(entropy.tidal_part);
    out["vortex_part"] = to_fraction(entropy.vortex_part);
    if (state.currents == state.forces) {
      const ksg::LinearRegimeReport linear = ksg::linear_regime_epr(b, ks, state.currents);
      out["linear_regime_equal"] = linear.equal;
    }
    return out;
  }, py::arg("graph"), py::arg("state_json"), py::arg("tree") = py::none());

  m.def("laplacian", [](const ksg::OrientedGraph& g) { return matrix_to_list(ksg::laplacian(g)); },
        py::arg("graph"));

  m.def("laplacian_shift_check", [](const ksg::OrientedGraph& g) {
    return ksg::laplacian_shift_check(g).all_pass();
  }, py::arg("graph"));

  m.def("random_oblique_projection", [](std::size_t n, std::size_t k, std::uint64_t seed) {
    const ksg::ObliquePair pair = ksg::random_oblique_projection(n, k, seed);
    py::dict out;
    out["P"] = matrix_to_list(pair.P);
    out["rank"] = pair.rank_P;
    return out;
  }, py::arg("n"), py::arg("k"), py::arg("seed"));

  m.def("verify_random", [](std::size_t cases, std::uint64_t seed) {
    ksg::RandomSuiteOptions options;
    options.graph_cases = cases;
    options.projection_cases = cases;
    options.seed = seed;
    const ksg::RandomSuiteReport report = ksg::run_random_suite(options);
    py::dict out;
    out["graph_cases"] = report.graph_cases_run;
    out["projection_cases"] = report.projection_cases_run;
    out["failures"] = report.failures;
    out["pass"] = report.all_pass();
    return out;
  }, py::arg("cases") = 25, py::arg("seed") = 1,
     "Randomized property suite; deterministic for a fixed seed.");

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
