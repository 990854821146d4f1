#pragma once

#include <optional>
#include <set>
#include <string>

#include "ksgraph/duality.hpp"
#include "ksgraph/graph.hpp"
#include "ksgraph/thermo.hpp"

namespace ksg {

struct GraphDocument {
  OrientedGraph graph;
  std::optional<std::set<std::string>> tree;
  std::optional<PlanarEmbedding> embedding;
};

/// Parses the graph JSON schema:
///   { "vertices": [...], "edges": [{"id","tail","head"}, ...],
///     "tree": [...], "rotations": {...} | "faces": [[...], ...] }
/// Throws ParseError on malformed documents and the graph validation errors
/// otherwise.
GraphDocument load_graph_json(const std::string& text);
GraphDocument load_graph_file(const std::string& path);

/// Serializes a graph (optionally with rotations) back to the schema.
std::string graph_to_json(const OrientedGraph& g, const PlanarEmbedding* embedding = nullptr,
                          const std::set<std::string>* tree = nullptr);

/// Parses { "currents": {edge: "p/q", ...}, "forces": {...} }; missing edges
/// default to zero. Vectors come back in canonical edge order.
ThermoState load_thermo_state_json(const std::string& text, const OrientedGraph& g,
                                   const TreeSelection& t);
ThermoState load_thermo_state_file(const std::string& path, const OrientedGraph& g,
                                   const TreeSelection& t);

}  // namespace ksg
