#include "ksgraph/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ksgraph/error.hpp"

namespace ksg {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw Error(ErrorCode::ParseError, "invalid JSON");
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

GraphDocument load_graph_json(const std::string& text) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw Error(ErrorCode::ParseError, "expected object with 'vertices' and 'edges'");

  std::vector<std::string> vertices;
  for (const auto& v : doc.at("vertices")) {
    if (!v.is_string()) throw Error(ErrorCode::ParseError, "vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_object() || !e.contains("id") || !e.contains("tail") || !e.contains("head"))
      throw Error(ErrorCode::ParseError, "edges need 'id', 'tail', 'head'");
    edges.push_back({e.at("id").get<std::string>(), e.at("tail").get<std::string>(),
                     e.at("head").get<std::string>()});
  }

  GraphDocument out{OrientedGraph::create(std::move(vertices), std::move(edges)), {}, {}};

  if (doc.contains("tree")) {
    std::set<std::string> tree;
    for (const auto& t : doc.at("tree")) tree.insert(t.get<std::string>());
    out.tree = std::move(tree);
  }
  if (doc.contains("rotations")) {
    PlanarEmbedding embedding;
    std::map<std::string, std::vector<EdgeEnd>> rotations;
    for (const auto& [vertex, ends] : doc.at("rotations").items()) {
      std::vector<EdgeEnd> list;
      for (const auto& end : ends) list.push_back(EdgeEnd::parse(end.get<std::string>()));
      rotations[vertex] = std::move(list);
    }
    embedding.rotations = std::move(rotations);
    out.embedding = std::move(embedding);
  } else if (doc.contains("faces")) {
    PlanarEmbedding embedding;
    std::vector<std::vector<std::string>> faces;
    for (const auto& face : doc.at("faces")) {
      std::vector<std::string> list;
      for (const auto& side : face) list.push_back(side.get<std::string>());
      faces.push_back(std::move(list));
    }
    embedding.faces = std::move(faces);
    out.embedding = std::move(embedding);
  }
  return out;
}

GraphDocument load_graph_file(const std::string& path) {
  return load_graph_json(read_file(path));
}

std::string graph_to_json(const OrientedGraph& g, const PlanarEmbedding* embedding,
                          const std::set<std::string>* tree) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertices();
  doc["edges"] = json::array();
  for (const Edge& e : g.edges())
    doc["edges"].push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
  if (tree) doc["tree"] = *tree;
  if (embedding && embedding->rotations) {
    nlohmann::ordered_json rotations = json::object();
    // vertex order of the graph, not map order
    for (const std::string& vertex : g.vertices()) {
      const auto it = embedding->rotations->find(vertex);
      if (it == embedding->rotations->end()) continue;
      json ends = json::array();
      for (const EdgeEnd& end : it->second) ends.push_back(end.to_string());
      rotations[vertex] = std::move(ends);
    }
    doc["rotations"] = std::move(rotations);
  }
  return doc.dump(2);
}

ThermoState load_thermo_state_json(const std::string& text, const OrientedGraph& g,
                                   const TreeSelection& t) {
  const json doc = parse(text);
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "expected thermo-state object");
  ThermoState state;
  state.currents.assign(g.num_edges(), Rat(0));
  state.forces.assign(g.num_edges(), Rat(0));
  auto fill = [&](const char* key, RatVec& vec) {
    if (!doc.contains(key)) return;
    for (const auto& [edge_id, value] : doc.at(key).items()) {
      if (!g.has_edge(edge_id))
        throw Error(ErrorCode::ParseError, std::string(key) + " names unknown edge '" + edge_id + "'");
      Rat parsed;
      if (value.is_string()) parsed = parse_rational(value.get<std::string>());
      else if (value.is_number_integer()) parsed = Rat(value.get<long long>());
      else throw Error(ErrorCode::ParseError, "state values must be strings or integers");
      vec[t.user_to_canon[g.edge_index(edge_id)]] = parsed;
    }
  };
  fill("currents", state.currents);
  fill("forces", state.forces);
  return state;
}

ThermoState load_thermo_state_file(const std::string& path, const OrientedGraph& g,
                                   const TreeSelection& t) {
  return load_thermo_state_json(read_file(path), g, t);
}

}  // namespace ksg
