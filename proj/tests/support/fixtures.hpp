#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ksgraph/graph.hpp"
#include "ksgraph/json_io.hpp"
#include "ksgraph/matrix.hpp"

namespace ksg::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(KSGRAPH_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in.good()) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline GraphDocument square_diagonal() { return load_graph_file(fixture_path("square_diagonal.json")); }
inline GraphDocument triangle() { return load_graph_file(fixture_path("triangle.json")); }
inline GraphDocument single_edge() { return load_graph_file(fixture_path("edge.json")); }
inline GraphDocument loop_graph() { return load_graph_file(fixture_path("loop.json")); }

inline TreeSelection document_tree(const GraphDocument& doc) {
  return validate_tree(doc.graph, *doc.tree);
}

/// Reference matrices for the square-diagonal fixture, keyed as in
/// square_diagonal_expected.json.
inline nlohmann::json expected_square_diagonal() {
  return nlohmann::json::parse(read_fixture("square_diagonal_expected.json"));
}

inline RatMat matrix_from_json(const nlohmann::json& rows) {
  std::vector<std::vector<long long>> data;
  for (const auto& row : rows) data.push_back(row.get<std::vector<long long>>());
  return RatMat::from_int_rows(data);
}

}  // namespace ksg::testing
