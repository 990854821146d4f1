#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ksgraph/matrix.hpp"

namespace ksg {

struct Edge {
  std::string id;
  std::string tail;
  std::string head;
};

/// Oriented multigraph, connected as an undirected graph. Self-loops and
/// parallel edges are allowed. Immutable after construction.
class OrientedGraph {
 public:
  /// Validates ids, endpoints, and undirected connectivity.
  /// Throws DuplicateId, UnknownEndpoint, Disconnected.
  static OrientedGraph create(std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  std::size_t vertex_index(const std::string& id) const;
  std::size_t edge_index(const std::string& id) const;
  bool has_edge(const std::string& id) const { return edge_lookup_.count(id) != 0; }

  std::size_t tail_index(std::size_t e) const { return tail_idx_[e]; }
  std::size_t head_index(std::size_t e) const { return head_idx_[e]; }
  bool is_self_loop(std::size_t e) const { return tail_idx_[e] == head_idx_[e]; }

  /// |V| x |E| incidence matrix in user edge order: +1 at the head, -1 at the
  /// tail, all zero for self-loops.
  RatMat incidence() const;

  /// No parallel edges between the same (unordered) vertex pair, no loops.
  bool is_simple() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> tail_idx_;
  std::vector<std::size_t> head_idx_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
};

/// A spanning-tree choice. Canonical edge order is cochords (tree edges) in
/// user order followed by chords in user order; `canon_to_user` maps each
/// canonical index to the user edge index.
struct TreeSelection {
  std::vector<std::string> tree_edges;   // cochords, user order
  std::vector<std::string> chord_edges;  // chords, user order
  std::vector<std::size_t> canon_to_user;
  std::vector<std::size_t> user_to_canon;

  std::size_t num_cochords() const { return tree_edges.size(); }
  std::size_t num_chords() const { return chord_edges.size(); }
  bool in_tree(const std::string& edge_id) const;
  /// Edge ids in canonical order.
  std::vector<std::string> canonical_edge_ids(const OrientedGraph& g) const;
};

/// Deterministic default tree: depth-first search from the first vertex,
/// scanning each vertex's incident edges in user order, outgoing ends before
/// incoming ends, ignoring self-loops.
TreeSelection default_spanning_tree(const OrientedGraph& g);

/// Validates an explicit tree edge set and builds the canonical permutation.
/// Throws WrongCardinality, ContainsSelfLoop, ContainsCycle, NotSpanning.
TreeSelection validate_tree(const OrientedGraph& g, const std::set<std::string>& edge_ids);

/// Exact spanning-tree count by exhaustive enumeration of |V|-1 edge subsets.
/// Throws TooLarge when |E| > 24.
std::uint64_t enumerate_spanning_trees(const OrientedGraph& g);

}  // namespace ksg
