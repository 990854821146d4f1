#include "ksgraph/graph.hpp"

#include <algorithm>
#include <numeric>

#include "ksgraph/error.hpp"

namespace ksg {

namespace {

/// Union-find over vertex indices.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  /// Returns false if already in the same set.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

OrientedGraph OrientedGraph::create(std::vector<std::string> vertices, std::vector<Edge> edges) {
  OrientedGraph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    if (!g.vertex_lookup_.emplace(g.vertices_[i], i).second)
      throw Error(ErrorCode::DuplicateId, "vertex '" + g.vertices_[i] + "'");
  }
  g.tail_idx_.reserve(g.edges_.size());
  g.head_idx_.reserve(g.edges_.size());
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const Edge& e = g.edges_[i];
    if (!g.edge_lookup_.emplace(e.id, i).second)
      throw Error(ErrorCode::DuplicateId, "edge '" + e.id + "'");
    auto tail_it = g.vertex_lookup_.find(e.tail);
    if (tail_it == g.vertex_lookup_.end())
      throw Error(ErrorCode::UnknownEndpoint, "edge '" + e.id + "' tail '" + e.tail + "'");
    auto head_it = g.vertex_lookup_.find(e.head);
    if (head_it == g.vertex_lookup_.end())
      throw Error(ErrorCode::UnknownEndpoint, "edge '" + e.id + "' head '" + e.head + "'");
    g.tail_idx_.push_back(tail_it->second);
    g.head_idx_.push_back(head_it->second);
  }
  if (!g.vertices_.empty()) {
    DisjointSets sets(g.vertices_.size());
    std::size_t components = g.vertices_.size();
    for (std::size_t e = 0; e < g.edges_.size(); ++e) {
      if (sets.unite(g.tail_idx_[e], g.head_idx_[e])) --components;
    }
    if (components != 1)
      throw Error(ErrorCode::Disconnected, "graph is not connected as an undirected graph");
  }
  return g;
}

std::size_t OrientedGraph::vertex_index(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end())
    throw Error(ErrorCode::UnknownEndpoint, "unknown vertex '" + id + "'");
  return it->second;
}

std::size_t OrientedGraph::edge_index(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end())
    throw Error(ErrorCode::UnknownEndpoint, "unknown edge '" + id + "'");
  return it->second;
}

RatMat OrientedGraph::incidence() const {
  RatMat m(num_vertices(), num_edges());
  for (std::size_t e = 0; e < num_edges(); ++e) {
    if (is_self_loop(e)) continue;  // +1 and -1 cancel
    m(head_idx_[e], e) += 1;
    m(tail_idx_[e], e) -= 1;
  }
  return m;
}

bool OrientedGraph::is_simple() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < num_edges(); ++e) {
    if (is_self_loop(e)) return false;
    auto key = std::minmax(tail_idx_[e], head_idx_[e]);
    if (!seen.insert(key).second) return false;
  }
  return true;
}

bool TreeSelection::in_tree(const std::string& edge_id) const {
  return std::find(tree_edges.begin(), tree_edges.end(), edge_id) != tree_edges.end();
}

std::vector<std::string> TreeSelection::canonical_edge_ids(const OrientedGraph& g) const {
  std::vector<std::string> ids;
  ids.reserve(canon_to_user.size());
  for (std::size_t user : canon_to_user) ids.push_back(g.edge(user).id);
  return ids;
}

namespace {

TreeSelection make_selection(const OrientedGraph& g, const std::vector<bool>& in_tree) {
  TreeSelection sel;
  std::vector<std::size_t> cochord_users, chord_users;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (in_tree[e]) {
      sel.tree_edges.push_back(g.edge(e).id);
      cochord_users.push_back(e);
    } else {
      sel.chord_edges.push_back(g.edge(e).id);
      chord_users.push_back(e);
    }
  }
  sel.canon_to_user = cochord_users;
  sel.canon_to_user.insert(sel.canon_to_user.end(), chord_users.begin(), chord_users.end());
  sel.user_to_canon.resize(g.num_edges());
  for (std::size_t c = 0; c < sel.canon_to_user.size(); ++c)
    sel.user_to_canon[sel.canon_to_user[c]] = c;
  return sel;
}

}  // namespace

TreeSelection default_spanning_tree(const OrientedGraph& g) {
  const std::size_t nv = g.num_vertices();
  std::vector<bool> in_tree(g.num_edges(), false);
  if (nv > 0) {
    // Incident edge ends per vertex: outgoing first, then incoming, each in
    // user order. Self-loops are skipped.
    std::vector<std::vector<std::size_t>> ends(nv);
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      if (!g.is_self_loop(e)) ends[g.tail_index(e)].push_back(e);
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      if (!g.is_self_loop(e)) ends[g.head_index(e)].push_back(e);

    std::vector<bool> visited(nv, false);
    std::vector<std::pair<std::size_t, std::size_t>> stack;  // (vertex, next end position)
    visited[0] = true;
    stack.emplace_back(0, 0);
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      if (pos == ends[v].size()) {
        stack.pop_back();
        continue;
      }
      const std::size_t e = ends[v][pos++];
      const std::size_t other = g.tail_index(e) == v ? g.head_index(e) : g.tail_index(e);
      if (!visited[other]) {
        visited[other] = true;
        in_tree[e] = true;
        stack.emplace_back(other, 0);
      }
    }
  }
  return make_selection(g, in_tree);
}

TreeSelection validate_tree(const OrientedGraph& g, const std::set<std::string>& edge_ids) {
  const std::size_t nv = g.num_vertices();
  if (edge_ids.size() != nv - (nv > 0 ? 1 : 0))
    throw Error(ErrorCode::WrongCardinality,
                "tree must have exactly |V|-1 = " + std::to_string(nv - (nv > 0 ? 1 : 0)) +
                    " edges, got " + std::to_string(edge_ids.size()));
  std::vector<bool> in_tree(g.num_edges(), false);
  DisjointSets sets(nv);
  std::size_t components = nv;
  for (const auto& id : edge_ids) {
    const std::size_t e = g.edge_index(id);
    if (g.is_self_loop(e))
      throw Error(ErrorCode::ContainsSelfLoop, "self-loop '" + id + "' cannot be a tree edge");
    if (!sets.unite(g.tail_index(e), g.head_index(e)))
      throw Error(ErrorCode::ContainsCycle, "tree edge '" + id + "' closes a cycle");
    --components;
    in_tree[e] = true;
  }
  if (nv > 0 && components != 1)
    throw Error(ErrorCode::NotSpanning, "tree does not span all vertices");
  return make_selection(g, in_tree);
}

std::uint64_t enumerate_spanning_trees(const OrientedGraph& g) {
  const std::size_t ne = g.num_edges();
  const std::size_t nv = g.num_vertices();
  if (ne > 24) throw Error(ErrorCode::TooLarge, "brute-force guard: |E| <= 24");
  if (nv <= 1) return 1;  // the empty subset spans a single vertex
  const std::size_t k = nv - 1;
  if (ne < k) return 0;  // unreachable for connected graphs

  std::uint64_t count = 0;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    bool acyclic = true;
    DisjointSets sets(nv);
    for (std::size_t e : pick) {
      if (g.is_self_loop(e) || !sets.unite(g.tail_index(e), g.head_index(e))) {
        acyclic = false;
        break;
      }
    }
    if (acyclic) ++count;  // |V|-1 acyclic non-loop edges always span

    // next k-combination in lexicographic order
    std::size_t i = k;
    bool advanced = false;
    while (i-- > 0) {
      if (pick[i] < i + ne - k) {
        ++pick[i];
        for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return count;
  }
}

}  // namespace ksg
