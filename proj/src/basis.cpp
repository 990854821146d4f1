#include "ksgraph/basis.hpp"

#include <algorithm>
#include <queue>

#include "ksgraph/error.hpp"

namespace ksg {

namespace {

RatMat rows_to_matrix(const std::vector<IntVec>& rows, std::size_t width) {
  RatMat m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  return m;
}

/// Rooted representation of the tree: parent vertex and connecting edge for
/// every vertex, root = first vertex in user order.
struct RootedTree {
  std::vector<std::size_t> parent_vertex;
  std::vector<std::size_t> parent_edge;
  std::vector<std::size_t> depth;
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
};

RootedTree root_tree(const OrientedGraph& g, const TreeSelection& t) {
  const std::size_t nv = g.num_vertices();
  RootedTree rt;
  rt.parent_vertex.assign(nv, RootedTree::kNone);
  rt.parent_edge.assign(nv, RootedTree::kNone);
  rt.depth.assign(nv, 0);
  std::vector<std::vector<std::size_t>> adjacency(nv);
  for (const auto& id : t.tree_edges) {
    const std::size_t e = g.edge_index(id);
    adjacency[g.tail_index(e)].push_back(e);
    adjacency[g.head_index(e)].push_back(e);
  }
  if (nv == 0) return rt;
  std::vector<bool> visited(nv, false);
  std::queue<std::size_t> queue;
  queue.push(0);
  visited[0] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (std::size_t e : adjacency[v]) {
      const std::size_t other = g.tail_index(e) == v ? g.head_index(e) : g.tail_index(e);
      if (visited[other]) continue;
      visited[other] = true;
      rt.parent_vertex[other] = v;
      rt.parent_edge[other] = e;
      rt.depth[other] = rt.depth[v] + 1;
      queue.push(other);
    }
  }
  return rt;
}

}  // namespace

RatMat BasisBundle::cycle_matrix() const { return rows_to_matrix(cycles, num_edges()); }

RatMat BasisBundle::cocycle_matrix() const { return rows_to_matrix(cocycles, num_edges()); }

RatMat BasisBundle::incidence_canonical() const {
  std::vector<std::size_t> row_ident(graph.num_vertices());
  for (std::size_t i = 0; i < row_ident.size(); ++i) row_ident[i] = i;
  return graph.incidence().permuted(row_ident, tree.canon_to_user);
}

IntVec fundamental_cycle(const OrientedGraph& g, const TreeSelection& t,
                         const std::string& chord_id) {
  const std::size_t chord = g.edge_index(chord_id);
  if (t.in_tree(chord_id)) throw Error(ErrorCode::NotAChord, "'" + chord_id + "' is a tree edge");

  IntVec vec(g.num_edges(), 0);
  auto set_user = [&](std::size_t user_edge, int value) { vec[t.user_to_canon[user_edge]] = value; };
  set_user(chord, 1);

  // Walk the tree path head(chord) -> tail(chord) by climbing to the root.
  const RootedTree rt = root_tree(g, t);
  std::size_t a = g.head_index(chord);
  std::size_t b = g.tail_index(chord);
  while (a != b) {
    const bool step_a = rt.depth[a] >= rt.depth[b];
    const std::size_t v = step_a ? a : b;
    const std::size_t e = rt.parent_edge[v];
    // Climbing from v to parent(v). On the a-side the traversal direction is
    // v -> parent; on the b-side the path runs parent -> v.
    const bool traversed_from_v = step_a;
    const bool along = traversed_from_v ? (g.tail_index(e) == v) : (g.head_index(e) == v);
    set_user(e, along ? 1 : -1);
    (step_a ? a : b) = rt.parent_vertex[v];
  }
  return vec;
}

IntVec fundamental_cocycle(const OrientedGraph& g, const TreeSelection& t,
                           const std::string& cochord_id) {
  if (!t.in_tree(cochord_id))
    throw Error(ErrorCode::NotACochord, "'" + cochord_id + "' is not a tree edge");
  const std::size_t cochord = g.edge_index(cochord_id);

  // Source component: vertices reachable from tail(cochord) in the tree with
  // the cochord removed.
  const std::size_t nv = g.num_vertices();
  std::vector<std::vector<std::size_t>> adjacency(nv);
  for (const auto& id : t.tree_edges) {
    const std::size_t e = g.edge_index(id);
    if (e == cochord) continue;
    adjacency[g.tail_index(e)].push_back(e);
    adjacency[g.head_index(e)].push_back(e);
  }
  std::vector<bool> in_source(nv, false);
  std::queue<std::size_t> queue;
  queue.push(g.tail_index(cochord));
  in_source[g.tail_index(cochord)] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (std::size_t e : adjacency[v]) {
      const std::size_t other = g.tail_index(e) == v ? g.head_index(e) : g.tail_index(e);
      if (in_source[other]) continue;
      in_source[other] = true;
      queue.push(other);
    }
  }

  IntVec vec(g.num_edges(), 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const bool tail_src = in_source[g.tail_index(e)];
    const bool head_src = in_source[g.head_index(e)];
    if (tail_src && !head_src) vec[t.user_to_canon[e]] = 1;
    else if (!tail_src && head_src) vec[t.user_to_canon[e]] = -1;
  }
  return vec;
}

BasisBundle build_basis(const OrientedGraph& g, const TreeSelection& t) {
  BasisBundle b;
  b.graph = g;
  b.tree = t;
  for (const auto& id : t.tree_edges) b.cocycles.push_back(fundamental_cocycle(g, t, id));
  for (const auto& id : t.chord_edges) b.cycles.push_back(fundamental_cycle(g, t, id));

  // Exact verification of the bundle invariants before returning.
  const RatMat incidence = b.incidence_canonical();
  const RatMat cycles = b.cycle_matrix();
  const RatMat cocycles = b.cocycle_matrix();
  const std::size_t nco = b.num_cochords();
  const std::size_t nch = b.num_chords();

  if (!(incidence * cycles.transpose()).is_zero())
    throw std::logic_error("cycle vector outside the incidence null space");
  if (incidence.rank() != nco)
    throw std::logic_error("incidence rank != |V|-1");
  if (nco > 0) {
    RatMat stacked(incidence.rows() + nco, g.num_edges());
    stacked.set_block(0, 0, incidence);
    stacked.set_block(incidence.rows(), 0, cocycles);
    if (stacked.rank() != nco)
      throw std::logic_error("cocycle vector outside the incidence row space");
  }
  // Orthogonality table: <e_a|e_m> = <c_a|c_m> = 0, <e_a|c_a'> = delta,
  // <e_m|c_m'> = delta.
  if (!(cycles * cocycles.transpose()).is_zero())
    throw std::logic_error("cycle/cocycle pairing is not zero");
  for (std::size_t i = 0; i < nch; ++i)
    for (std::size_t j = 0; j < nch; ++j)
      if (Rat(b.cycles[i][nco + j]) != Rat(i == j ? 1 : 0))
        throw std::logic_error("cycle chord components are not a delta");
  for (std::size_t i = 0; i < nco; ++i)
    for (std::size_t j = 0; j < nco; ++j)
      if (Rat(b.cocycles[i][j]) != Rat(i == j ? 1 : 0))
        throw std::logic_error("cocycle cochord components are not a delta");
  for (const auto& vec : b.cycles)
    for (int v : vec)
      if (v < -1 || v > 1) throw std::logic_error("cycle entry outside {-1,0,1}");
  for (const auto& vec : b.cocycles)
    for (int v : vec)
      if (v < -1 || v > 1) throw std::logic_error("cocycle entry outside {-1,0,1}");
  return b;
}

}  // namespace ksg
