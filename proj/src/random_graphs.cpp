#include "ksgraph/random_graphs.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace ksg {

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

std::vector<std::string> vertex_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i + 1));
  return out;
}

Edge make_edge(std::size_t index, const std::vector<std::string>& vertices, std::size_t tail,
               std::size_t head) {
  return {"e" + std::to_string(index + 1), vertices[tail], vertices[head]};
}

/// Random spanning tree by attaching each new vertex to a uniformly chosen
/// earlier one, with random edge orientation.
std::vector<Edge> random_tree_edges(std::mt19937_64& rng, const std::vector<std::string>& vertices) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < vertices.size(); ++v) {
    const std::size_t anchor = draw(rng, 0, v - 1);
    if (rng() % 2 == 0)
      edges.push_back(make_edge(edges.size(), vertices, anchor, v));
    else
      edges.push_back(make_edge(edges.size(), vertices, v, anchor));
  }
  return edges;
}

}  // namespace

OrientedGraph random_connected_multigraph(std::mt19937_64& rng, std::size_t max_vertices,
                                          std::size_t max_edges) {
  const std::size_t nv = draw(rng, 1, max_vertices);
  const std::size_t min_edges = nv - 1;
  const std::size_t ne = draw(rng, min_edges, std::max(min_edges, max_edges));
  const auto vertices = vertex_names(nv);
  std::vector<Edge> edges = random_tree_edges(rng, vertices);
  while (edges.size() < ne) {
    const std::size_t tail = draw(rng, 0, nv - 1);
    // Self-loops and parallels allowed.
    const std::size_t head = rng() % 8 == 0 ? tail : draw(rng, 0, nv - 1);
    edges.push_back(make_edge(edges.size(), vertices, tail, head));
  }
  return OrientedGraph::create(vertices, std::move(edges));
}

OrientedGraph random_connected_simple_graph(std::mt19937_64& rng, std::size_t max_vertices) {
  const std::size_t nv = draw(rng, 2, max_vertices);
  const auto vertices = vertex_names(nv);
  std::vector<Edge> edges = random_tree_edges(rng, vertices);
  std::set<std::pair<std::size_t, std::size_t>> used;
  auto key = [&](const Edge& e) {
    std::size_t a = 0, b = 0;
    for (std::size_t i = 0; i < nv; ++i) {
      if (vertices[i] == e.tail) a = i;
      if (vertices[i] == e.head) b = i;
    }
    return std::minmax(a, b);
  };
  for (const Edge& e : edges) used.insert(key(e));
  const std::size_t max_extra = nv * (nv - 1) / 2 - (nv - 1);
  const std::size_t extra = draw(rng, 0, max_extra);
  for (std::size_t i = 0; i < extra; ++i) {
    const std::size_t tail = draw(rng, 0, nv - 1);
    const std::size_t head = draw(rng, 0, nv - 1);
    if (tail == head) continue;
    if (!used.insert(std::minmax(tail, head)).second) continue;
    edges.push_back(make_edge(edges.size(), vertices, tail, head));
  }
  return OrientedGraph::create(vertices, std::move(edges));
}

OrientedGraph random_loop_bridge_graph(std::mt19937_64& rng, std::size_t max_vertices,
                                       std::size_t max_loops) {
  const std::size_t nv = draw(rng, 1, max_vertices);
  const auto vertices = vertex_names(nv);
  std::vector<Edge> edges = nv > 1 ? random_tree_edges(rng, vertices) : std::vector<Edge>{};
  const std::size_t loops = draw(rng, nv > 1 ? 0 : 1, max_loops);
  for (std::size_t i = 0; i < loops; ++i) {
    const std::size_t v = draw(rng, 0, nv - 1);
    edges.push_back(make_edge(edges.size(), vertices, v, v));
  }
  return OrientedGraph::create(vertices, std::move(edges));
}

RatVec random_state_vector(std::mt19937_64& rng, std::size_t num_edges) {
  RatVec out(num_edges);
  for (auto& value : out) {
    const long long num = static_cast<long long>(rng() % 19) - 9;
    const long long den = static_cast<long long>(rng() % 9) + 1;
    value = Rat(num, den);
  }
  return out;
}

}  // namespace ksg
