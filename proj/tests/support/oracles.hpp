#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "ksgraph/graph.hpp"
#include "ksgraph/matrix.hpp"

namespace ksg::testing {

/// Leibniz-formula determinant: an oracle independent of the elimination
/// code under test. Only sensible for small n.
inline Rat leibniz_det(const RatMat& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rat total = 0;
  do {
    // parity by counting inversions
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rat term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Union-find connectivity oracle over an edge subset (by user index).
inline bool connected_with_edges(const OrientedGraph& g, const std::vector<std::size_t>& edges) {
  const std::size_t nv = g.num_vertices();
  if (nv == 0) return true;
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = nv;
  for (std::size_t e : edges) {
    const std::size_t a = find(g.tail_index(e));
    const std::size_t b = find(g.head_index(e));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace ksg::testing
