#pragma once

#include <cstdint>
#include <random>

#include "ksgraph/graph.hpp"
#include "ksgraph/rational.hpp"

namespace ksg {

/// Random connected oriented multigraph: a random spanning tree plus extra
/// edges that may be parallels or self-loops, with random orientations.
/// 1 <= |V| <= max_vertices, |V|-1 <= |E| <= max_edges. Deterministic for a
/// given generator state.
OrientedGraph random_connected_multigraph(std::mt19937_64& rng, std::size_t max_vertices,
                                          std::size_t max_edges);

/// Random connected simple graph (no loops, no parallels), 2 <= |V|.
OrientedGraph random_connected_simple_graph(std::mt19937_64& rng, std::size_t max_vertices);

/// Random tree plus self-loop chords only: the orthogonal-projection class
/// (every chord is a loop).
OrientedGraph random_loop_bridge_graph(std::mt19937_64& rng, std::size_t max_vertices,
                                       std::size_t max_loops);

/// Random rational vector with one entry per edge, numerators in [-9, 9],
/// denominators in [1, 9].
RatVec random_state_vector(std::mt19937_64& rng, std::size_t num_edges);

}  // namespace ksg
