#pragma once

#include "lequi/graph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace lequi {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Plain modulo keeps the stream reproducible
/// across standard library implementations.
std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi);

/// Each of the n(n-1)/2 pairs is an edge with probability density.
Graph random_graph(std::size_t n, double density, Rng& rng);

/// Uniformly chosen m-edge graph on n vertices.
Graph random_graph_with_size(std::size_t n, std::size_t m, Rng& rng);

/// Connected m-edge graph by rejection; nullopt if `attempts` draws fail.
std::optional<Graph> random_connected_graph(std::size_t n, std::size_t m, Rng& rng,
                                            int attempts = 200);

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng);

}  // namespace lequi
