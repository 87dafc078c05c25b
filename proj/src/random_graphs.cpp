#include "lequi/random_graphs.hpp"

#include <algorithm>
#include <numeric>

namespace lequi {

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

Graph random_graph(std::size_t n, double density, Rng& rng) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < density) b.add_edge(u, v);
  return std::move(b).build();
}

Graph random_graph_with_size(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  // Partial Fisher-Yates: the first m slots become the edge set.
  for (std::size_t i = 0; i < m && i < slots.size(); ++i) {
    std::swap(slots[i], slots[uniform_index(rng, i, slots.size() - 1)]);
  }
  slots.resize(std::min(m, slots.size()));
  return Graph(n, slots);
}

std::optional<Graph> random_connected_graph(std::size_t n, std::size_t m, Rng& rng, int attempts) {
  for (int i = 0; i < attempts; ++i) {
    Graph g = random_graph_with_size(n, m, rng);
    if (n > 0 && is_connected(g)) return g;
  }
  return std::nullopt;
}

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform_index(rng, 0, i - 1)]);
  return perm;
}

}  // namespace lequi
