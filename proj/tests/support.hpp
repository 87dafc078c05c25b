#pragma once

#include "lequi/error.hpp"
#include "lequi/graph.hpp"
#include "lequi/random_graphs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace lequi::testing {

/// Connected random pairs sharing (n, m), n drawn from [n_lo, n_hi].
inline std::vector<std::pair<Graph, Graph>> connected_pairs(std::size_t count, std::size_t n_lo,
                                                            std::size_t n_hi, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<Graph, Graph>> out;
  while (out.size() < count) {
    const std::size_t n = uniform_index(rng, n_lo, n_hi);
    const std::size_t m = uniform_index(rng, n - 1, n * (n - 1) / 2);
    auto g1 = random_connected_graph(n, m, rng);
    auto g2 = random_connected_graph(n, m, rng);
    if (g1 && g2) out.emplace_back(std::move(*g1), std::move(*g2));
  }
  return out;
}

/// Arbitrary (possibly disconnected) random pairs with independent orders.
inline std::vector<std::pair<Graph, Graph>> random_pairs(std::size_t count, std::size_t max_n,
                                                         std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<Graph, Graph>> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n1 = uniform_index(rng, 1, max_n);
    const std::size_t n2 = uniform_index(rng, 1, max_n);
    const double d1 = static_cast<double>(uniform_index(rng, 0, 100)) / 100.0;
    const double d2 = static_cast<double>(uniform_index(rng, 0, 100)) / 100.0;
    out.emplace_back(random_graph(n1, d1, rng), random_graph(n2, d2, rng));
  }
  return out;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return a.size() == b.size() ? d : INFINITY;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("no lequi::Error thrown");
}

}  // namespace lequi::testing
