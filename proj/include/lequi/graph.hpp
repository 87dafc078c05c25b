#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lequi {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Upper bound on the order of a graph held in dense storage.
inline constexpr std::size_t kMaxVertices = 4096;

class GraphBuilder;

/**
 * Simple undirected graph on vertices {0, ..., n-1}, stored as a dense
 * symmetric 0/1 adjacency matrix with an empty diagonal.
 *
 * Graphs are immutable values; every operation below returns a fresh graph.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Throws InvalidEdge for loops or out-of-range endpoints and
  /// DuplicateEdge when the same unordered pair appears twice.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u * n_ + v] != 0; }
  std::size_t degree(Vertex v) const noexcept { return degree_[v]; }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  /// Degrees sorted non-increasing.
  std::vector<std::size_t> degree_sequence() const;

  /// Vertex v of this graph becomes perm[v] in the result.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::size_t> degree_;
};

/// Mutable staging area for assembling a Graph edge by edge.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const noexcept { return adj_[u * n_ + v] != 0; }
  void remove_edge(Vertex u, Vertex v);

  Graph build() &&;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
};

// Named families.
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph complete_bipartite(std::size_t q, std::size_t r);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

struct NamedFamily {
  enum class Kind { Complete, Empty, CompleteBipartite };
  Kind kind;
  std::size_t a = 0;
  std::size_t b = 0;

  Graph graph() const;
  std::size_t expected_edges() const;
};

// Graph operations. Product vertex (u, v) is indexed u * n2 + v.
Graph graph_union(const Graph& g1, const Graph& g2);
Graph graph_join(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);
Graph cartesian_product(const Graph& g1, const Graph& g2);
Graph kronecker_product(const Graph& g1, const Graph& g2);
/// K_n with the edges of g removed; g sits on vertices 0 .. g.order()-1.
Graph kn_minus_edges(std::size_t n, const Graph& g);

/// Breadth-first reachability from vertex 0. Throws EmptyGraph if n = 0.
bool is_connected(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_bipartite(const Graph& g);

// Edge-list text format: first line n, then one "u v" per line with
// 0 <= u < v < n. Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list(const std::string& path);
std::string to_edge_list(const Graph& g);

}  // namespace lequi
