#include "lequi/graph.hpp"

#include "lequi/error.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <queue>
#include <sstream>

namespace lequi {

namespace {

void check_order(std::size_t n) {
  if (n > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices,
                std::to_string(n) + " vertices exceeds the dense limit of " +
                    std::to_string(kMaxVertices));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// GraphBuilder

GraphBuilder::GraphBuilder(std::size_t n) : n_(n) {
  check_order(n);
  adj_.assign(n * n, 0);
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_ || u == v) {
    throw Error(ErrorCode::InvalidEdge, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                            ") on " + std::to_string(n_) + " vertices");
  }
  if (adj_[u * n_ + v]) return false;
  adj_[u * n_ + v] = 1;
  adj_[v * n_ + u] = 1;
  return true;
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) return;
  adj_[u * n_ + v] = 0;
  adj_[v * n_ + u] = 0;
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.adj_ = std::move(adj_);
  g.degree_.assign(n_, 0);
  std::size_t twice_m = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    std::size_t d = 0;
    const std::uint8_t* row = g.adj_.data() + u * n_;
    for (std::size_t v = 0; v < n_; ++v) d += row[v];
    g.degree_[u] = d;
    twice_m += d;
  }
  g.m_ = twice_m / 2;
  n_ = 0;
  return g;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n) : Graph(GraphBuilder(n).build()) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) {
    if (!b.add_edge(u, v)) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") listed twice");
    }
  }
  *this = std::move(b).build();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> d = degree_;
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) {
    throw Error(ErrorCode::InvalidArgument, "permutation length does not match graph order");
  }
  std::vector<std::uint8_t> seen(n_, 0);
  for (Vertex p : perm) {
    if (p >= n_ || seen[p]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[p] = 1;
  }
  GraphBuilder b(n_);
  for (auto [u, v] : edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Named families

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_bipartite(std::size_t q, std::size_t r) {
  return graph_join(empty_graph(q), empty_graph(r));
}

Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph NamedFamily::graph() const {
  switch (kind) {
    case Kind::Complete: return complete_graph(a);
    case Kind::Empty: return empty_graph(a);
    case Kind::CompleteBipartite: return complete_bipartite(a, b);
  }
  return {};
}

std::size_t NamedFamily::expected_edges() const {
  switch (kind) {
    case Kind::Complete: return a * (a == 0 ? 0 : a - 1) / 2;
    case Kind::Empty: return 0;
    case Kind::CompleteBipartite: return a * b;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Operations

Graph graph_union(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  GraphBuilder b(n1 + g2.order());
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(n1 + u, n1 + v);
  return std::move(b).build();
}

Graph graph_join(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  GraphBuilder b(n1 + n2);
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(n1 + u, n1 + v);
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < n2; ++v) b.add_edge(u, n1 + v);
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  check_order(n1 * n2);
  GraphBuilder b(n1 * n2);
  // Copies of g2 inside each row u, then copies of g1 along each column v.
  for (Vertex u = 0; u < n1; ++u)
    for (auto [v1, v2] : g2.edges()) b.add_edge(u * n2 + v1, u * n2 + v2);
  for (auto [u1, u2] : g1.edges())
    for (Vertex v = 0; v < n2; ++v) b.add_edge(u1 * n2 + v, u2 * n2 + v);
  return std::move(b).build();
}

Graph kronecker_product(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  check_order(n1 * n2);
  GraphBuilder b(n1 * n2);
  const auto e2 = g2.edges();
  for (auto [u1, u2] : g1.edges()) {
    for (auto [v1, v2] : e2) {
      b.add_edge(u1 * n2 + v1, u2 * n2 + v2);
      b.add_edge(u1 * n2 + v2, u2 * n2 + v1);
    }
  }
  return std::move(b).build();
}

Graph kn_minus_edges(std::size_t n, const Graph& g) {
  if (g.order() > n) {
    throw Error(ErrorCode::SubgraphTooLarge, "subgraph on " + std::to_string(g.order()) +
                                                 " vertices does not fit in K_" + std::to_string(n));
  }
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (u >= g.order() || v >= g.order() || !g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Traversal

namespace {

// Labels every vertex with its component index; returns the component count.
std::size_t label_components(const Graph& g, std::vector<std::size_t>& label) {
  const std::size_t n = g.order();
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  label.assign(n, unseen);
  std::size_t count = 0;
  std::queue<Vertex> frontier;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != unseen) continue;
    label[s] = count;
    frontier.push(s);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      for (Vertex v = 0; v < n; ++v) {
        if (g.adjacent(u, v) && label[v] == unseen) {
          label[v] = count;
          frontier.push(v);
        }
      }
    }
    ++count;
  }
  return count;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "connectivity of the null graph");
  std::vector<std::size_t> label;
  return label_components(g, label) == 1;
}

std::size_t component_count(const Graph& g) {
  std::vector<std::size_t> label;
  return label_components(g, label);
}

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  std::queue<Vertex> frontier;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      for (Vertex v = 0; v < n; ++v) {
        if (!g.adjacent(u, v)) continue;
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          frontier.push(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Edge-list format

namespace {

bool is_skippable(const std::string& line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_order = false;
  std::size_t n = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    std::istringstream fields(line);
    if (!have_order) {
      long long value = -1;
      std::string rest;
      if (!(fields >> value) || value < 0 || (fields >> rest)) {
        parse_fail(line_no, "expected a non-negative vertex count");
      }
      n = static_cast<std::size_t>(value);
      check_order(n);
      have_order = true;
      continue;
    }
    long long u = -1;
    long long v = -1;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest)) parse_fail(line_no, "expected \"u v\"");
    if (u < 0 || v < 0 || u >= v || static_cast<std::size_t>(v) >= n) {
      throw Error(ErrorCode::InvalidEdge,
                  "line " + std::to_string(line_no) + ": need 0 <= u < v < " + std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_order) throw Error(ErrorCode::ParseError, "missing vertex count");
  return Graph(n, edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace lequi
