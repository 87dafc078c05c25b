#include "lequi/graph.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace lequi;
using lequi::testing::code_of;

TEST_CASE("construction rejects loops, out-of-range and repeated edges") {
  const Edge loop[] = {{1, 1}};
  const Edge far[] = {{0, 3}};
  const Edge twice[] = {{0, 1}, {1, 0}};
  CHECK(code_of([&] { Graph(3, loop); }) == ErrorCode::InvalidEdge);
  CHECK(code_of([&] { Graph(3, far); }) == ErrorCode::InvalidEdge);
  CHECK(code_of([&] { Graph(3, twice); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { Graph(kMaxVertices + 1); }) == ErrorCode::TooManyVertices);
}

TEST_CASE("edges are normalized and degrees sorted") {
  const Edge e[] = {{2, 0}, {3, 1}, {0, 1}};
  const Graph g(4, e);
  CHECK(g.size() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
  CHECK(g.degree_sequence() == std::vector<std::size_t>{2, 2, 1, 1});
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(2, 3));
}

TEST_CASE("builder") {
  GraphBuilder b(3);
  CHECK(b.add_edge(0, 1));
  CHECK_FALSE(b.add_edge(1, 0));
  CHECK(b.has_edge(1, 0));
  b.remove_edge(0, 1);
  CHECK_FALSE(b.has_edge(0, 1));
  CHECK(code_of([&] { b.add_edge(2, 2); }) == ErrorCode::InvalidEdge);
  CHECK(std::move(b).build().size() == 0);
}

TEST_CASE("named families") {
  CHECK(complete_graph(6).size() == 15);
  CHECK(empty_graph(6).size() == 0);
  CHECK(complete_bipartite(3, 4).size() == 12);
  CHECK(path_graph(5).size() == 4);
  CHECK(cycle_graph(5).size() == 5);
  CHECK(code_of([] { cycle_graph(2); }) == ErrorCode::InvalidArgument);
  CHECK(path_graph(1).size() == 0);

  for (std::size_t a = 0; a <= 5; ++a) {
    for (std::size_t b = 0; b <= 4; ++b) {
      const NamedFamily kab{NamedFamily::Kind::CompleteBipartite, a, b};
      CHECK(kab.graph().size() == kab.expected_edges());
    }
    const NamedFamily k{NamedFamily::Kind::Complete, a};
    const NamedFamily e{NamedFamily::Kind::Empty, a};
    CHECK(k.graph().size() == k.expected_edges());
    CHECK(e.graph().size() == e.expected_edges());
  }
}

TEST_CASE("operation counts on random graphs") {
  for (const auto& [g1, g2] : lequi::testing::random_pairs(100, 7, 11)) {
    const std::size_t n1 = g1.order(), n2 = g2.order(), m1 = g1.size(), m2 = g2.size();

    const Graph u = graph_union(g1, g2);
    CHECK(u.order() == n1 + n2);
    CHECK(u.size() == m1 + m2);

    const Graph j = graph_join(g1, g2);
    CHECK(j.order() == n1 + n2);
    CHECK(j.size() == m1 + m2 + n1 * n2);

    CHECK(complement(g1).size() + m1 == n1 * (n1 - 1) / 2);
    CHECK(complement(complement(g1)) == g1);

    const Graph c = cartesian_product(g1, g2);
    CHECK(c.order() == n1 * n2);
    CHECK(c.size() == n1 * m2 + n2 * m1);

    const Graph k = kronecker_product(g1, g2);
    CHECK(k.order() == n1 * n2);
    CHECK(k.size() == 2 * m1 * m2);

    const std::size_t big = n1 + 2;
    const Graph d = kn_minus_edges(big, g1);
    CHECK(d.order() == big);
    CHECK(d.size() + m1 == big * (big - 1) / 2);
  }
}

TEST_CASE("product indexing is row-major") {
  const Graph p2 = path_graph(2);
  const Graph p3 = path_graph(3);
  const Graph c = cartesian_product(p2, p3);
  // (0,1) ~ (1,1) and (0,1) ~ (0,2)
  CHECK(c.adjacent(1, 4));
  CHECK(c.adjacent(1, 2));
  CHECK_FALSE(c.adjacent(1, 5));
  const Graph k = kronecker_product(p2, p3);
  CHECK(k.adjacent(1, 3));
  CHECK(k.adjacent(1, 5));
  CHECK_FALSE(k.adjacent(1, 4));
}

TEST_CASE("K2 x K2 (Kronecker) is two disjoint edges") {
  const Graph k = kronecker_product(complete_graph(2), complete_graph(2));
  CHECK(k.size() == 2);
  CHECK(component_count(k) == 2);
}

TEST_CASE("K_n - E(G) embeds G on the lowest vertices") {
  const Graph g = kn_minus_edges(5, path_graph(3));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(3, 4));
  CHECK(code_of([] { kn_minus_edges(2, path_graph(3)); }) == ErrorCode::SubgraphTooLarge);
  CHECK(kn_minus_edges(3, path_graph(3)) == complement(path_graph(3)));
}

TEST_CASE("connectivity and bipartiteness") {
  CHECK(code_of([] { is_connected(Graph(0)); }) == ErrorCode::EmptyGraph);
  CHECK(is_connected(Graph(1)));
  CHECK(is_connected(cycle_graph(6)));
  CHECK(component_count(empty_graph(4)) == 4);
  CHECK(component_count(graph_union(cycle_graph(3), path_graph(4))) == 2);
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(is_bipartite(complete_bipartite(2, 5)));
  CHECK(is_bipartite(empty_graph(3)));
}

TEST_CASE("relabeling") {
  const Graph g = path_graph(4);
  const Vertex perm[] = {3, 1, 0, 2};
  const Graph h = g.relabeled(perm);
  CHECK(h.degree_sequence() == g.degree_sequence());
  CHECK(h.adjacent(3, 1));
  CHECK(h.adjacent(1, 0));
  CHECK(h.adjacent(0, 2));
  const Vertex bad[] = {0, 0, 1, 2};
  CHECK(code_of([&] { g.relabeled(bad); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("edge-list parsing") {
  const Graph g = parse_edge_list("# a triangle plus a pendant\n4\n\n0 1\n1 2\n0 2\n2 3\n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 4);
  CHECK(parse_edge_list(to_edge_list(g)) == g);

  CHECK(code_of([] { parse_edge_list("3\n1 0\n"); }) == ErrorCode::InvalidEdge);
  CHECK(code_of([] { parse_edge_list("3\n0 3\n"); }) == ErrorCode::InvalidEdge);
  CHECK(code_of([] { parse_edge_list("3\n0 1\n0 1\n"); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { parse_edge_list("3\n0 x\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_edge_list("3\n0 1 2\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_edge_list("# nothing\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { read_edge_list("/nonexistent/graph.txt"); }) == ErrorCode::ParseError);
  CHECK(parse_edge_list("0\n").order() == 0);
}
