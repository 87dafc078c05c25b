#include "lequi/composition.hpp"

#include "lequi/graph.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace lequi;
using lequi::testing::code_of;

namespace {

constexpr double kExact = 1e-8;

}  // namespace

TEST_CASE("exact rules agree with the eigensolver on random pairs") {
  Rng rng(21);
  for (const auto& [g1, g2] : lequi::testing::random_pairs(120, 7, 13)) {
    const Spectrum l1 = laplacian_spectrum(g1), l2 = laplacian_spectrum(g2);
    const Spectrum q1 = signless_laplacian_spectrum(g1), q2 = signless_laplacian_spectrum(g2);

    CHECK(cross_check(rule_union(l1, l2), graph_union(g1, g2)).max_deviation < kExact);
    CHECK(cross_check(rule_union(q1, q2), graph_union(g1, g2)).max_deviation < kExact);
    CHECK(cross_check(rule_join(l1, l2), graph_join(g1, g2)).max_deviation < kExact);
    CHECK(cross_check(rule_complement(l1), complement(g1)).max_deviation < kExact);
    CHECK(cross_check(rule_cartesian(l1, l2), cartesian_product(g1, g2)).max_deviation < kExact);
    CHECK(cross_check(rule_cartesian(q1, q2), cartesian_product(g1, g2)).max_deviation < kExact);

    const std::size_t ambient = uniform_index(rng, g1.order(), 9);
    CHECK(cross_check(rule_kn_minus(ambient, l1), kn_minus_edges(ambient, g1)).max_deviation <
          kExact);
  }
}

TEST_CASE("rule outputs carry the composed order and size") {
  const Spectrum a = laplacian_spectrum(path_graph(4));
  const Spectrum b = laplacian_spectrum(cycle_graph(3));
  const Spectrum j = rule_join(a, b);
  CHECK(j.n == 7);
  CHECK(j.m == 3 + 3 + 12);
  const Spectrum c = rule_cartesian(a, b);
  CHECK(c.n == 12);
  CHECK(c.m == 4 * 3 + 3 * 3);
  CHECK(rule_kronecker(a, b).m == 2 * 3 * 3);
  CHECK(rule_kn_minus(6, a).m == 15 - 3);
}

TEST_CASE("pairwise products do not give the Kronecker Laplacian spectrum") {
  const Spectrum k2 = laplacian_spectrum(complete_graph(2));
  const RuleOutcome o = cross_check(rule_kronecker(k2, k2),
                                    kronecker_product(complete_graph(2), complete_graph(2)));
  CHECK(lequi::testing::max_abs_diff(o.rule_spectrum.values, {4.0, 0.0, 0.0, 0.0}) < 1e-12);
  CHECK(lequi::testing::max_abs_diff(o.direct_spectrum.values, {2.0, 2.0, 0.0, 0.0}) < 1e-12);
  CHECK(o.max_deviation == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("K_N - E(G) with G spanning K_N is the complement") {
  for (std::size_t n = 2; n <= 7; ++n) {
    const Graph g = path_graph(n);
    const Spectrum s = rule_kn_minus(n, laplacian_spectrum(g));
    CHECK(s.values.size() == n);
    CHECK(lequi::testing::max_abs_diff(s.values, rule_complement(laplacian_spectrum(g)).values) <
          1e-12);
  }
}

TEST_CASE("rule preconditions") {
  const Spectrum l = laplacian_spectrum(cycle_graph(4));
  const Spectrum q = signless_laplacian_spectrum(cycle_graph(5));
  CHECK(code_of([&] { rule_join(l, q); }) == ErrorCode::KindMismatch);
  CHECK(code_of([&] { rule_join(q, q); }) == ErrorCode::NotLaplacian);
  CHECK(code_of([&] { rule_complement(q); }) == ErrorCode::NotLaplacian);
  CHECK(code_of([&] { rule_kn_minus(3, l); }) == ErrorCode::SubgraphTooLarge);
  CHECK(code_of([&] { cross_check(l, cycle_graph(5)); }) == ErrorCode::LengthMismatch);
}
