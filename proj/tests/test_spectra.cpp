#include "lequi/spectra.hpp"

#include "lequi/graph.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace lequi;
using lequi::testing::code_of;
using lequi::testing::max_abs_diff;

TEST_CASE("complete graph") {
  for (std::size_t n = 2; n <= 9; ++n) {
    const Spectrum s = laplacian_spectrum(complete_graph(n));
    std::vector<double> expected(n - 1, static_cast<double>(n));
    expected.push_back(0.0);
    CHECK(max_abs_diff(s.values, expected) < 1e-12);
    CHECK(laplacian_energy(complete_graph(n)) == doctest::Approx(2.0 * (n - 1)).epsilon(1e-12));
  }
}

TEST_CASE("path on three vertices") {
  const Graph p3 = path_graph(3);
  CHECK(max_abs_diff(laplacian_spectrum(p3).values, {3.0, 1.0, 0.0}) < 1e-12);
  // Average degree 4/3: |3 - 4/3| + |1 - 4/3| + 4/3 = 10/3.
  CHECK(laplacian_energy(p3) == doctest::Approx(10.0 / 3.0).epsilon(1e-12));
  CHECK(signless_laplacian_energy(p3) == doctest::Approx(10.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("star K_{1,3}") {
  const Graph s = complete_bipartite(1, 3);
  CHECK(max_abs_diff(laplacian_spectrum(s).values, {4.0, 1.0, 1.0, 0.0}) < 1e-12);
  CHECK(algebraic_connectivity(s) == doctest::Approx(1.0));
}

TEST_CASE("cycles match 2 - 2 cos(2 pi k / n)") {
  for (std::size_t n = 3; n <= 12; ++n) {
    std::vector<double> expected;
    for (std::size_t k = 0; k < n; ++k) {
      expected.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) /
                                              static_cast<double>(n)));
    }
    std::sort(expected.begin(), expected.end(), std::greater<>());
    CHECK(max_abs_diff(laplacian_spectrum(cycle_graph(n)).values, expected) < 1e-10);
  }
}

TEST_CASE("path algebraic connectivity is 2 - 2 cos(pi / n)") {
  for (std::size_t n = 2; n <= 10; ++n) {
    const double expected = 2.0 - 2.0 * std::cos(std::numbers::pi / static_cast<double>(n));
    CHECK(algebraic_connectivity(path_graph(n)) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("signless Laplacian of K_{p,p}") {
  for (std::size_t p = 1; p <= 6; ++p) {
    std::vector<double> expected{2.0 * static_cast<double>(p)};
    expected.insert(expected.end(), 2 * p - 2, static_cast<double>(p));
    expected.push_back(0.0);
    CHECK(max_abs_diff(signless_laplacian_spectrum(complete_bipartite(p, p)).values, expected) <
          1e-10);
  }
}

TEST_CASE("invariants on random graphs") {
  for (const auto& [g, unused] : lequi::testing::random_pairs(150, 9, 5)) {
    const Spectrum l = laplacian_spectrum(g);
    const Spectrum q = signless_laplacian_spectrum(g);
    double tl = 0.0, tq = 0.0;
    for (double x : l.values) tl += x;
    for (double x : q.values) tq += x;
    CHECK(tl == doctest::Approx(2.0 * static_cast<double>(g.size())).epsilon(1e-10));
    CHECK(tq == doctest::Approx(2.0 * static_cast<double>(g.size())).epsilon(1e-10));
    CHECK(zero_multiplicity(l) == component_count(g));
    CHECK(l.values.back() >= -1e-10);
    CHECK(q.values.back() >= -1e-10);
    if (is_bipartite(g)) {
      CHECK(max_abs_diff(l.values, q.values) < 1e-9);
    }
    if (g.order() >= 2) {
      CHECK((algebraic_connectivity(g) > 1e-9) == is_connected(g));
    }
  }
}

TEST_CASE("spectrum is invariant under relabeling") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = uniform_index(rng, 2, 10);
    const Graph g = random_graph(n, 0.5, rng);
    const auto perm = random_permutation(n, rng);
    const Graph h = g.relabeled(perm);
    CHECK(are_cospectral(laplacian_spectrum(g), laplacian_spectrum(h)));
    CHECK(are_cospectral(signless_laplacian_spectrum(g), signless_laplacian_spectrum(h)));
  }
}

TEST_CASE("energy report") {
  const EnergyReport r = energy_report(cycle_graph(4));
  // Spectrum {4, 2, 2, 0} around average degree 2.
  CHECK(r.le == doctest::Approx(4.0));
  CHECK(r.avg_degree == doctest::Approx(2.0));
  CHECK(r.algebraic_connectivity == doctest::Approx(2.0));
}

TEST_CASE("errors") {
  CHECK(code_of([] { laplacian_spectrum(Graph(0)); }) == ErrorCode::EmptyGraph);
  CHECK(code_of([] { algebraic_connectivity(Graph(1)); }) == ErrorCode::TooFewVertices);
  const Spectrum q = signless_laplacian_spectrum(path_graph(3));
  const Spectrum l = laplacian_spectrum(path_graph(3));
  CHECK(code_of([&] { algebraic_connectivity(q); }) == ErrorCode::KindMismatch);
  CHECK(code_of([&] { are_cospectral(l, q); }) == ErrorCode::KindMismatch);
  CHECK_FALSE(are_cospectral(l, laplacian_spectrum(path_graph(4))));
  CHECK(code_of([] { max_deviation({1.0}, {1.0, 2.0}); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("energy equality tolerance scales with n") {
  CHECK(energies_equal(10.0, 10.0 + 5e-9, 10));
  CHECK_FALSE(energies_equal(10.0, 10.0 + 5e-8, 10));
}
