#include "lequi/spectra.hpp"

#include "lequi/error.hpp"

#include <algorithm>
#include <cmath>

namespace lequi {

std::string_view to_string(MatrixKind kind) {
  return kind == MatrixKind::Laplacian ? "L" : "Q";
}

namespace {

SymmetricMatrix degree_plus_signed_adjacency(const Graph& g, double sign) {
  const std::size_t n = g.order();
  SymmetricMatrix a(n);
  for (Vertex u = 0; u < n; ++u) {
    a.set(u, u, static_cast<double>(g.degree(u)));
    for (Vertex v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) a.set(u, v, sign);
  }
  return a;
}

void require_vertices(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "spectrum of the null graph");
}

}  // namespace

SymmetricMatrix laplacian_matrix(const Graph& g) { return degree_plus_signed_adjacency(g, -1.0); }

SymmetricMatrix signless_laplacian_matrix(const Graph& g) {
  return degree_plus_signed_adjacency(g, 1.0);
}

Spectrum spectrum(const Graph& g, MatrixKind kind) {
  require_vertices(g);
  const SymmetricMatrix a =
      kind == MatrixKind::Laplacian ? laplacian_matrix(g) : signless_laplacian_matrix(g);
  return Spectrum{kind, eigenvalues(a).values, g.order(), g.size()};
}

Spectrum laplacian_spectrum(const Graph& g) { return spectrum(g, MatrixKind::Laplacian); }

Spectrum signless_laplacian_spectrum(const Graph& g) {
  return spectrum(g, MatrixKind::SignlessLaplacian);
}

double spectral_energy(const Spectrum& s) {
  if (s.n == 0) return 0.0;
  const double n = static_cast<double>(s.n);
  const double twice_m = 2.0 * static_cast<double>(s.m);
  double sum = 0.0;
  for (double mu : s.values) sum += std::abs(n * mu - twice_m);
  return sum / n;
}

double laplacian_energy(const Graph& g) { return spectral_energy(laplacian_spectrum(g)); }

double signless_laplacian_energy(const Graph& g) {
  return spectral_energy(signless_laplacian_spectrum(g));
}

double algebraic_connectivity(const Spectrum& laplacian) {
  if (laplacian.kind != MatrixKind::Laplacian) {
    throw Error(ErrorCode::KindMismatch, "algebraic connectivity needs a Laplacian spectrum");
  }
  if (laplacian.values.size() < 2) {
    throw Error(ErrorCode::TooFewVertices, "algebraic connectivity needs at least 2 vertices");
  }
  return laplacian.values[laplacian.values.size() - 2];
}

double algebraic_connectivity(const Graph& g) {
  if (g.order() < 2) {
    throw Error(ErrorCode::TooFewVertices, "algebraic connectivity needs at least 2 vertices");
  }
  return algebraic_connectivity(laplacian_spectrum(g));
}

EnergyReport energy_report(const Graph& g) {
  const Spectrum l = laplacian_spectrum(g);
  const Spectrum q = signless_laplacian_spectrum(g);
  EnergyReport r;
  r.le = spectral_energy(l);
  r.le_plus = spectral_energy(q);
  r.avg_degree = 2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order());
  r.algebraic_connectivity = g.order() >= 2 ? algebraic_connectivity(l) : 0.0;
  return r;
}

double max_deviation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "spectra of length " + std::to_string(a.size()) +
                                               " and " + std::to_string(b.size()));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

bool are_cospectral(const Spectrum& s1, const Spectrum& s2, double tol) {
  if (s1.kind != s2.kind) throw Error(ErrorCode::KindMismatch, "comparing L and Q spectra");
  if (s1.values.size() != s2.values.size()) return false;
  return max_deviation(s1.values, s2.values) <= tol;
}

bool energies_equal(double e1, double e2, std::size_t n, double tol_per_vertex) {
  return std::abs(e1 - e2) <= tol_per_vertex * static_cast<double>(std::max<std::size_t>(n, 1));
}

std::size_t zero_multiplicity(const Spectrum& s, double tol) {
  return static_cast<std::size_t>(
      std::count_if(s.values.begin(), s.values.end(), [tol](double x) { return std::abs(x) <= tol; }));
}

}  // namespace lequi
