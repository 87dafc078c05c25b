#pragma once

#include "lequi/graph.hpp"
#include "lequi/symmetric_eigen.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace lequi {

enum class MatrixKind { Laplacian, SignlessLaplacian };

std::string_view to_string(MatrixKind kind);

/// Cospectrality is judged an order of magnitude above eigensolver noise.
inline constexpr double kCospectralTolerance = 1e-7;
/// Energies are compared with tolerance kEnergyTolerancePerVertex * n.
inline constexpr double kEnergyTolerancePerVertex = 1e-9;

/// Eigenvalues of L = D - A or Q = D + A, sorted non-increasing, together
/// with the order and size of the graph they describe.
struct Spectrum {
  MatrixKind kind = MatrixKind::Laplacian;
  std::vector<double> values;
  std::size_t n = 0;
  std::size_t m = 0;
};

struct EnergyReport {
  double le = 0.0;
  double le_plus = 0.0;
  double avg_degree = 0.0;
  double algebraic_connectivity = 0.0;
};

SymmetricMatrix laplacian_matrix(const Graph& g);
SymmetricMatrix signless_laplacian_matrix(const Graph& g);

Spectrum laplacian_spectrum(const Graph& g);
Spectrum signless_laplacian_spectrum(const Graph& g);
Spectrum spectrum(const Graph& g, MatrixKind kind);

/// Sum of |value - 2m/n| over the spectrum. The deviation is evaluated as
/// |n * value - 2m| / n so the integer average-degree numerator is exact.
double spectral_energy(const Spectrum& s);

double laplacian_energy(const Graph& g);
double signless_laplacian_energy(const Graph& g);

/// Second-smallest Laplacian eigenvalue. Throws TooFewVertices if n < 2.
double algebraic_connectivity(const Graph& g);
double algebraic_connectivity(const Spectrum& laplacian);

EnergyReport energy_report(const Graph& g);

/// Same length and every sorted pair within tol. Throws KindMismatch.
bool are_cospectral(const Spectrum& s1, const Spectrum& s2, double tol = kCospectralTolerance);

/// Largest pointwise gap between two sorted lists of equal length.
double max_deviation(const std::vector<double>& a, const std::vector<double>& b);

bool energies_equal(double e1, double e2, std::size_t n,
                    double tol_per_vertex = kEnergyTolerancePerVertex);

/// Number of eigenvalues within tol of zero.
std::size_t zero_multiplicity(const Spectrum& s, double tol = kMultiplicityTolerance);

}  // namespace lequi
