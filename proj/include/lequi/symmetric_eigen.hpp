#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lequi {

/// Off-diagonal Frobenius threshold, relative to (initial norm + 1).
inline constexpr double kDefaultJacobiTolerance = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;
/// Eigenvalues closer than this are reported as one value with multiplicity.
inline constexpr double kMultiplicityTolerance = 1e-7;

/// Dense real symmetric matrix. Writes go through set(), which fills both
/// triangles, so the storage is symmetric by construction.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t order) : order_(order), entries_(order * order, 0.0) {}

  std::size_t order() const noexcept { return order_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * order_ + j]; }
  void set(std::size_t i, std::size_t j, double value) noexcept {
    entries_[i * order_ + j] = value;
    entries_[j * order_ + i] = value;
  }

  double trace() const noexcept;
  double frobenius_norm() const noexcept;
  std::span<const double> row_major() const noexcept { return entries_; }

 private:
  std::size_t order_ = 0;
  std::vector<double> entries_;
};

struct EigenvalueList {
  std::vector<double> values;  // non-increasing
  int sweeps = 0;
};

/// All eigenvalues of a by cyclic Jacobi rotations.
///
/// Sweeps continue until the off-diagonal Frobenius norm drops below
/// tol * (||a||_F + 1). Throws NoConvergence after kMaxJacobiSweeps sweeps,
/// InvalidArgument for an empty matrix or non-positive tol.
EigenvalueList eigenvalues(const SymmetricMatrix& a, double tol = kDefaultJacobiTolerance);

struct EigenvalueGroup {
  double value;
  std::size_t multiplicity;
};

/// Groups a sorted list into runs whose consecutive gaps are at most tol.
/// Each group reports the mean of its run.
std::vector<EigenvalueGroup> group_multiplicities(std::span<const double> sorted_values,
                                                  double tol = kMultiplicityTolerance);

}  // namespace lequi
