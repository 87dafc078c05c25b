#include "lequi/symmetric_eigen.hpp"

#include "lequi/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace lequi {

double SymmetricMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < order_; ++i) t += entries_[i * order_ + i];
  return t;
}

double SymmetricMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double x : entries_) s += x * x;
  return std::sqrt(s);
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(2.0 * s);
}

// Annihilates a(p, q) with a plane rotation applied from both sides.
void rotate(std::vector<double>& a, std::size_t n, std::size_t p, std::size_t q) {
  double* rp = a.data() + p * n;
  double* rq = a.data() + q * n;
  const double apq = rp[q];
  const double theta = (rq[q] - rp[p]) / (2.0 * apq);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  rp[p] -= t * apq;
  rq[q] += t * apq;
  rp[q] = 0.0;
  rq[p] = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double g = rp[r];
    const double h = rq[r];
    const double new_p = g - s * (h + g * tau);
    const double new_q = h + s * (g - h * tau);
    rp[r] = new_p;
    rq[r] = new_q;
    a[r * n + p] = new_p;
    a[r * n + q] = new_q;
  }
}

}  // namespace

EigenvalueList eigenvalues(const SymmetricMatrix& m, double tol) {
  const std::size_t n = m.order();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "eigenvalues of a 0x0 matrix");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");

  std::vector<double> a(m.row_major().begin(), m.row_major().end());
  const double threshold = tol * (m.frobenius_norm() + 1.0);

  EigenvalueList out;
  double off = off_diagonal_norm(a, n);
  while (off >= threshold) {
    if (out.sweeps == kMaxJacobiSweeps) {
      throw Error(ErrorCode::NoConvergence, "off-diagonal norm " + std::to_string(off) +
                                                " after " + std::to_string(out.sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        // Once a pivot is negligible against both diagonal entries a rotation
        // cannot change them in floating point; drop it instead.
        const double small = 100.0 * std::abs(apq);
        if (out.sweeps > 3 && std::abs(a[p * n + p]) + small == std::abs(a[p * n + p]) &&
            std::abs(a[q * n + q]) + small == std::abs(a[q * n + q])) {
          a[p * n + q] = 0.0;
          a[q * n + p] = 0.0;
          continue;
        }
        rotate(a, n, p, q);
      }
    }
    ++out.sweeps;
    off = off_diagonal_norm(a, n);
  }

  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a[i * n + i];
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

std::vector<EigenvalueGroup> group_multiplicities(std::span<const double> sorted_values,
                                                  double tol) {
  std::vector<EigenvalueGroup> groups;
  std::size_t i = 0;
  while (i < sorted_values.size()) {
    std::size_t j = i + 1;
    double sum = sorted_values[i];
    while (j < sorted_values.size() && std::abs(sorted_values[j] - sorted_values[j - 1]) <= tol) {
      sum += sorted_values[j];
      ++j;
    }
    groups.push_back({sum / static_cast<double>(j - i), j - i});
    i = j;
  }
  return groups;
}

}  // namespace lequi
