#include "lequi/composition.hpp"

#include "lequi/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace lequi {

namespace {

void require_same_kind(const Spectrum& a, const Spectrum& b) {
  if (a.kind != b.kind) throw Error(ErrorCode::KindMismatch, "operands have different matrix kinds");
}

void require_laplacian(const Spectrum& s) {
  if (s.kind != MatrixKind::Laplacian) {
    throw Error(ErrorCode::NotLaplacian, "rule is stated for Laplacian spectra only");
  }
  if (s.values.empty() || std::abs(s.values.back()) > kMultiplicityTolerance) {
    throw Error(ErrorCode::NotLaplacian, "smallest eigenvalue is not zero");
  }
}

Spectrum sorted(MatrixKind kind, std::vector<double> values, std::size_t m) {
  std::sort(values.begin(), values.end(), std::greater<>());
  const std::size_t n = values.size();
  return Spectrum{kind, std::move(values), n, m};
}

double as_real(std::size_t x) { return static_cast<double>(x); }

}  // namespace

Spectrum rule_cartesian(const Spectrum& s1, const Spectrum& s2) {
  require_same_kind(s1, s2);
  std::vector<double> out;
  out.reserve(s1.values.size() * s2.values.size());
  for (double mu : s1.values)
    for (double sigma : s2.values) out.push_back(mu + sigma);
  return sorted(s1.kind, std::move(out), s1.n * s2.m + s2.n * s1.m);
}

Spectrum rule_kronecker(const Spectrum& s1, const Spectrum& s2) {
  require_same_kind(s1, s2);
  std::vector<double> out;
  out.reserve(s1.values.size() * s2.values.size());
  for (double mu : s1.values)
    for (double sigma : s2.values) out.push_back(mu * sigma);
  return sorted(s1.kind, std::move(out), 2 * s1.m * s2.m);
}

Spectrum rule_join(const Spectrum& s1, const Spectrum& s2) {
  require_same_kind(s1, s2);
  require_laplacian(s1);
  require_laplacian(s2);
  const std::size_t n1 = s1.values.size();
  const std::size_t n2 = s2.values.size();
  std::vector<double> out;
  out.reserve(n1 + n2);
  out.push_back(as_real(n1 + n2));
  for (std::size_t j = 0; j + 1 < n2; ++j) out.push_back(as_real(n1) + s2.values[j]);
  for (std::size_t i = 0; i + 1 < n1; ++i) out.push_back(as_real(n2) + s1.values[i]);
  out.push_back(0.0);
  return sorted(MatrixKind::Laplacian, std::move(out), s1.m + s2.m + n1 * n2);
}

Spectrum rule_union(const Spectrum& s1, const Spectrum& s2) {
  require_same_kind(s1, s2);
  std::vector<double> out = s1.values;
  out.insert(out.end(), s2.values.begin(), s2.values.end());
  return sorted(s1.kind, std::move(out), s1.m + s2.m);
}

Spectrum rule_complement(const Spectrum& s) {
  require_laplacian(s);
  const std::size_t n = s.values.size();
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(as_real(n) - s.values[i]);
  out.push_back(0.0);
  return sorted(MatrixKind::Laplacian, std::move(out), n * (n - 1) / 2 - s.m);
}

Spectrum rule_kn_minus(std::size_t n, const Spectrum& s) {
  require_laplacian(s);
  const std::size_t order = s.values.size();
  if (order > n) {
    throw Error(ErrorCode::SubgraphTooLarge, "subgraph on " + std::to_string(order) +
                                                 " vertices does not fit in K_" + std::to_string(n));
  }
  std::vector<double> out;
  out.reserve(n + 1);
  for (double mu : s.values) out.push_back(as_real(n) - mu);
  if (order < n) {
    out.insert(out.end(), n - order - 1, as_real(n));
  } else {
    // Repeat count -1: drop the n contributed by the trailing zero.
    out.pop_back();
  }
  out.push_back(0.0);
  return sorted(MatrixKind::Laplacian, std::move(out), n * (n - 1) / 2 - s.m);
}

RuleOutcome cross_check(const Spectrum& rule_spectrum, const Graph& built) {
  if (rule_spectrum.values.size() != built.order()) {
    throw Error(ErrorCode::LengthMismatch,
                "rule predicts " + std::to_string(rule_spectrum.values.size()) +
                    " eigenvalues for a graph on " + std::to_string(built.order()) + " vertices");
  }
  RuleOutcome out;
  out.rule_spectrum = rule_spectrum;
  out.direct_spectrum = spectrum(built, rule_spectrum.kind);
  out.max_deviation = max_deviation(out.rule_spectrum.values, out.direct_spectrum.values);
  return out;
}

}  // namespace lequi
