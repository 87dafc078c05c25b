#pragma once

#include "lequi/graph.hpp"
#include "lequi/spectra.hpp"

#include <cstddef>

namespace lequi {

// Closed-form spectral rules for composed graphs. Each rule takes the
// spectra of the operands and predicts the spectrum of the result without
// building it; cross_check() compares a prediction with the eigensolver.
// Every output inherits the matrix kind of its inputs and carries the exact
// order and edge count of the composed graph.

/// Pairwise sums mu_i + sigma_j.
Spectrum rule_cartesian(const Spectrum& s1, const Spectrum& s2);

/// Pairwise products mu_i * sigma_j. This is the rule exactly as commonly
/// quoted; it does not hold for Laplacian or signless Laplacian spectra in
/// general, so callers route it through cross_check().
Spectrum rule_kronecker(const Spectrum& s1, const Spectrum& s2);

/// {n1+n2} u {n1 + sigma_j : j < n2} u {n2 + mu_i : i < n1} u {0}.
/// Laplacian only; throws NotLaplacian otherwise.
Spectrum rule_join(const Spectrum& s1, const Spectrum& s2);

/// Multiset union.
Spectrum rule_union(const Spectrum& s1, const Spectrum& s2);

/// {n - mu_i : i < n} u {0}. Laplacian only.
Spectrum rule_complement(const Spectrum& s);

/// L-spectrum of K_n - E(G) for G on s <= n vertices:
/// n - mu_1, ..., n - mu_s, then n repeated (n - s - 1) times, then 0.
/// When s = n the repeat count is -1; that cancels the single n produced
/// by mu_s = 0.
Spectrum rule_kn_minus(std::size_t n, const Spectrum& s);

struct RuleOutcome {
  Spectrum rule_spectrum;
  Spectrum direct_spectrum;
  double max_deviation = 0.0;
};

/// Eigensolves `built` with the rule's matrix kind and measures the largest
/// pointwise gap. Throws LengthMismatch when the orders differ.
RuleOutcome cross_check(const Spectrum& rule_spectrum, const Graph& built);

}  // namespace lequi
