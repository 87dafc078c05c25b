#pragma once

#include "lequi/constructions.hpp"
#include "lequi/graph.hpp"
#include "lequi/spectra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lequi {

// Report tolerances. All three are distinct and overridable per run.
inline constexpr double kReportEqualityTolerancePerVertex = 1e-8;
inline constexpr double kReportCospectralTolerance = 1e-7;
/// Mismatches at or below this size are never recorded as discrepancies.
inline constexpr double kDiscrepancyThreshold = 1e-6;

struct VerifyOptions {
  double equality_tol_per_vertex = kReportEqualityTolerancePerVertex;
  double cospectral_tol = kReportCospectralTolerance;
  double discrepancy_threshold = kDiscrepancyThreshold;
  /// Compute both L and Q spectra. When false only the recipe's own kind
  /// is computed (L always, since the report's le fields are mandatory).
  bool both_kinds = true;
};

enum class DiscrepancySource {
  KroneckerRule,            // pairwise-product rule for Kronecker spectra
  CompleteBipartiteSignless, // claimed Q-spectrum of K_{p,p}
  UnionEmptyClosedForm,     // stated constant in the G u Kbar_p energy
  Other,
};

std::string_view to_string(DiscrepancySource source);

/// A stated spectrum or closed form that disagrees with direct computation.
struct DiscrepancyRecord {
  DiscrepancySource source = DiscrepancySource::Other;
  std::string instance;
  std::vector<double> stated_value;
  std::vector<double> oracle_value;
  double deviation = 0.0;
};

enum class ClosedFormMatch { Stated, Variant, Neither };
std::string_view to_string(ClosedFormMatch match);

struct ClosedFormCheck {
  double formula_value = 0.0;
  std::vector<double> variant_values;
  ClosedFormMatch match = ClosedFormMatch::Neither;
};

struct VerificationReport {
  std::string recipe;  // slug, empty for a bare pair
  std::size_t p = 0;
  std::size_t n = 0;
  std::size_t m = 0;  // of h1
  MatrixKind kind = MatrixKind::Laplacian;  // energy the equality is claimed for

  double le_h1 = 0.0;
  double le_h2 = 0.0;
  double le_diff = 0.0;
  std::optional<double> le_plus_h1;
  std::optional<double> le_plus_h2;
  std::optional<double> q_diff;
  bool cospectral_l = false;
  std::optional<bool> cospectral_q;

  std::optional<double> rule_deviation;
  std::optional<ClosedFormCheck> closed_form;
  std::vector<DiscrepancyRecord> discrepancies;

  /// The claimed energy equality held within equality_tol_per_vertex * n.
  bool equality_holds = false;
  double wall_time_ms = 0.0;
};

/// Energies, differences and cospectrality of two graphs of equal order.
/// Throws OrderMismatch.
VerificationReport verify_pair(const Graph& h1, const Graph& h2, MatrixKind kind,
                               const VerifyOptions& options = {});

/// construct() followed by verify_pair(), the composition-rule cross-check
/// and, where a stated closed form exists, arbitration between it and its
/// re-derived variants. Propagates PreconditionFailed.
VerificationReport verify_recipe(const Recipe& recipe, const Graph& g1, const Graph& g2,
                                 std::size_t p, const VerifyOptions& options = {});

/// The claimed Q-spectrum of K_{p,p}: p, p/2 repeated (p-2) times, 0.
std::vector<double> stated_kpp_signless_spectrum(std::size_t p);

// --- Two trees on six vertices with equal (n, m) but different LE(T x K_p).

std::pair<Graph, Graph> counterexample_trees();
/// (LE(T1 x K_p), LE(T2 x K_p)); p >= 2.
std::pair<double, double> counterexample_energies(std::size_t p);

struct CounterexampleReference {
  std::size_t p;
  double le1;
  double le2;
};
inline constexpr CounterexampleReference kCounterexampleReference[] = {
    {4, 41.70818, 42.05078},
    {6, 69.5139, 70.0849},
    {7, 83.4164, 84.1016},
};
inline constexpr double kCounterexampleTolerance = 5e-3;

// --- Randomized audit of the composition rules against the eigensolver.

struct LemmaAuditOptions {
  std::size_t trials = 200;
  std::size_t max_n = 8;
  std::uint64_t seed = 1;
  double discrepancy_threshold = kDiscrepancyThreshold;
};

struct RuleAuditSummary {
  std::string rule;  // e.g. "union-L", "kronecker-Q"
  std::size_t instances = 0;
  double max_deviation = 0.0;
  std::size_t discrepancies = 0;
};

struct LemmaAuditReport {
  std::vector<RuleAuditSummary> rules;
  std::vector<DiscrepancyRecord> discrepancies;

  const RuleAuditSummary* find(std::string_view rule) const;
};

/// Checks union, join, complement, Cartesian, Kronecker and K_N - E(G)
/// rules on `trials` random graph pairs. The K_2 (x) K_2 instance is always
/// audited first.
LemmaAuditReport audit_lemmas(const LemmaAuditOptions& options = {});

}  // namespace lequi
