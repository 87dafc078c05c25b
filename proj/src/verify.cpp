#include "lequi/verify.hpp"

#include "lequi/composition.hpp"
#include "lequi/error.hpp"
#include "lequi/random_graphs.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

namespace lequi {

std::string_view to_string(DiscrepancySource source) {
  switch (source) {
    case DiscrepancySource::KroneckerRule: return "kronecker-rule";
    case DiscrepancySource::CompleteBipartiteSignless: return "kpp-signless-spectrum";
    case DiscrepancySource::UnionEmptyClosedForm: return "union-empty-closed-form";
    case DiscrepancySource::Other: return "other";
  }
  return "other";
}

std::string_view to_string(ClosedFormMatch match) {
  switch (match) {
    case ClosedFormMatch::Stated: return "stated";
    case ClosedFormMatch::Variant: return "variant";
    case ClosedFormMatch::Neither: return "neither";
  }
  return "neither";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ":[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out << (first ? "" : ",") << u << '-' << v;
    first = false;
  }
  out << ']';
  return out.str();
}

// Sorted non-increasing lists of possibly different length; the shorter one
// is padded with zeros.
double padded_deviation(std::vector<double> a, std::vector<double> b) {
  const std::size_t len = std::max(a.size(), b.size());
  a.resize(len, 0.0);
  b.resize(len, 0.0);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  return max_deviation(a, b);
}

bool is_kronecker(RecipeId id) {
  return id == RecipeId::R19 || id == RecipeId::R20 || id == RecipeId::R21;
}

}  // namespace

VerificationReport verify_pair(const Graph& h1, const Graph& h2, MatrixKind kind,
                               const VerifyOptions& options) {
  const auto start = Clock::now();
  if (h1.order() != h2.order()) {
    throw Error(ErrorCode::OrderMismatch, "graphs of order " + std::to_string(h1.order()) +
                                              " and " + std::to_string(h2.order()));
  }
  VerificationReport r;
  r.n = h1.order();
  r.m = h1.size();
  r.kind = kind;

  const Spectrum l1 = laplacian_spectrum(h1);
  const Spectrum l2 = laplacian_spectrum(h2);
  r.le_h1 = spectral_energy(l1);
  r.le_h2 = spectral_energy(l2);
  r.le_diff = std::abs(r.le_h1 - r.le_h2);
  r.cospectral_l = are_cospectral(l1, l2, options.cospectral_tol);

  if (options.both_kinds || kind == MatrixKind::SignlessLaplacian) {
    const Spectrum q1 = signless_laplacian_spectrum(h1);
    const Spectrum q2 = signless_laplacian_spectrum(h2);
    r.le_plus_h1 = spectral_energy(q1);
    r.le_plus_h2 = spectral_energy(q2);
    r.q_diff = std::abs(*r.le_plus_h1 - *r.le_plus_h2);
    r.cospectral_q = are_cospectral(q1, q2, options.cospectral_tol);
  }

  const double claimed_diff = kind == MatrixKind::Laplacian ? r.le_diff : *r.q_diff;
  r.equality_holds =
      claimed_diff <= options.equality_tol_per_vertex * static_cast<double>(std::max<std::size_t>(r.n, 1));
  r.wall_time_ms = elapsed_ms(start);
  return r;
}

VerificationReport verify_recipe(const Recipe& recipe, const Graph& g1, const Graph& g2,
                                 std::size_t p, const VerifyOptions& options) {
  const auto start = Clock::now();
  const auto [h1, h2] = construct(recipe, g1, g2, p);
  VerificationReport r = verify_pair(h1, h2, recipe.energy_kind(), options);
  r.recipe = std::string(recipe.slug());
  r.p = p;

  // Composition-rule path for each built graph.
  double rule_dev = 0.0;
  const Graph* inputs[] = {&g1, &g2};
  const Graph* built[] = {&h1, &h2};
  for (int i = 0; i < 2; ++i) {
    const RuleOutcome outcome = cross_check(recipe_rule_spectrum(recipe, *inputs[i], p), *built[i]);
    rule_dev = std::max(rule_dev, outcome.max_deviation);
    if (outcome.max_deviation > options.discrepancy_threshold) {
      DiscrepancyRecord d;
      d.source = is_kronecker(recipe.id) ? DiscrepancySource::KroneckerRule : DiscrepancySource::Other;
      d.instance = r.recipe + " p=" + std::to_string(p) + " G=" + describe(*inputs[i]);
      d.stated_value = outcome.rule_spectrum.values;
      d.oracle_value = outcome.direct_spectrum.values;
      d.deviation = outcome.max_deviation;
      r.discrepancies.push_back(std::move(d));
    }
  }
  r.rule_deviation = rule_dev;

  // Closed-form arbitration against the directly computed energy of h1.
  std::vector<double> energies;
  if (recipe.id == RecipeId::R22 || recipe.id == RecipeId::R23) {
    const std::size_t copies = recipe.id == RecipeId::R22 ? 2 : p;
    energies.assign(copies, laplacian_energy(g1));
  }
  try {
    const ClosedForm cf = closed_form_energy(recipe.id, g1.order(), g1.size(), p, energies);
    ClosedFormCheck check;
    check.formula_value = cf.formula_value;
    check.variant_values = cf.variant_values;
    const double stated_gap = std::abs(r.le_h1 - cf.formula_value);
    if (stated_gap < options.discrepancy_threshold) {
      check.match = ClosedFormMatch::Stated;
    } else {
      for (double v : cf.variant_values) {
        if (std::abs(r.le_h1 - v) < options.discrepancy_threshold) check.match = ClosedFormMatch::Variant;
      }
      DiscrepancyRecord d;
      d.source = recipe.id == RecipeId::R1 ? DiscrepancySource::UnionEmptyClosedForm
                                           : DiscrepancySource::Other;
      d.instance = r.recipe + " closed form, n=" + std::to_string(g1.order()) +
                   " m=" + std::to_string(g1.size()) + " p=" + std::to_string(p);
      d.stated_value = {cf.formula_value};
      d.oracle_value = {r.le_h1};
      d.deviation = stated_gap;
      r.discrepancies.push_back(std::move(d));
    }
    r.closed_form = std::move(check);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoClosedForm) throw;
  }

  if (recipe.id == RecipeId::R11) {
    DiscrepancyRecord d;
    d.source = DiscrepancySource::CompleteBipartiteSignless;
    d.instance = "Q-spectrum of K_{" + std::to_string(p) + "," + std::to_string(p) + "}";
    d.stated_value = stated_kpp_signless_spectrum(p);
    d.oracle_value = signless_laplacian_spectrum(complete_bipartite(p, p)).values;
    d.deviation = padded_deviation(d.stated_value, d.oracle_value);
    if (d.deviation > options.discrepancy_threshold) r.discrepancies.push_back(std::move(d));
  }

  r.wall_time_ms = elapsed_ms(start);
  return r;
}

std::vector<double> stated_kpp_signless_spectrum(std::size_t p) {
  std::vector<double> out{static_cast<double>(p)};
  if (p > 2) out.insert(out.end(), p - 2, static_cast<double>(p) / 2.0);
  out.push_back(0.0);
  return out;
}

std::pair<Graph, Graph> counterexample_trees() {
  const Edge t1[] = {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {3, 5}};
  const Edge t2[] = {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {4, 5}};
  return {Graph(6, t1), Graph(6, t2)};
}

std::pair<double, double> counterexample_energies(std::size_t p) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "counterexample needs p >= 2");
  const auto [t1, t2] = counterexample_trees();
  const Graph kp = complete_graph(p);
  return {laplacian_energy(cartesian_product(t1, kp)), laplacian_energy(cartesian_product(t2, kp))};
}

// ---------------------------------------------------------------------------

const RuleAuditSummary* LemmaAuditReport::find(std::string_view rule) const {
  for (const auto& r : rules)
    if (r.rule == rule) return &r;
  return nullptr;
}

namespace {

class Auditor {
 public:
  explicit Auditor(double threshold) : threshold_(threshold) {
    for (const char* name : {"union-L", "union-Q", "join-L", "complement-L", "cartesian-L",
                             "cartesian-Q", "kronecker-L", "kronecker-Q", "kn-minus-L"}) {
      report_.rules.push_back({name, 0, 0.0, 0});
    }
  }

  void check(std::size_t rule_index, const Spectrum& rule, const Graph& built,
             const std::string& instance) {
    const RuleOutcome outcome = cross_check(rule, built);
    RuleAuditSummary& s = report_.rules[rule_index];
    ++s.instances;
    s.max_deviation = std::max(s.max_deviation, outcome.max_deviation);
    if (outcome.max_deviation > threshold_) {
      ++s.discrepancies;
      DiscrepancyRecord d;
      d.source = s.rule.starts_with("kronecker") ? DiscrepancySource::KroneckerRule
                                                 : DiscrepancySource::Other;
      d.instance = s.rule + " " + instance;
      d.stated_value = outcome.rule_spectrum.values;
      d.oracle_value = outcome.direct_spectrum.values;
      d.deviation = outcome.max_deviation;
      report_.discrepancies.push_back(std::move(d));
    }
  }

  void audit_pair(const Graph& g1, const Graph& g2, std::size_t ambient, const std::string& tag) {
    const std::string instance = tag + " G1=" + describe(g1) + " G2=" + describe(g2);
    const Spectrum l1 = laplacian_spectrum(g1);
    const Spectrum l2 = laplacian_spectrum(g2);
    const Spectrum q1 = signless_laplacian_spectrum(g1);
    const Spectrum q2 = signless_laplacian_spectrum(g2);
    const Graph cart = cartesian_product(g1, g2);
    const Graph kron = kronecker_product(g1, g2);
    const Graph uni = graph_union(g1, g2);

    check(0, rule_union(l1, l2), uni, instance);
    check(1, rule_union(q1, q2), uni, instance);
    check(2, rule_join(l1, l2), graph_join(g1, g2), instance);
    check(3, rule_complement(l1), complement(g1), instance);
    check(4, rule_cartesian(l1, l2), cart, instance);
    check(5, rule_cartesian(q1, q2), cart, instance);
    check(6, rule_kronecker(l1, l2), kron, instance);
    check(7, rule_kronecker(q1, q2), kron, instance);
    check(8, rule_kn_minus(ambient, l1), kn_minus_edges(ambient, g1),
          instance + " N=" + std::to_string(ambient));
  }

  LemmaAuditReport take() && { return std::move(report_); }

 private:
  double threshold_;
  LemmaAuditReport report_;
};

}  // namespace

LemmaAuditReport audit_lemmas(const LemmaAuditOptions& options) {
  if (options.max_n < 2) throw Error(ErrorCode::InvalidArgument, "max-n must be at least 2");
  Auditor auditor(options.discrepancy_threshold);

  const Graph k2 = complete_graph(2);
  auditor.audit_pair(k2, k2, 2, "seed");

  Rng rng(options.seed);
  for (std::size_t t = 0; t < options.trials; ++t) {
    const std::size_t n1 = uniform_index(rng, 1, options.max_n);
    const std::size_t n2 = uniform_index(rng, 1, options.max_n);
    const double d1 = static_cast<double>(uniform_index(rng, 0, 100)) / 100.0;
    const double d2 = static_cast<double>(uniform_index(rng, 0, 100)) / 100.0;
    const Graph g1 = random_graph(n1, d1, rng);
    const Graph g2 = random_graph(n2, d2, rng);
    const std::size_t ambient = uniform_index(rng, n1, std::max(n1, options.max_n));
    auditor.audit_pair(g1, g2, ambient, "trial " + std::to_string(t));
  }
  return std::move(auditor).take();
}

}  // namespace lequi
