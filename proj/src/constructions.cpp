#include "lequi/constructions.hpp"

#include "lequi/composition.hpp"
#include "lequi/error.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <sstream>

namespace lequi {

namespace {

enum class Gap { AlgebraicConnectivity, SignlessSmallest, SignlessSecondSmallest, EnergyPair };
enum class Threshold { Padding, AverageDegreePlusOne, EnergyGap };
enum class Floor { AtLeastOne, AtLeastTwo, AtLeastN, AtLeastNPlus4, GreaterThanN, AtLeastTwoN };
// Extra hypothesis on the inputs, e.g. "algebraic connectivity greater than one".
enum class Clause { None, AlgebraicAbove, SignlessSmallestAbove };

struct Traits {
  RecipeId id;
  std::string_view slug;
  std::string_view expression;
  MatrixKind kind;
  Gap gap;
  int gap_offset;
  Threshold threshold;
  Floor floor;
  bool ambient;
  Clause clause;
  double clause_limit;
};

using enum MatrixKind;
constexpr auto L = Laplacian;
constexpr auto Q = SignlessLaplacian;

// clang-format off
constexpr std::array<Traits, kRecipeCount> kTraits{{
  {RecipeId::R1,  "R1:union-empty", "G u Kbar_p", L, Gap::AlgebraicConnectivity, 0, Threshold::Padding, Floor::AtLeastOne, false, Clause::None, 0},
  {RecipeId::R2,  "R2:union-empty-q", "G u Kbar_p", Q, Gap::SignlessSecondSmallest, 0, Threshold::Padding, Floor::AtLeastOne, false, Clause::SignlessSmallestAbove, 0},
  {RecipeId::R3,  "R3:complement-join-complete", "Gbar v K_p", L, Gap::AlgebraicConnectivity, 1, Threshold::Padding, Floor::AtLeastOne, false, Clause::AlgebraicAbove, 1},
  {RecipeId::R4,  "R4:join-empty", "G v Kbar_p", L, Gap::AlgebraicConnectivity, 0, Threshold::Padding, Floor::AtLeastN, false, Clause::None, 0},
  {RecipeId::R5,  "R5:join-empty-bipartite-complement", "G v complement(K_{p,p})", L, Gap::AlgebraicConnectivity, 0, Threshold::Padding, Floor::AtLeastN, false, Clause::None, 0},
  {RecipeId::R6,  "R6:complement-union-complete", "Gbar u K_p", L, Gap::AlgebraicConnectivity, 0, Threshold::Padding, Floor::AtLeastNPlus4, false, Clause::None, 0},
  {RecipeId::R7,  "R7:kn-minus-join-complete", "(K_N - E(G)) v K_p", L, Gap::AlgebraicConnectivity, 1, Threshold::Padding, Floor::AtLeastOne, true, Clause::AlgebraicAbove, 1},
  {RecipeId::R8,  "R8:kn-minus-union-complete", "(K_N - E(G)) u K_p", L, Gap::AlgebraicConnectivity, 1, Threshold::Padding, Floor::AtLeastN, true, Clause::AlgebraicAbove, 1},
  {RecipeId::R9,  "R9:cart-union-empty", "(G u Kbar_p) x K_p", L, Gap::AlgebraicConnectivity, 0, Threshold::Padding, Floor::GreaterThanN, false, Clause::None, 0},
  {RecipeId::R10, "R10:cart-union-empty-q", "(G u Kbar_p) x K_p", Q, Gap::SignlessSmallest, 1, Threshold::Padding, Floor::AtLeastOne, false, Clause::SignlessSmallestAbove, 1},
  {RecipeId::R11, "R11:cart-union-empty-bipartite-q", "(G u Kbar_p) x K_{p,p}", Q, Gap::SignlessSmallest, 0, Threshold::Padding, Floor::AtLeastTwoN, false, Clause::None, 0},
  {RecipeId::R12, "R12:cart-kn-minus-union", "((K_N - E(G)) u K_p) x K_p", L, Gap::AlgebraicConnectivity, 2, Threshold::Padding, Floor::AtLeastOne, true, Clause::AlgebraicAbove, 2},
  {RecipeId::R13, "R13:cart-complement-union", "(Gbar u K_p) x K_p", L, Gap::AlgebraicConnectivity, 0, Threshold::Padding, Floor::AtLeastTwoN, false, Clause::None, 0},
  {RecipeId::R14, "R14:cart-complement-join", "(Gbar v K_p) x K_p", L, Gap::AlgebraicConnectivity, 2, Threshold::Padding, Floor::AtLeastOne, false, Clause::AlgebraicAbove, 2},
  {RecipeId::R15, "R15:cart-kn-minus-join", "((K_N - E(G)) v K_p) x K_p", L, Gap::AlgebraicConnectivity, 2, Threshold::Padding, Floor::AtLeastOne, true, Clause::AlgebraicAbove, 2},
  {RecipeId::R16, "R16:cart-join-empty", "(G v Kbar_p) x K_p", L, Gap::AlgebraicConnectivity, 0, Threshold::Padding, Floor::AtLeastNPlus4, false, Clause::None, 0},
  {RecipeId::R17, "R17:join-complete-union-empty", "(G v K_p) u Kbar_p", L, Gap::AlgebraicConnectivity, 0, Threshold::Padding, Floor::AtLeastN, false, Clause::None, 0},
  {RecipeId::R18, "R18:direct-cartesian", "G x K_p", L, Gap::AlgebraicConnectivity, 0, Threshold::AverageDegreePlusOne, Floor::GreaterThanN, false, Clause::None, 0},
  {RecipeId::R19, "R19:kron-join-empty", "(G v Kbar_p) (x) K_p", L, Gap::AlgebraicConnectivity, 0, Threshold::Padding, Floor::AtLeastN, false, Clause::None, 0},
  {RecipeId::R20, "R20:kron-union-empty", "(G u Kbar_p) (x) K_p", L, Gap::AlgebraicConnectivity, 0, Threshold::Padding, Floor::AtLeastOne, false, Clause::None, 0},
  {RecipeId::R21, "R21:kron-union-empty-q", "(G u Kbar_p) (x) K_p", Q, Gap::SignlessSmallest, 0, Threshold::Padding, Floor::GreaterThanN, false, Clause::None, 0},
  {RecipeId::R22, "R22:join-pairs", "G1 v G2 vs G1' v G2'", L, Gap::EnergyPair, 0, Threshold::EnergyGap, Floor::AtLeastOne, false, Clause::None, 0},
  {RecipeId::R23, "R23:multi-join", "G1 v ... v Gk vs G1' v ... v Gk'", L, Gap::EnergyPair, 0, Threshold::EnergyGap, Floor::AtLeastTwo, false, Clause::None, 0},
}};
// clang-format on

constexpr std::array<RecipeId, kRecipeCount> kAllRecipes = [] {
  std::array<RecipeId, kRecipeCount> ids{};
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = kTraits[i].id;
  return ids;
}();

const Traits& traits(RecipeId id) { return kTraits[static_cast<std::size_t>(id) - 1]; }

std::size_t floor_for(Floor f, std::size_t n) {
  switch (f) {
    case Floor::AtLeastOne: return 1;
    case Floor::AtLeastTwo: return 2;
    case Floor::AtLeastN: return std::max<std::size_t>(n, 1);
    case Floor::AtLeastNPlus4: return n + 4;
    case Floor::GreaterThanN: return n + 1;
    case Floor::AtLeastTwoN: return std::max<std::size_t>(2 * n, 1);
  }
  return 1;
}

std::string clause_text(const Traits& t) {
  std::ostringstream out;
  switch (t.clause) {
    case Clause::None: return {};
    case Clause::AlgebraicAbove: out << "algebraic connectivity > " << t.clause_limit; break;
    case Clause::SignlessSmallestAbove:
      out << "smallest signless Laplacian eigenvalue > " << t.clause_limit;
      break;
  }
  return out.str();
}

// Everything about the inputs that the hypotheses depend on; p-independent,
// so a scan over p evaluates it once.
struct InputSummary {
  const Traits* traits;
  std::size_t n;       // effective order: ambient N for the K_N - E(G) families
  std::size_t m;
  double gap;          // min over both inputs of the recipe's spectral term
  double clause_value; // min over both inputs of the clause quantity
};

double gap_of(Gap gap, const Graph& g) {
  switch (gap) {
    case Gap::AlgebraicConnectivity: return algebraic_connectivity(g);
    case Gap::SignlessSmallest: return signless_laplacian_spectrum(g).values.back();
    case Gap::SignlessSecondSmallest: {
      const auto q = signless_laplacian_spectrum(g);
      return q.values.size() >= 2 ? q.values[q.values.size() - 2] : q.values.back();
    }
    case Gap::EnergyPair: return 0.0;
  }
  return 0.0;
}

double clause_quantity(Clause c, const Graph& g) {
  switch (c) {
    case Clause::None: return 0.0;
    case Clause::AlgebraicAbove: return algebraic_connectivity(g);
    case Clause::SignlessSmallestAbove: return signless_laplacian_spectrum(g).values.back();
  }
  return 0.0;
}

InputSummary summarize(const Recipe& recipe, const Graph& g1, const Graph& g2) {
  const Traits& t = traits(recipe.id);
  if (g1.order() != g2.order() || g1.size() != g2.size()) {
    throw Error(ErrorCode::MismatchedPair,
                "inputs have (n, m) = (" + std::to_string(g1.order()) + ", " +
                    std::to_string(g1.size()) + ") and (" + std::to_string(g2.order()) + ", " +
                    std::to_string(g2.size()) + ")");
  }
  if (g1.order() == 0) throw Error(ErrorCode::EmptyGraph, "recipe inputs must have vertices");

  InputSummary s{&t, g1.order(), g1.size(), 0.0, 0.0};
  if (t.gap == Gap::EnergyPair) {
    s.gap = std::abs(laplacian_energy(g1) - laplacian_energy(g2));
    return s;
  }
  if (!is_connected(g1) || !is_connected(g2)) {
    throw Error(ErrorCode::Disconnected, std::string(t.slug) + " needs connected inputs");
  }
  if (g1.order() < 2) {
    throw Error(ErrorCode::TooFewVertices, "recipe inputs need at least 2 vertices");
  }
  if (t.ambient) {
    const std::size_t ambient = recipe.ambient_n.value_or(g1.order());
    if (ambient < g1.order()) {
      throw Error(ErrorCode::SubgraphTooLarge, "ambient order " + std::to_string(ambient) +
                                                   " below input order " +
                                                   std::to_string(g1.order()));
    }
    s.n = ambient;
  }
  s.gap = std::min(gap_of(t.gap, g1), gap_of(t.gap, g2));
  if (t.clause != Clause::None) {
    s.clause_value = std::min(clause_quantity(t.clause, g1), clause_quantity(t.clause, g2));
  }
  return s;
}

Precondition evaluate(const InputSummary& s, std::size_t p) {
  const Traits& t = *s.traits;
  Precondition pre;
  pre.p = p;
  pre.gap_offset = t.gap_offset;
  pre.p_floor = floor_for(t.floor, s.n);
  pre.connectivity_clause = clause_text(t);
  const double twice_m = 2.0 * static_cast<double>(s.m);

  switch (t.threshold) {
    case Threshold::Padding:
      pre.threshold = twice_m / static_cast<double>(p + s.n);
      pre.bound = s.gap - t.gap_offset;
      pre.strict = true;
      break;
    case Threshold::AverageDegreePlusOne:
      pre.threshold = twice_m / static_cast<double>(s.n) + 1.0;
      pre.bound = s.gap;
      pre.strict = false;
      break;
    case Threshold::EnergyGap:
      pre.threshold = s.gap;
      pre.bound = kEnergyTolerancePerVertex * static_cast<double>(s.n);
      pre.strict = false;
      break;
  }
  pre.connectivity_ok = t.clause == Clause::None || s.clause_value > t.clause_limit + kBoundaryTolerance;
  pre.satisfied = pre.threshold_ok() && p >= pre.p_floor && pre.connectivity_ok;
  return pre;
}

// Recipe expressions, written once and evaluated in several algebras.
template <class Algebra>
typename Algebra::Value compose(const Algebra& a, const Recipe& recipe,
                                const typename Algebra::Value& g, std::size_t n, std::size_t p) {
  const std::size_t ambient = recipe.ambient_n.value_or(n);
  switch (recipe.id) {
    case RecipeId::R1:
    case RecipeId::R2: return a.unite(g, a.empty(p));
    case RecipeId::R3: return a.join(a.complement(g), a.complete(p));
    case RecipeId::R4: return a.join(g, a.empty(p));
    case RecipeId::R5: {
      auto kpp = a.complete_bipartite(p, p);
      return a.join(g, recipe.assume_bar_typo ? kpp : a.complement(kpp));
    }
    case RecipeId::R6: return a.unite(a.complement(g), a.complete(p));
    case RecipeId::R7: return a.join(a.kn_minus(ambient, g), a.complete(p));
    case RecipeId::R8: return a.unite(a.kn_minus(ambient, g), a.complete(p));
    case RecipeId::R9:
    case RecipeId::R10: return a.cartesian(a.unite(g, a.empty(p)), a.complete(p));
    case RecipeId::R11: return a.cartesian(a.unite(g, a.empty(p)), a.complete_bipartite(p, p));
    case RecipeId::R12:
      return a.cartesian(a.unite(a.kn_minus(ambient, g), a.complete(p)), a.complete(p));
    case RecipeId::R13: return a.cartesian(a.unite(a.complement(g), a.complete(p)), a.complete(p));
    case RecipeId::R14: return a.cartesian(a.join(a.complement(g), a.complete(p)), a.complete(p));
    case RecipeId::R15:
      return a.cartesian(a.join(a.kn_minus(ambient, g), a.complete(p)), a.complete(p));
    case RecipeId::R16: return a.cartesian(a.join(g, a.empty(p)), a.complete(p));
    case RecipeId::R17: return a.unite(a.join(g, a.complete(p)), a.empty(p));
    case RecipeId::R18: return a.cartesian(g, a.complete(p));
    case RecipeId::R19: return a.kronecker(a.join(g, a.empty(p)), a.complete(p));
    case RecipeId::R20:
    case RecipeId::R21: return a.kronecker(a.unite(g, a.empty(p)), a.complete(p));
    case RecipeId::R22: return a.join(g, g);
    case RecipeId::R23: {
      auto acc = g;
      for (std::size_t k = 1; k < p; ++k) acc = a.join(acc, g);
      return acc;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown recipe");
}

struct GraphAlgebra {
  using Value = Graph;
  Graph empty(std::size_t p) const { return empty_graph(p); }
  Graph complete(std::size_t p) const { return complete_graph(p); }
  Graph complete_bipartite(std::size_t q, std::size_t r) const { return lequi::complete_bipartite(q, r); }
  Graph unite(const Graph& a, const Graph& b) const { return graph_union(a, b); }
  Graph join(const Graph& a, const Graph& b) const { return graph_join(a, b); }
  Graph complement(const Graph& a) const { return lequi::complement(a); }
  Graph cartesian(const Graph& a, const Graph& b) const { return cartesian_product(a, b); }
  Graph kronecker(const Graph& a, const Graph& b) const { return kronecker_product(a, b); }
  Graph kn_minus(std::size_t n, const Graph& a) const { return kn_minus_edges(n, a); }
};

struct Counts {
  std::size_t n;
  std::size_t m;
};

struct CountAlgebra {
  using Value = Counts;
  static std::size_t pairs(std::size_t n) { return n * (n == 0 ? 0 : n - 1) / 2; }
  Counts empty(std::size_t p) const { return {p, 0}; }
  Counts complete(std::size_t p) const { return {p, pairs(p)}; }
  Counts complete_bipartite(std::size_t q, std::size_t r) const { return {q + r, q * r}; }
  Counts unite(Counts a, Counts b) const { return {a.n + b.n, a.m + b.m}; }
  Counts join(Counts a, Counts b) const { return {a.n + b.n, a.m + b.m + a.n * b.n}; }
  Counts complement(Counts a) const { return {a.n, pairs(a.n) - a.m}; }
  Counts cartesian(Counts a, Counts b) const { return {a.n * b.n, a.n * b.m + b.n * a.m}; }
  Counts kronecker(Counts a, Counts b) const { return {a.n * b.n, 2 * a.m * b.m}; }
  Counts kn_minus(std::size_t n, Counts a) const { return {n, pairs(n) - a.m}; }
};

struct RuleAlgebra {
  using Value = Spectrum;
  MatrixKind kind;
  Spectrum leaf(const Graph& g) const { return spectrum(g, kind); }
  Spectrum empty(std::size_t p) const { return leaf(empty_graph(p)); }
  Spectrum complete(std::size_t p) const { return leaf(complete_graph(p)); }
  Spectrum complete_bipartite(std::size_t q, std::size_t r) const {
    return leaf(lequi::complete_bipartite(q, r));
  }
  Spectrum unite(const Spectrum& a, const Spectrum& b) const { return rule_union(a, b); }
  Spectrum join(const Spectrum& a, const Spectrum& b) const { return rule_join(a, b); }
  Spectrum complement(const Spectrum& a) const { return rule_complement(a); }
  Spectrum cartesian(const Spectrum& a, const Spectrum& b) const { return rule_cartesian(a, b); }
  Spectrum kronecker(const Spectrum& a, const Spectrum& b) const { return rule_kronecker(a, b); }
  Spectrum kn_minus(std::size_t n, const Spectrum& a) const { return rule_kn_minus(n, a); }
};

void require_p(const Recipe& recipe, std::size_t p) {
  if (p == 0) throw Error(ErrorCode::InvalidArgument, "p must be a positive integer");
  if (recipe.id == RecipeId::R23 && p < 2) {
    throw Error(ErrorCode::TooFewPairs, "a multi-join needs k >= 2");
  }
}

}  // namespace

// ---------------------------------------------------------------------------

std::span<const RecipeId> all_recipes() { return kAllRecipes; }

std::string_view recipe_slug(RecipeId id) { return traits(id).slug; }

std::string_view recipe_expression(RecipeId id) { return traits(id).expression; }

std::optional<RecipeId> parse_recipe_id(std::string_view text) {
  for (const Traits& t : kTraits) {
    const auto colon = t.slug.find(':');
    if (text == t.slug || text == t.slug.substr(0, colon) || text == t.slug.substr(colon + 1)) {
      return t.id;
    }
  }
  return std::nullopt;
}

MatrixKind Recipe::energy_kind() const { return traits(id).kind; }

bool Precondition::threshold_ok() const {
  return strict ? threshold < bound - kBoundaryTolerance : bound >= threshold - kBoundaryTolerance;
}

std::string Precondition::failing_clause() const {
  std::ostringstream out;
  if (!connectivity_ok) {
    out << connectivity_clause << " fails";
  } else if (p < p_floor) {
    out << "p = " << p << " below the floor " << p_floor;
  } else if (!threshold_ok()) {
    out.precision(10);
    if (strict) {
      out << "threshold " << threshold << " is not below bound " << bound;
    } else {
      out << "bound " << bound << " is below threshold " << threshold;
    }
  }
  return out.str();
}

Precondition check_precondition(const Recipe& recipe, const Graph& g1, const Graph& g2,
                                std::size_t p) {
  return evaluate(summarize(recipe, g1, g2), p);
}

std::size_t minimal_p(const Recipe& recipe, const Graph& g1, const Graph& g2) {
  const InputSummary s = summarize(recipe, g1, g2);
  const Precondition first = evaluate(s, 1);
  if (!first.connectivity_ok) {
    std::ostringstream msg;
    msg << first.connectivity_clause << " fails (limiting value " << s.clause_value << ")";
    throw Error(ErrorCode::ConditionUnsatisfiable, msg.str());
  }

  std::size_t p = first.p_floor;
  if (s.traits->threshold == Threshold::Padding) {
    if (first.bound <= kBoundaryTolerance) {
      std::ostringstream msg;
      msg << "bound " << first.bound << " is not positive";
      throw Error(ErrorCode::ConditionUnsatisfiable, msg.str());
    }
    // 2m/(p+n) < bound once p + n > 2m/bound; scan up to just past that.
    const double needed = 2.0 * static_cast<double>(s.m) / (first.bound - kBoundaryTolerance);
    const std::size_t cap =
        std::max(first.p_floor, static_cast<std::size_t>(std::ceil(needed)) + 2);
    p = 1;
    while (p <= cap && !evaluate(s, p).satisfied) ++p;
    if (p > cap) {
      throw Error(ErrorCode::ConditionUnsatisfiable, "no p up to " + std::to_string(cap));
    }
  } else if (!evaluate(s, p).satisfied) {
    throw Error(ErrorCode::ConditionUnsatisfiable, evaluate(s, p).failing_clause());
  }
  assert(evaluate(s, p + 1).satisfied);
  return p;
}

Graph build_recipe_graph(const Recipe& recipe, const Graph& g, std::size_t p) {
  require_p(recipe, p);
  return compose(GraphAlgebra{}, recipe, g, g.order(), p);
}

std::pair<std::size_t, std::size_t> recipe_counts(const Recipe& recipe, std::size_t n,
                                                  std::size_t m, std::size_t p) {
  require_p(recipe, p);
  const Counts c = compose(CountAlgebra{}, recipe, Counts{n, m}, n, p);
  return {c.n, c.m};
}

Spectrum recipe_rule_spectrum(const Recipe& recipe, const Graph& g, std::size_t p) {
  require_p(recipe, p);
  const RuleAlgebra algebra{recipe.energy_kind()};
  return compose(algebra, recipe, algebra.leaf(g), g.order(), p);
}

std::pair<Graph, Graph> construct(const Recipe& recipe, const Graph& g1, const Graph& g2,
                                  std::size_t p) {
  require_p(recipe, p);
  const Precondition pre = check_precondition(recipe, g1, g2, p);
  if (!pre.satisfied) {
    throw Error(ErrorCode::PreconditionFailed,
                std::string(recipe.slug()) + " at p = " + std::to_string(p) + ": " +
                    pre.failing_clause());
  }
  return {build_recipe_graph(recipe, g1, p), build_recipe_graph(recipe, g2, p)};
}

ClosedForm closed_form_energy(RecipeId recipe, std::size_t n_in, std::size_t m_in, std::size_t p_in,
                              std::span<const double> input_energies) {
  const double n = static_cast<double>(n_in);
  const double m = static_cast<double>(m_in);
  const double p = static_cast<double>(p_in);
  ClosedForm cf;
  cf.recipe = recipe;
  switch (recipe) {
    case RecipeId::R1: {
      const double avg = 2.0 * m / (p + n);
      cf.formula_value = 2.0 * m + (p - n - 2.0) * avg;
      // Summing |mu_i - avg| over n-1 positive terms and p+1 zeros gives +2.
      cf.variant_values.push_back(2.0 * m + (p - n + 2.0) * avg);
      break;
    }
    case RecipeId::R3: {
      const double avg = p + n - 1.0 - 2.0 * m / (p + n);
      cf.formula_value = (n - p) * avg + (p + n) * (p - n + 1.0);
      // The stated sum drops the 2m contributed by sum(mu_i).
      cf.variant_values.push_back(cf.formula_value + 2.0 * m);
      break;
    }
    case RecipeId::R4: {
      const double avg = 2.0 * m / (p + n) + 2.0 * p * n / (p + n);
      cf.formula_value = (p - n) * avg + 2.0 * (m + n);
      break;
    }
    case RecipeId::R18: {
      const double d = 2.0 * m / n;
      cf.formula_value = 2.0 * m * (p - 2.0) + n * (p - 2.0) * (1.0 - d) + p * n;
      // The stated form takes |1 - 2m/n| as 1 - 2m/n for the zero eigenvalue.
      cf.variant_values.push_back(2.0 * n * (p - 1.0) +
                                  (p - 1.0) * (std::abs(1.0 - d) - (1.0 - d)));
      break;
    }
    case RecipeId::R22: {
      if (input_energies.size() != 2) {
        throw Error(ErrorCode::InvalidArgument, "join-pairs closed form needs two input energies");
      }
      cf.formula_value = 2.0 * n + input_energies[0] + input_energies[1] - 4.0 * m / n;
      break;
    }
    case RecipeId::R23: {
      if (input_energies.empty()) {
        throw Error(ErrorCode::InvalidArgument, "multi-join closed form needs input energies");
      }
      const double k = static_cast<double>(input_energies.size());
      double sum = 0.0;
      for (double e : input_energies) sum += e;
      cf.formula_value = sum + 2.0 * n * (k - 1.0) - (2.0 * k - 2.0) * (2.0 * m / n);
      break;
    }
    default:
      throw Error(ErrorCode::NoClosedForm,
                  std::string(recipe_slug(recipe)) + " has no stated closed form");
  }
  return cf;
}

namespace {

void require_equienergetic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) {
    throw Error(ErrorCode::MismatchedPair, "joined graphs must share (n, m)");
  }
  if (!energies_equal(laplacian_energy(a), laplacian_energy(b), a.order())) {
    throw Error(ErrorCode::NotEquienergeticInput, "input pair is not L-equienergetic");
  }
}

}  // namespace

std::pair<Graph, Graph> join_pairs(const Graph& g1, const Graph& g2, const Graph& g1p,
                                   const Graph& g2p) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) {
    throw Error(ErrorCode::MismatchedPair, "joined graphs must share (n, m)");
  }
  require_equienergetic(g1, g1p);
  require_equienergetic(g2, g2p);
  return {graph_join(g1, g2), graph_join(g1p, g2p)};
}

std::pair<Graph, Graph> multi_join(std::span<const std::pair<Graph, Graph>> pairs) {
  if (pairs.size() < 2) throw Error(ErrorCode::TooFewPairs, "a multi-join needs k >= 2 pairs");
  const Graph& first = pairs.front().first;
  for (const auto& [a, b] : pairs) {
    if (a.order() != first.order() || a.size() != first.size()) {
      throw Error(ErrorCode::MismatchedPair, "joined graphs must share (n, m)");
    }
    require_equienergetic(a, b);
  }
  Graph left = pairs[0].first;
  Graph right = pairs[0].second;
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    left = graph_join(left, pairs[i].first);
    right = graph_join(right, pairs[i].second);
  }
  return {std::move(left), std::move(right)};
}

std::vector<SequenceEntry> sequence(const Recipe& recipe, const Graph& g1, const Graph& g2,
                                    std::size_t p_from, std::size_t count) {
  std::vector<SequenceEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t p = p_from + i;
    auto [h1, h2] = construct(recipe, g1, g2, p);
    out.push_back({p, std::move(h1), std::move(h2)});
  }
  return out;
}

}  // namespace lequi
