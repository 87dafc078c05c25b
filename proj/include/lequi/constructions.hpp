#pragma once

#include "lequi/graph.hpp"
#include "lequi/spectra.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lequi {

/// The equienergetic construction families. Each one pads, joins,
/// complements or multiplies an input graph G with a parameter p; applying
/// the same expression to two inputs with equal order and size is claimed
/// to give graphs of equal Laplacian (or signless Laplacian) energy.
enum class RecipeId {
  R1 = 1,  // G u Kbar_p
  R2,      // G u Kbar_p, signless
  R3,      // Gbar v K_p
  R4,      // G v Kbar_p
  R5,      // G v complement(K_{p,p})
  R6,      // Gbar u K_p
  R7,      // (K_N - E(G)) v K_p
  R8,      // (K_N - E(G)) u K_p
  R9,      // (G u Kbar_p) x K_p
  R10,     // (G u Kbar_p) x K_p, signless
  R11,     // (G u Kbar_p) x K_{p,p}, signless
  R12,     // ((K_N - E(G)) u K_p) x K_p
  R13,     // (Gbar u K_p) x K_p
  R14,     // (Gbar v K_p) x K_p
  R15,     // ((K_N - E(G)) v K_p) x K_p
  R16,     // (G v Kbar_p) x K_p
  R17,     // (G v K_p) u Kbar_p
  R18,     // G x K_p
  R19,     // (G v Kbar_p) (x) K_p
  R20,     // (G u Kbar_p) (x) K_p
  R21,     // (G u Kbar_p) (x) K_p, signless
  R22,     // G v G' over two equienergetic pairs
  R23,     // k-fold join over equienergetic pairs
};

inline constexpr int kRecipeCount = 23;

std::span<const RecipeId> all_recipes();
/// Stable identifier such as "R9:cart-union-empty".
std::string_view recipe_slug(RecipeId id);
/// Human-readable expression such as "(G u Kbar_p) x K_p".
std::string_view recipe_expression(RecipeId id);
/// Accepts the full slug, the bare "R9" prefix, or the suffix alone.
std::optional<RecipeId> parse_recipe_id(std::string_view text);

struct Recipe {
  RecipeId id = RecipeId::R1;
  /// Order N of the ambient complete graph for the K_N - E(G) families;
  /// defaults to the order of G.
  std::optional<std::size_t> ambient_n;
  /// R5 only: build G v K_{p,p} instead of G v complement(K_{p,p}).
  bool assume_bar_typo = false;

  MatrixKind energy_kind() const;
  std::string_view slug() const { return recipe_slug(id); }
};

/// Margin applied to threshold comparisons so that exact ties computed
/// through the eigensolver are treated as ties, not as passes.
inline constexpr double kBoundaryTolerance = 1e-9;

struct Precondition {
  std::size_t p = 0;
  double threshold = 0.0;  // 2m/(p+n) for most recipes
  double bound = 0.0;      // smallest spectral gap term over both inputs
  std::size_t p_floor = 1;
  bool satisfied = false;
  bool connectivity_ok = true;
  int gap_offset = 0;
  bool strict = true;  // threshold < bound, otherwise bound >= threshold
  std::string connectivity_clause;  // e.g. "algebraic connectivity > 1"

  bool threshold_ok() const;
  /// Empty when satisfied, otherwise the first clause that fails.
  std::string failing_clause() const;
};

/// Evaluates the recipe's hypotheses for the pair at parameter p.
///
/// Throws MismatchedPair when orders or sizes differ, Disconnected when an
/// input is disconnected (R22/R23 excepted), SubgraphTooLarge when the
/// ambient order is below the input order.
///
/// For R22/R23 the pair itself must be L-equienergetic: threshold is
/// |LE(g1) - LE(g2)| and bound is the energy tolerance.
Precondition check_precondition(const Recipe& recipe, const Graph& g1, const Graph& g2,
                                std::size_t p);

/// Smallest p >= 1 satisfying check_precondition. Throws
/// ConditionUnsatisfiable when no p can work.
std::size_t minimal_p(const Recipe& recipe, const Graph& g1, const Graph& g2);

/// Builds the recipe's graph for one input.
Graph build_recipe_graph(const Recipe& recipe, const Graph& g, std::size_t p);

/// Order and size of build_recipe_graph() from the composition identities
/// alone, without building anything.
std::pair<std::size_t, std::size_t> recipe_counts(const Recipe& recipe, std::size_t n,
                                                  std::size_t m, std::size_t p);

/// Spectrum of build_recipe_graph() predicted by chaining the composition
/// rules over eigensolved leaves (G, K_p, Kbar_p, K_{p,p}).
Spectrum recipe_rule_spectrum(const Recipe& recipe, const Graph& g, std::size_t p);

/// Throws PreconditionFailed naming the failing clause.
///
/// R22 returns (g1 v g1, g2 v g2) and R23 the p-fold joins of g1 and of g2,
/// i.e. join_pairs / multi_join applied to copies of one equienergetic pair.
std::pair<Graph, Graph> construct(const Recipe& recipe, const Graph& g1, const Graph& g2,
                                  std::size_t p);

struct ClosedForm {
  RecipeId recipe = RecipeId::R1;
  double formula_value = 0.0;
  /// Re-derived alternatives for stated forms that disagree with the
  /// spectrum they are derived from.
  std::vector<double> variant_values;
};

/// The stated closed-form energy of R1, R3, R4, R18, R22 and R23 at
/// (n, m, p), where n and m describe one input graph. R22 needs the two
/// input energies; R23 takes one energy per joined graph. Throws
/// NoClosedForm for other recipes.
ClosedForm closed_form_energy(RecipeId recipe, std::size_t n, std::size_t m, std::size_t p,
                              std::span<const double> input_energies = {});

/// Returns (g1 v g2, g1p v g2p). All four graphs must share (n, m) and
/// LE(g1) = LE(g1p), LE(g2) = LE(g2p) within kEnergyTolerancePerVertex * n.
std::pair<Graph, Graph> join_pairs(const Graph& g1, const Graph& g2, const Graph& g1p,
                                   const Graph& g2p);

/// Left fold of join over the first and over the second members.
std::pair<Graph, Graph> multi_join(std::span<const std::pair<Graph, Graph>> pairs);

struct SequenceEntry {
  std::size_t p;
  Graph h1;
  Graph h2;
};

/// count consecutive constructions starting at p_from.
std::vector<SequenceEntry> sequence(const Recipe& recipe, const Graph& g1, const Graph& g2,
                                    std::size_t p_from, std::size_t count);

}  // namespace lequi
