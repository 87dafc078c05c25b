#include "lequi/cli.hpp"

#include "lequi/constructions.hpp"
#include "lequi/error.hpp"
#include "lequi/graph.hpp"
#include "lequi/report_json.hpp"
#include "lequi/spectra.hpp"
#include "lequi/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace lequi {

std::string format_number(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  double rounded = std::round(value * scale) / scale;
  if (rounded == 0.0) rounded = 0.0;
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << rounded;
  std::string text = s.str();
  if (text.find('.') != std::string::npos) {
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  }
  return text;
}

namespace {

struct PairArgs {
  std::string recipe;
  std::string g1;
  std::string g2;
  std::size_t p = 0;
  bool min_p = false;
  std::size_t count = 1;
  std::size_t ambient = 0;
  bool bar_typo = false;
};

void add_pair_options(CLI::App* cmd, PairArgs& a, bool with_p) {
  cmd->add_option("--recipe", a.recipe, "Recipe slug, e.g. R9 or cart-union-empty")->required();
  cmd->add_option("--g1", a.g1, "Edge-list file of the first input")->required();
  cmd->add_option("--g2", a.g2, "Edge-list file of the second input")->required();
  if (with_p) {
    auto* p = cmd->add_option("--p", a.p, "Construction parameter");
    auto* m = cmd->add_flag("--min-p", a.min_p, "Use the smallest admissible p");
    p->excludes(m);
    cmd->add_option("--count", a.count, "Number of consecutive p values")->check(CLI::PositiveNumber);
  }
  cmd->add_option("--ambient", a.ambient, "Order N of K_N for the K_N - E(G) recipes");
  cmd->add_flag("--assume-bar-typo", a.bar_typo, "R5: join with K_{p,p} instead of its complement");
}

Recipe make_recipe(const PairArgs& a) {
  const auto id = parse_recipe_id(a.recipe);
  if (!id) throw Error(ErrorCode::InvalidArgument, "unknown recipe '" + a.recipe + "'");
  Recipe r;
  r.id = *id;
  if (a.ambient != 0) r.ambient_n = a.ambient;
  r.assume_bar_typo = a.bar_typo;
  return r;
}

std::size_t resolve_p(const PairArgs& a, const Recipe& r, const Graph& g1, const Graph& g2) {
  if (a.min_p || a.p == 0) return minimal_p(r, g1, g2);
  return a.p;
}

void print_report(const VerificationReport& r, std::ostream& out) {
  if (!r.recipe.empty()) out << "recipe " << r.recipe << "  p = " << r.p << '\n';
  out << "n = " << r.n << "  m = " << r.m << '\n';
  out << "LE(H1) = " << format_number(r.le_h1, 9) << "  LE(H2) = " << format_number(r.le_h2, 9)
      << "  |diff| = " << std::scientific << std::setprecision(3) << r.le_diff << std::defaultfloat
      << '\n';
  if (r.le_plus_h1) {
    out << "LE+(H1) = " << format_number(*r.le_plus_h1, 9)
        << "  LE+(H2) = " << format_number(*r.le_plus_h2, 9) << "  |diff| = " << std::scientific
        << std::setprecision(3) << *r.q_diff << std::defaultfloat << '\n';
  }
  out << "L-cospectral: " << (r.cospectral_l ? "yes" : "no");
  if (r.cospectral_q) out << "  Q-cospectral: " << (*r.cospectral_q ? "yes" : "no");
  out << '\n';
  if (r.rule_deviation) {
    out << "rule deviation = " << std::scientific << std::setprecision(3) << *r.rule_deviation
        << std::defaultfloat << '\n';
  }
  if (r.closed_form) {
    out << "closed form = " << format_number(r.closed_form->formula_value, 9);
    for (double v : r.closed_form->variant_values) out << "  variant = " << format_number(v, 9);
    out << "  match: " << to_string(r.closed_form->match) << '\n';
  }
  for (const auto& d : r.discrepancies) {
    out << "discrepancy [" << to_string(d.source) << "] " << d.instance
        << "  deviation = " << format_number(d.deviation, 9) << '\n';
  }
  out << to_string(r.kind) << "-energy equality "
      << (r.equality_holds ? "holds" : "FAILS") << '\n';
}

void emit_reports(const std::vector<VerificationReport>& reports, bool json, std::ostream& out) {
  if (json) {
    if (reports.size() == 1) {
      out << to_json(reports.front()).dump(2) << '\n';
    } else {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
    }
    return;
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out << '\n';
    print_report(reports[i], out);
  }
}

bool all_hold(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.equality_holds) return false;
  return true;
}

std::pair<Graph, Graph> read_pair_spec(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "--pair expects FILE1,FILE2, got '" + spec + "'");
  }
  return {read_edge_list(spec.substr(0, comma)), read_edge_list(spec.substr(comma + 1))};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplacian energy toolkit: spectra, equienergetic constructions and checks", "lequi"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  VerifyOptions vopts;
  auto add_tolerances = [&vopts](CLI::App* cmd) {
    cmd->add_option("--eq-tol", vopts.equality_tol_per_vertex, "Energy equality tolerance per vertex");
    cmd->add_option("--cospectral-tol", vopts.cospectral_tol, "Eigenvalue matching tolerance");
    cmd->add_option("--discrepancy-tol", vopts.discrepancy_threshold,
                    "Smallest mismatch recorded as a discrepancy");
  };

  // spectrum
  std::string spectrum_file;
  bool signless = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Print the L (or Q) spectrum of a graph");
  spectrum_cmd->add_option("file", spectrum_file, "Edge-list file")->required();
  spectrum_cmd->add_flag("--signless", signless, "Signless Laplacian instead of Laplacian");

  // energy
  std::string energy_file;
  auto* energy_cmd = app.add_subcommand("energy", "Print LE, LE+, average degree and a(G)");
  energy_cmd->add_option("file", energy_file, "Edge-list file")->required();

  // compare
  std::string cmp1, cmp2;
  bool cmp_signless = false;
  auto* compare_cmd = app.add_subcommand("compare", "Compare energies and spectra of two graphs");
  compare_cmd->add_option("h1", cmp1, "Edge-list file")->required();
  compare_cmd->add_option("h2", cmp2, "Edge-list file")->required();
  compare_cmd->add_flag("--signless", cmp_signless, "Claim is about LE+ rather than LE");
  add_tolerances(compare_cmd);

  // construct
  PairArgs cons;
  std::string out_dir;
  auto* construct_cmd = app.add_subcommand("construct", "Build the two graphs of a recipe");
  add_pair_options(construct_cmd, cons, true);
  construct_cmd->add_option("--out-dir", out_dir, "Write h1_p<P>.txt and h2_p<P>.txt here");

  // verify
  PairArgs ver;
  std::string g1p, g2p;
  std::vector<std::string> pairs;
  auto* verify_cmd = app.add_subcommand("verify", "Construct and verify a recipe");
  verify_cmd->add_option("--recipe", ver.recipe, "Recipe slug")->required();
  verify_cmd->add_option("--g1", ver.g1, "First input");
  verify_cmd->add_option("--g2", ver.g2, "Second input");
  auto* p_opt = verify_cmd->add_option("--p", ver.p, "Construction parameter");
  auto* minp_opt = verify_cmd->add_flag("--min-p", ver.min_p, "Use the smallest admissible p");
  p_opt->excludes(minp_opt);
  verify_cmd->add_option("--count", ver.count, "Number of consecutive p values")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--ambient", ver.ambient, "Order N of K_N");
  verify_cmd->add_flag("--assume-bar-typo", ver.bar_typo, "R5: join with K_{p,p}");
  verify_cmd->add_option("--g1p", g1p, "R22: partner of g1 in the second pair");
  verify_cmd->add_option("--g2p", g2p, "R22: partner of g2 in the second pair");
  verify_cmd->add_option("--pair", pairs, "R23: FILE1,FILE2 (repeatable)");
  add_tolerances(verify_cmd);

  // scan
  PairArgs scan;
  std::size_t p_from = 1, p_to = 10;
  auto* scan_cmd = app.add_subcommand("scan", "Precondition and energy gap over a range of p");
  add_pair_options(scan_cmd, scan, false);
  scan_cmd->add_option("--p-from", p_from, "First p")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--p-to", p_to, "Last p")->check(CLI::PositiveNumber);

  // counterexample
  std::vector<std::size_t> ce_p;
  auto* ce_cmd = app.add_subcommand("counterexample", "Two trees whose T x K_p energies differ");
  ce_cmd->add_option("--p", ce_p, "Values of p (default 4 6 7)")->check(CLI::Range(2, 64));

  // lemmas
  LemmaAuditOptions audit;
  auto* lemmas_cmd = app.add_subcommand("lemmas", "Audit the composition rules on random graphs");
  lemmas_cmd->add_option("--trials", audit.trials, "Random pairs");
  lemmas_cmd->add_option("--max-n", audit.max_n, "Largest input order")->check(CLI::Range(2, 32));
  lemmas_cmd->add_option("--seed", audit.seed, "RNG seed");
  lemmas_cmd->add_option("--discrepancy-tol", audit.discrepancy_threshold, "Reporting threshold");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (spectrum_cmd->parsed()) {
      const Graph g = read_edge_list(spectrum_file);
      const Spectrum s = spectrum(g, signless ? MatrixKind::SignlessLaplacian : MatrixKind::Laplacian);
      if (json) {
        out << Json{{"kind", std::string(to_string(s.kind))}, {"values", s.values}}.dump(2) << '\n';
      } else {
        for (std::size_t i = 0; i < s.values.size(); ++i) {
          out << (i ? " " : "") << format_number(s.values[i]);
        }
        out << '\n';
      }
      return kExitOk;
    }

    if (energy_cmd->parsed()) {
      const Graph g = read_edge_list(energy_file);
      const EnergyReport e = energy_report(g);
      if (json) {
        out << Json{{"n", g.order()},
                    {"m", g.size()},
                    {"le", e.le},
                    {"le_plus", e.le_plus},
                    {"avg_degree", e.avg_degree},
                    {"algebraic_connectivity", e.algebraic_connectivity}}
                   .dump(2)
            << '\n';
      } else {
        out << "n = " << g.order() << "  m = " << g.size() << '\n'
            << "LE = " << format_number(e.le) << '\n'
            << "LE+ = " << format_number(e.le_plus) << '\n'
            << "average degree = " << format_number(e.avg_degree) << '\n'
            << "algebraic connectivity = " << format_number(e.algebraic_connectivity) << '\n';
      }
      return kExitOk;
    }

    if (compare_cmd->parsed()) {
      const auto r = verify_pair(read_edge_list(cmp1), read_edge_list(cmp2),
                                 cmp_signless ? MatrixKind::SignlessLaplacian : MatrixKind::Laplacian,
                                 vopts);
      emit_reports({r}, json, out);
      return r.equality_holds ? kExitOk : kExitClaimFailed;
    }

    if (construct_cmd->parsed()) {
      const Recipe recipe = make_recipe(cons);
      const Graph g1 = read_edge_list(cons.g1);
      const Graph g2 = read_edge_list(cons.g2);
      const std::size_t p0 = resolve_p(cons, recipe, g1, g2);
      Json arr = Json::array();
      for (const auto& entry : sequence(recipe, g1, g2, p0, cons.count)) {
        const std::string e1 = to_edge_list(entry.h1);
        const std::string e2 = to_edge_list(entry.h2);
        if (!out_dir.empty()) {
          const std::string suffix = "_p" + std::to_string(entry.p) + ".txt";
          write_file(out_dir + "/h1" + suffix, e1);
          write_file(out_dir + "/h2" + suffix, e2);
        }
        if (json) {
          arr.push_back(Json{{"recipe", std::string(recipe.slug())},
                             {"p", entry.p},
                             {"n", entry.h1.order()},
                             {"m", entry.h1.size()}});
        } else if (out_dir.empty()) {
          out << "# " << recipe.slug() << " p = " << entry.p << " H1\n" << e1;
          out << "# " << recipe.slug() << " p = " << entry.p << " H2\n" << e2;
        } else {
          out << recipe.slug() << " p = " << entry.p << "  n = " << entry.h1.order()
              << "  m = " << entry.h1.size() << '\n';
        }
      }
      if (json) out << arr.dump(2) << '\n';
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const Recipe recipe = make_recipe(ver);
      std::vector<VerificationReport> reports;

      if (recipe.id == RecipeId::R22 && !g1p.empty()) {
        if (ver.g1.empty() || ver.g2.empty() || g2p.empty()) {
          throw Error(ErrorCode::InvalidArgument, "R22 with --g1p needs --g1, --g2 and --g2p");
        }
        const auto [h1, h2] = join_pairs(read_edge_list(ver.g1), read_edge_list(ver.g2),
                                         read_edge_list(g1p), read_edge_list(g2p));
        auto r = verify_pair(h1, h2, MatrixKind::Laplacian, vopts);
        r.recipe = std::string(recipe.slug());
        reports.push_back(std::move(r));
      } else if (recipe.id == RecipeId::R23 && !pairs.empty()) {
        std::vector<std::pair<Graph, Graph>> loaded;
        for (const auto& spec : pairs) loaded.push_back(read_pair_spec(spec));
        const auto [h1, h2] = multi_join(loaded);
        auto r = verify_pair(h1, h2, MatrixKind::Laplacian, vopts);
        r.recipe = std::string(recipe.slug());
        r.p = loaded.size();
        reports.push_back(std::move(r));
      } else {
        if (ver.g1.empty() || ver.g2.empty()) {
          throw Error(ErrorCode::InvalidArgument, "verify needs --g1 and --g2");
        }
        const Graph g1 = read_edge_list(ver.g1);
        const Graph g2 = read_edge_list(ver.g2);
        const std::size_t p0 = resolve_p(ver, recipe, g1, g2);
        for (std::size_t k = 0; k < ver.count; ++k) {
          reports.push_back(verify_recipe(recipe, g1, g2, p0 + k, vopts));
        }
      }
      emit_reports(reports, json, out);
      return all_hold(reports) ? kExitOk : kExitClaimFailed;
    }

    if (scan_cmd->parsed()) {
      if (p_to < p_from) throw Error(ErrorCode::InvalidArgument, "--p-to is below --p-from");
      const Recipe recipe = make_recipe(scan);
      const Graph g1 = read_edge_list(scan.g1);
      const Graph g2 = read_edge_list(scan.g2);
      Json arr = Json::array();
      for (std::size_t p = p_from; p <= p_to; ++p) {
        const Precondition pc = check_precondition(recipe, g1, g2, p);
        Json row{{"p", p},
                 {"threshold", pc.threshold},
                 {"bound", pc.bound},
                 {"satisfied", pc.satisfied}};
        double le1 = 0, le2 = 0;
        const bool buildable = recipe.id != RecipeId::R23 || p >= 2;
        if (buildable) {
          const Graph h1 = build_recipe_graph(recipe, g1, p);
          const Graph h2 = build_recipe_graph(recipe, g2, p);
          const Spectrum s1 = spectrum(h1, recipe.energy_kind());
          const Spectrum s2 = spectrum(h2, recipe.energy_kind());
          le1 = spectral_energy(s1);
          le2 = spectral_energy(s2);
          row["le1"] = le1;
          row["le2"] = le2;
          row["diff"] = std::abs(le1 - le2);
        }
        if (json) {
          arr.push_back(std::move(row));
        } else {
          out << "p = " << p << "  threshold = " << format_number(pc.threshold)
              << "  bound = " << format_number(pc.bound)
              << (pc.satisfied ? "  [ok]" : "  [" + pc.failing_clause() + "]");
          if (buildable) {
            out << "  E1 = " << format_number(le1, 9) << "  E2 = " << format_number(le2, 9)
                << "  |diff| = " << std::scientific << std::setprecision(3) << std::abs(le1 - le2)
                << std::defaultfloat;
          }
          out << '\n';
        }
      }
      if (json) out << arr.dump(2) << '\n';
      return kExitOk;
    }

    if (ce_cmd->parsed()) {
      bool ok = true;
      Json arr = Json::array();
      std::vector<std::size_t> ps = ce_p;
      if (ps.empty()) {
        for (const auto& ref : kCounterexampleReference) ps.push_back(ref.p);
      }
      for (std::size_t p : ps) {
        const auto [e1, e2] = counterexample_energies(p);
        std::optional<bool> matches;
        for (const auto& ref : kCounterexampleReference) {
          if (ref.p == p) {
            matches = std::abs(e1 - ref.le1) <= kCounterexampleTolerance &&
                      std::abs(e2 - ref.le2) <= kCounterexampleTolerance;
          }
        }
        if (matches && !*matches) ok = false;
        if (json) {
          arr.push_back(Json{{"p", p},
                             {"le1", e1},
                             {"le2", e2},
                             {"diff", std::abs(e1 - e2)},
                             {"matches_reference", matches ? Json(*matches) : Json(nullptr)}});
        } else {
          out << "p = " << p << "  LE(T1 x K_p) = " << format_number(e1)
              << "  LE(T2 x K_p) = " << format_number(e2)
              << "  |diff| = " << format_number(std::abs(e1 - e2));
          if (matches) out << (*matches ? "  [matches reference]" : "  [OFF REFERENCE]");
          out << '\n';
        }
      }
      if (json) out << arr.dump(2) << '\n';
      return ok ? kExitOk : kExitClaimFailed;
    }

    if (lemmas_cmd->parsed()) {
      const LemmaAuditReport report = audit_lemmas(audit);
      if (json) {
        out << to_json(report).dump(2) << '\n';
      } else {
        for (const auto& s : report.rules) {
          out << std::left << std::setw(14) << s.rule << std::right << " instances = " << s.instances
              << "  max deviation = " << std::scientific << std::setprecision(3) << s.max_deviation
              << std::defaultfloat << "  discrepancies = " << s.discrepancies << '\n';
        }
        if (!report.discrepancies.empty()) {
          const auto& d = report.discrepancies.front();
          out << "first discrepancy: " << d.instance << "  deviation = " << format_number(d.deviation)
              << '\n';
        }
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lequi
