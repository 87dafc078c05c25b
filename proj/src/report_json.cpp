#include "lequi/report_json.hpp"

namespace lequi {

Json to_json(const DiscrepancyRecord& d) {
  return Json{{"source", std::string(to_string(d.source))},
              {"instance", d.instance},
              {"stated_value", d.stated_value},
              {"oracle_value", d.oracle_value},
              {"deviation", d.deviation}};
}

namespace {

template <class T>
Json optional_or_null(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const VerificationReport& r) {
  Json j;
  j["recipe"] = r.recipe.empty() ? Json(nullptr) : Json(r.recipe);
  j["p"] = r.p;
  j["n"] = r.n;
  j["m"] = r.m;
  j["kind"] = std::string(to_string(r.kind));
  j["le1"] = r.le_h1;
  j["le2"] = r.le_h2;
  j["diff"] = r.le_diff;
  j["le_plus1"] = optional_or_null(r.le_plus_h1);
  j["le_plus2"] = optional_or_null(r.le_plus_h2);
  j["q_diff"] = optional_or_null(r.q_diff);
  j["cospectral_l"] = r.cospectral_l;
  j["cospectral_q"] = optional_or_null(r.cospectral_q);
  j["rule_dev"] = optional_or_null(r.rule_deviation);
  if (r.closed_form) {
    j["closed_form"] = Json{{"formula_value", r.closed_form->formula_value},
                            {"variant_values", r.closed_form->variant_values},
                            {"match", std::string(to_string(r.closed_form->match))}};
  } else {
    j["closed_form"] = nullptr;
  }
  Json ds = Json::array();
  for (const auto& d : r.discrepancies) ds.push_back(to_json(d));
  j["discrepancies"] = std::move(ds);
  j["equality_holds"] = r.equality_holds;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

Json to_json(const LemmaAuditReport& r) {
  Json rules = Json::array();
  for (const auto& s : r.rules) {
    rules.push_back(Json{{"rule", s.rule},
                         {"instances", s.instances},
                         {"max_deviation", s.max_deviation},
                         {"discrepancies", s.discrepancies}});
  }
  Json ds = Json::array();
  for (const auto& d : r.discrepancies) ds.push_back(to_json(d));
  return Json{{"rules", std::move(rules)}, {"discrepancies", std::move(ds)}};
}

}  // namespace lequi
