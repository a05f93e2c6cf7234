#include "coreseq/json_io.hpp"

namespace coreseq {

namespace {

Json sequents(const std::vector<Sequent>& xs) {
  Json out = Json::array();
  for (const auto& s : xs) out.push_back(print_sequent(s));
  return out;
}

Json query(const Lemma1Query& q) {
  Json j{{"sequent", print_sequent(q.sequent)}, {"status", q.provable ? "provable" : "unprovable"}};
  if (q.provable) j["min_height"] = q.min_height;
  return j;
}

}  // namespace

std::string version_string() { return std::string("coreseq ") + CORESEQ_VERSION; }

Json to_json(const SearchStats& s) {
  return Json{{"goals_expanded", s.goals_expanded},   {"distinct_goals", s.distinct_goals},
              {"max_weight_seen", s.max_weight_seen}, {"mode", to_string(s.mode)},
              {"rule_instances", s.rule_instances},   {"pruned_premises", s.pruned_premises}};
}

Json to_json(const DecisionResult& r) {
  Json j{{"status", r.provable() ? "provable" : "unprovable"}};
  if (r.provable()) {
    j["min_height"] = r.min_height;
    j["derivation"] = to_json(*r.derivation);
  }
  j["stats"] = to_json(r.stats);
  return j;
}

Json to_json(const TreeViolation& v) {
  return Json{{"path", v.path},
              {"location", v.location()},
              {"clause", to_string(v.violation.clause)},
              {"message", v.violation.message}};
}

Json to_json(const KripkeModel& m) {
  Json worlds = Json::array();
  for (int w = 0; w < m.size(); ++w) {
    Json above = Json::array();
    for (int v = 0; v < m.size(); ++v)
      if (m.leq(w, v) && v != w) above.push_back(v);
    worlds.push_back(Json{{"world", w}, {"atoms", m.atoms_at(w)}, {"successors", above}});
  }
  return Json{{"worlds", worlds}};
}

Json to_json(const CrossCheckReport& r) {
  return Json{{"universe", r.universe},
              {"weight_cap", r.weight_cap},
              {"mode", to_string(r.mode)},
              {"sequents", r.sequents},
              {"core_provable", r.core_provable},
              {"int_provable", r.int_provable},
              {"theorem_candidates", r.theorem_candidates},
              {"divergence_count", r.divergences.size()},
              {"violation_count", r.violations.size()},
              {"theorem_disagreements", r.theorem_mismatches.size()},
              {"divergences", sequents(r.divergences)},
              {"violations", sequents(r.violations)},
              {"theorem_mismatches", sequents(r.theorem_mismatches)}};
}

Json to_json(const AdmissibilityVerdict& v) {
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) {
    Json t{{"sequent", print_sequent(w.transformed)},
           {"status", w.transformed_provable ? "provable" : "unprovable"}};
    if (w.transformed_provable) t["min_height"] = w.transformed_height;
    witnesses.push_back(Json{{"premise", print_sequent(w.premise)},
                             {"premise_min_height", w.premise_height},
                             {"transformed", std::move(t)},
                             {"invocation", w.invocation}});
  }
  return Json{{"rule", v.rule},
              {"universe", v.universe},
              {"weight_cap", v.weight_cap},
              {"mode", to_string(v.mode)},
              {"status", to_string(v.status)},
              {"bound_note", "verdict covers only the enumerated family"},
              {"family_size", v.family_size},
              {"premises_tested", v.premises_tested},
              {"counterexamples", v.counterexamples},
              {"height_increases", v.height_increases},
              {"witnesses", std::move(witnesses)}};
}

Json to_json(const Lemma1Report& r) {
  return Json{{"delta", r.delta.text()},
              {"top", r.top.text()},
              {"conjunction_introduce", query(r.introduce)},
              {"conjunction_eliminate", query(r.eliminate)},
              {"set_reading", query(r.set_reading)}};
}

}  // namespace coreseq
