#include "coreseq/repro.hpp"

#include <sstream>

namespace coreseq {

namespace {

std::string status_of(const DecisionResult& r) { return r.provable() ? "provable" : "unprovable"; }

class Repro {
 public:
  explicit Repro(const ReproOptions& o) : opt_(o) {}

  ReproReport run() {
    load_fixtures();
    eq1();
    eq2();
    eq3_d1();
    eq4_d2();
    lemma1();
    contradiction("contradiction1");
    contradiction("contradiction2");
    ltop_verdict();
    weakening();
    cross();
    return std::move(report_);
  }

 private:
  void disagree(std::string what) { report_.disagreements.push_back(std::move(what)); }

  // Decides and re-checks any derivation the engine returns.
  DecisionResult decided(const Sequent& s, Mode mode) {
    auto r = decide(s, mode);
    if (r.provable()) {
      if (auto v = check_derivation(*r.derivation, mode))
        disagree("engine derivation for " + print_sequent(s) + " rejected: " + v->describe());
      if (r.derivation->conclusion != s) disagree("engine derivation concludes the wrong sequent");
      if (height(*r.derivation) != r.min_height) disagree("engine height mismatch for " + print_sequent(s));
    }
    return r;
  }

  Json decision_brief(const DecisionResult& r) {
    Json j{{"status", status_of(r)}};
    if (r.provable()) j["min_height"] = r.min_height;
    j["distinct_goals"] = r.stats.distinct_goals;
    return j;
  }

  void load_fixtures() {
    for (auto& [name, d] : paper_fixtures()) {
      const std::string path = "derivations/" + name + ".json";
      report_.files[path] = to_json(d);
      const auto v = check_derivation(d, opt_.mode);
      Json j{{"file", path}, {"conclusion", print_sequent(d.conclusion)}, {"valid", !v.has_value()}};
      if (v) {
        j["violation"] = v->describe();
      } else {
        j["height"] = height(d);
      }
      fixture_json_[name] = j;
      fixtures_.emplace(name, std::move(d));
      const bool expect_valid = name != "d1-full-with-ltop";
      if (expect_valid == v.has_value()) disagree("fixture " + name + " has unexpected check status");
    }
  }

  // A valid fixture whose conclusion the engine cannot prove is a disagreement.
  Json fixture_and_decision(const std::string& name) {
    const auto& d = fixtures_.at(name);
    const auto r = decided(d.conclusion, opt_.mode);
    if (!r.provable()) disagree("fixture " + name + " checks but its conclusion is undecidable by search");
    else if (r.min_height > height(d)) disagree("engine min height exceeds fixture height for " + name);
    Json j = fixture_json_.at(name);
    j["decide"] = decision_brief(r);
    return j;
  }

  void eq1() {
    const auto s = parse_sequent("~A, A |- B");
    const auto t = decided(s, Mode::Tennant);
    const auto st = decided(s, Mode::StrictTable);
    const auto companion = parse_sequent("~A, A |-");
    const auto c = decided(companion, opt_.mode);
    Json ev{{"sequent", print_sequent(s)},
            {"tennant", to_json(t.stats)},
            {"strict-table", to_json(st.stats)},
            {"modes_agree", t.verdict == st.verdict},
            {"companion", Json{{"sequent", print_sequent(companion)}, {"decide", decision_brief(c)}}}};
    ev["tennant"]["status"] = status_of(t);
    ev["strict-table"]["status"] = status_of(st);
    std::string status = t.verdict == st.verdict ? status_of(t) : "mode-dependent";
    report_.items.push_back({"eq1", status, std::move(ev)});
  }

  void eq2() {
    const auto s = parse_sequent("|- ~A -> (A -> B)");
    const auto r = decided(s, opt_.mode);
    Json ev{{"sequent", print_sequent(s)}, {"decide", decision_brief(r)}, {"fixture", fixture_json_.at("d1-upper")}};
    if (r.provable()) {
      report_.files["derivations/eq2-decided.json"] = to_json(*r.derivation);
      ev["decided_derivation"] = "derivations/eq2-decided.json";
      ev["matches_fixture"] = *r.derivation == fixtures_.at("d1-upper");
    } else {
      disagree("eq2 unprovable although d1-upper checks");
    }
    report_.items.push_back({"eq2", status_of(r), std::move(ev)});
  }

  void eq3_d1() {
    const auto& d = fixtures_.at("d1-full-with-ltop");
    const auto premise = d.premises.at(1).conclusion;
    const auto r = decided(d.conclusion, opt_.mode);
    const auto rp = decided(premise, opt_.mode);
    Json steps = Json::array();
    steps.push_back(Json{{"step", "root"}, {"rule", d.rule}, {"core_rule", false}, {"reason", "unknown rule " + d.rule}});
    steps.push_back(Json{{"step", "premise 1"},
                         {"rule", d.premises[1].rule},
                         {"core_rule", false},
                         {"reason", "non-derivability of " + print_sequent(premise) + " used as a premise"}});
    steps.push_back(Json{{"step", "theorem"},
                         {"rule", "two-premise step to absurdity from the eq3-d1 and eq4-d2 judgments"},
                         {"core_rule", false},
                         {"reason", "premises are a derivability and a non-derivability judgment"}});
    Json ev{{"fixture", fixture_json_.at("d1-full-with-ltop")},
            {"upper_part", fixture_json_.at("d1-upper")},
            {"non_core_steps", steps},
            {"conclusion_decide", decision_brief(r)},
            {"ltop_premise_decide", Json{{"sequent", print_sequent(premise)}, {"decide", decision_brief(rp)}}}};
    report_.items.push_back({"eq3-d1", "not-core-valid", std::move(ev)});
  }

  void eq4_d2() {
    Json ev = fixture_and_decision("d2");
    const bool ok = ev["valid"].get<bool>() && ev["decide"]["status"] == "provable";
    report_.items.push_back({"eq4-d2", ok ? "valid+provable" : "invalid", std::move(ev)});
  }

  void lemma1() {
    const Formula d = Formula::atom("d");
    Json ev{{"lemma1-right", fixture_and_decision("lemma1-right")},
            {"lemma1-left", fixture_and_decision("lemma1-left")}};
    try {
      ev["study"] = to_json(lemma1_study(d, opt_.top, opt_.mode));
    } catch (const PreconditionError& e) {
      ev["study"] = Json{{"error", e.what()}};
    }
    const bool ok = ev["lemma1-right"]["valid"].get<bool>() && ev["lemma1-left"]["valid"].get<bool>();
    report_.items.push_back({"lemma1", ok ? "valid" : "invalid", std::move(ev)});
  }

  void contradiction(const std::string& name) {
    Json ev = fixture_and_decision(name);
    const bool ok = ev["valid"].get<bool>();
    report_.items.push_back({name, ok ? "valid" : "invalid", std::move(ev)});
  }

  void recheck(const AdmissibilityVerdict& v) {
    for (const auto& w : v.witnesses) {
      const auto p = decide(w.premise, v.mode);
      const auto t = decide(w.transformed, v.mode);
      if (!p.provable() || p.min_height != w.premise_height || t.provable() != w.transformed_provable ||
          t.min_height != w.transformed_height)
        disagree("witness " + print_sequent(w.premise) + " does not re-verify");
    }
  }

  Json verdict_item(const AdmissibilityVerdict& v, const std::string& path) {
    report_.files[path] = to_json(v);
    Json ev{{"verdict_file", path},
            {"rule", v.rule},
            {"universe", v.universe},
            {"weight_cap", v.weight_cap},
            {"counterexamples", v.counterexamples}};
    if (!v.witnesses.empty()) {
      const auto& w = v.witnesses.front();
      ev["first_witness"] = Json{{"premise", print_sequent(w.premise)},
                                 {"premise_min_height", w.premise_height},
                                 {"transformed", print_sequent(w.transformed)},
                                 {"transformed_status", w.transformed_provable ? "provable" : "unprovable"}};
    }
    return ev;
  }

  void ltop_verdict() {
    AdmissibilityOptions o{opt_.mode, opt_.threads, 16};
    const auto v = test_admissibility(RuleTransform::left_top(opt_.top), FormulaUniverse::over_atoms(2, opt_.ltop_weight_cap),
                                      opt_.ltop_weight_cap, o);
    recheck(v);
    report_.items.push_back({"ltop-verdict", std::string(to_string(v.status)), verdict_item(v, "verdicts/ltop.json")});
  }

  void weakening() {
    const auto premise = parse_sequent("~A, A |-");
    const auto conclusion = parse_sequent("B, ~A, A |-");
    Json rejections = Json::array();
    bool all_rejected = true;
    for (RuleName r : kAllRules) {
      const auto v = check_rule(conclusion, r, std::span<const Sequent>(&premise, 1), opt_.mode);
      all_rejected = all_rejected && v.has_value();
      rejections.push_back(Json{{"rule", to_string(r)}, {"clause", v ? to_string(v->clause) : "accepted"}});
    }
    const auto wk_label = check_rule(conclusion, "Wk", std::span<const Sequent>(&premise, 1), opt_.mode);

    const Formula b = Formula::atom("B");
    const std::vector<Formula> gens{parse_formula("~A"), b};
    AdmissibilityOptions o{opt_.mode, opt_.threads, 16};
    const auto v = test_admissibility(RuleTransform::weakening(b), FormulaUniverse::closure_of(gens), 4, o);
    recheck(v);
    Json ev = verdict_item(v, "verdicts/weakening.json");
    ev["step"] = Json{{"premise", print_sequent(premise)}, {"conclusion", print_sequent(conclusion)}};
    ev["wk_label"] = wk_label ? wk_label->message : "accepted";
    ev["rejected_by_every_rule"] = all_rejected;
    ev["per_rule"] = std::move(rejections);
    const auto full = decided(conclusion, opt_.mode);
    ev["conclusion_decide"] = decision_brief(full);
    if (!all_rejected) disagree("weakening step accepted by some rule");
    report_.items.push_back({"weakening", std::string(to_string(v.status)), std::move(ev)});
  }

  void cross() {
    const auto r = cross_check(FormulaUniverse::over_atoms(2, opt_.cross_check_weight_cap),
                               opt_.cross_check_weight_cap, opt_.mode, opt_.threads);
    report_.files["cross-check.json"] = to_json(r);
    report_.cross_check = Json{{"file", "cross-check.json"},
                               {"universe", r.universe},
                               {"weight_cap", r.weight_cap},
                               {"sequents", r.sequents},
                               {"divergences", r.divergences.size()},
                               {"violations", r.violations.size()},
                               {"theorem_disagreements", r.theorem_mismatches.size()}};
    for (const auto& s : r.violations) disagree("Core proves " + print_sequent(s) + " but intuitionistic logic does not");
  }

  ReproOptions opt_;
  ReproReport report_;
  std::map<std::string, Derivation> fixtures_;
  std::map<std::string, Json> fixture_json_;
};

}  // namespace

Json ReproReport::to_json() const {
  Json items_json = Json::array();
  for (const auto& it : items) items_json.push_back(Json{{"id", it.id}, {"status", it.status}, {"evidence", it.evidence}});
  return Json{{"version", version_string()},
              {"items", std::move(items_json)},
              {"cross_check", cross_check},
              {"disagreements", disagreements}};
}

std::string ReproReport::summary() const {
  std::ostringstream os;
  os << version_string() << " reproduction summary\n";
  for (const auto& it : items) {
    os << "  " << it.id;
    for (std::size_t pad = it.id.size(); pad < 16; ++pad) os << ' ';
    os << it.status << '\n';
  }
  os << "valid Core derivations:";
  for (const auto& it : items) {
    for (const auto& key : {"fixture", "lemma1-right", "lemma1-left"}) {
      const Json* f = nullptr;
      if (key == std::string("fixture") && it.evidence.contains("fixture")) f = &it.evidence["fixture"];
      else if (it.evidence.contains(key)) f = &it.evidence[key];
      if (f && f->contains("valid") && (*f)["valid"].get<bool>()) os << ' ' << (*f)["file"].get<std::string>();
    }
    if (it.evidence.contains("valid") && it.evidence["valid"].get<bool>()) os << ' ' << it.evidence["file"].get<std::string>();
  }
  os << "\nsteps outside the Core rules:";
  for (const auto& it : items) {
    if (!it.evidence.contains("non_core_steps")) continue;
    for (const auto& s : it.evidence["non_core_steps"]) os << "\n  " << it.id << ": " << s["step"].get<std::string>()
                                                            << " (" << s["reason"].get<std::string>() << ")";
  }
  os << "\ncross-check: " << cross_check.value("sequents", 0) << " sequents, "
     << cross_check.value("violations", 0) << " violations, " << cross_check.value("divergences", 0)
     << " divergences\n";
  os << "disagreements: " << disagreements.size() << '\n';
  return os.str();
}

ReproReport run_repro(const ReproOptions& options) { return Repro(options).run(); }

}  // namespace coreseq
