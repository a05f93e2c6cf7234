// Acceptance criteria, one PASS/FAIL line each. Exit status is non-zero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "coreseq/admissibility.hpp"
#include "coreseq/forward.hpp"
#include "coreseq/intuitionistic.hpp"
#include "coreseq/json_io.hpp"
#include "coreseq/parallel.hpp"
#include "coreseq/repro.hpp"
#include "oracles.hpp"

using namespace coreseq;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string fixture_path(const std::string& name) {
  return std::string(CORESEQ_SOURCE_DIR) + "/fixtures/" + name + ".json";
}

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && s >= limit_s) {
    o.ok = false;
    o.detail = "took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s";
  }
  if (!o.ok) ++failures;
  std::printf("%s criterion %d: %s (%.3f s, limit %g s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, s, limit_s,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

bool resolves(const DecisionResult& r, const Sequent& s, Mode m) {
  if (!r.provable()) return !r.derivation && r.min_height == -1;
  return r.derivation && r.derivation->conclusion == s && !check_derivation(*r.derivation, m) &&
         oracle::steps(*r.derivation) == r.min_height;
}

std::vector<Sequent> two_atom_family(int cap) { return sequent_family(FormulaUniverse::over_atoms(2, cap), cap); }

}  // namespace

int main() {
  const unsigned threads = std::max(2u, default_threads());

  criterion(1, "|- ~A -> (A -> B) is provable with min height 3 and the upper part of D1", 0.1, [] {
    Outcome o;
    const auto s = parse_sequent("|- ~A -> (A -> B)");
    const auto r = decide(s);
    o.require(r.provable(), "unprovable");
    o.require(r.min_height == 3, "min height " + std::to_string(r.min_height));
    o.require(r.derivation && *r.derivation == read_derivation_file(fixture_path("d1-upper")),
              "derivation differs from fixtures/d1-upper.json");
    o.require(resolves(r, s, Mode::Tennant), "derivation does not re-check");
    return o;
  });

  criterion(2, "~A, A |- B is unprovable by exhaustion in both modes", 0.1, [] {
    Outcome o;
    const auto s = parse_sequent("~A, A |- B");
    for (Mode m : {Mode::Tennant, Mode::StrictTable}) {
      const auto r = decide(s, m);
      o.require(!r.provable(), std::string("provable in ") + std::string(to_string(m)));
      o.require(r.stats.distinct_goals >= 1 && r.stats.mode == m, "no exhaustion record");
      // Saturating the subformula space independently confirms exhaustion.
      ForwardClosure fc(subformulas(s), m);
      o.require(!fc.derivable(s), "forward closure derives it");
    }
    return o;
  });

  criterion(3, "fixtures/d2.json checks and ~A -> (A -> B), ~A, A |- B is provable within its height", 1.0, [] {
    Outcome o;
    const auto d2 = read_derivation_file(fixture_path("d2"));
    o.require(!check_derivation(d2), "d2 rejected");
    const auto s = parse_sequent("~A -> (A -> B), ~A, A |- B");
    o.require(d2.conclusion == s, "d2 concludes something else");
    const auto r = decide(s);
    o.require(r.provable(), "unprovable");
    o.require(r.min_height <= oracle::steps(d2), "min height " + std::to_string(r.min_height) + " > " +
                                                     std::to_string(oracle::steps(d2)));
    o.require(resolves(r, s, Mode::Tennant), "derivation does not re-check");
    return o;
  });

  criterion(4, "lemma1-right, lemma1-left, contradiction1, contradiction2 check", 0.1, [] {
    Outcome o;
    for (const char* name : {"lemma1-right", "lemma1-left", "contradiction1", "contradiction2"}) {
      const auto d = read_derivation_file(fixture_path(name));
      if (auto v = check_derivation(d)) o.require(false, std::string(name) + ": " + v->describe());
    }
    return o;
  });

  criterion(5, "left-top with p -> p is not admissible on 2 atoms, weight <= 5, witness q |- q", 30.0, [threads] {
    Outcome o;
    AdmissibilityOptions opt;
    opt.threads = threads;
    const auto v = test_admissibility(RuleTransform::left_top(parse_formula("p -> p")),
                                      FormulaUniverse::over_atoms(2, 5), 5, opt);
    o.require(v.status == AdmissibilityStatus::NotAdmissible, "status " + std::string(to_string(v.status)));
    o.require(!v.witnesses.empty(), "no witnesses");
    if (!o.ok) return o;
    const auto& w = v.witnesses.front();
    o.require(w.premise == parse_sequent("q |- q") && w.premise_height == 0, "first witness " + print_sequent(w.premise));
    o.require(w.transformed == parse_sequent("(p->p), q |- q") && !w.transformed_provable,
              "transformed " + print_sequent(w.transformed));
    // Nothing lighter: every weight-2 premise other than q |- q survives.
    for (const auto& x : v.witnesses) o.require(sequent_weight(x.premise) >= 2, "lighter witness");
    for (const auto& x : v.witnesses) {
      const auto p = decide(x.premise);
      const auto t = decide(x.transformed);
      o.require(p.provable() && p.min_height == x.premise_height, "premise does not re-verify");
      o.require(t.provable() == x.transformed_provable && t.min_height == x.transformed_height,
                "transformed does not re-verify");
    }
    return o;
  });

  criterion(6, "decide agrees with forward closure on 2 atoms, sequent weight <= 7", 300.0, [threads] {
    Outcome o;
    const auto family = two_atom_family(7);
    std::vector<char> agree(family.size(), 0);
    parallel_for(family.size(), threads, [&](std::size_t i) {
      const Sequent& s = family[i];
      // Every derivation of s stays within its subformulas, so the
      // saturated space of that closure decides membership exactly.
      ForwardClosure fc(subformulas(s), Mode::Tennant);
      const auto r = decide(s);
      agree[i] = r.provable() == fc.derivable(s) && resolves(r, s, Mode::Tennant);
    });
    std::size_t bad = 0;
    for (std::size_t i = 0; i < family.size(); ++i)
      if (!agree[i]) {
        if (!bad) o.require(false, "first disagreement " + print_sequent(family[i]));
        ++bad;
      }
    if (bad) o.detail += " (" + std::to_string(bad) + " total)";
    else o.detail = std::to_string(family.size()) + " sequents, 0 disagreements";
    return o;
  });

  criterion(7, "Core is contained in intuitionistic logic on the same family", 300.0, [threads] {
    Outcome o;
    const auto r = cross_check(FormulaUniverse::over_atoms(2, 7), 7, Mode::Tennant, threads);
    o.require(r.violations.empty(), std::to_string(r.violations.size()) + " violations");
    o.require(std::find(r.divergences.begin(), r.divergences.end(), parse_sequent("~p, p |- q")) !=
                  r.divergences.end(),
              "~p, p |- q is not a divergence");
    if (o.ok)
      o.detail = std::to_string(r.sequents) + " sequents, " + std::to_string(r.divergences.size()) + " divergences";
    return o;
  });

  criterion(8, "theoremhood agrees with intuitionistic logic for 2 atoms, weight <= 9", 600.0, [threads] {
    Outcome o;
    const auto u = FormulaUniverse::over_atoms(2, 9);
    const auto family = sequent_family(u, 9, true);
    const auto r = cross_check(family, u.description(), 9, Mode::Tennant, threads);
    o.require(r.theorem_mismatches.empty(),
              std::to_string(r.theorem_mismatches.size()) + " disagreements, first " +
                  (r.theorem_mismatches.empty() ? std::string() : print_sequent(r.theorem_mismatches.front())));
    if (o.ok)
      o.detail = std::to_string(r.theorem_candidates) + " candidates, " + std::to_string(r.core_provable) +
                 " theorems";
    return o;
  });

  criterion(9, "LTop fixture and the weakening step are rejected", 1.0, [] {
    Outcome o;
    const auto v = check_derivation(read_derivation_file(fixture_path("d1-full-with-ltop")));
    o.require(v && v->path.empty() && v->violation.clause == Clause::UnknownRule,
              "LTop fixture not rejected at the root");
    o.require(v && v->describe().find("unknown rule") != std::string::npos, "message lacks 'unknown rule'");
    const auto premise = parse_sequent("~A, A |-");
    const auto conclusion = parse_sequent("B, ~A, A |-");
    for (RuleName r : kAllRules)
      o.require(check_rule(conclusion, r, std::span<const Sequent>(&premise, 1)).has_value(),
                std::string(to_string(r)) + " accepts the weakening step");
    return o;
  });

  criterion(10, "round trip, search soundness, thread determinism", 600.0, [threads] {
    Outcome o;
    std::mt19937 rng(7);
    int round_trip = 0;
    for (int i = 0; i < 10000; ++i) {
      const Formula f = oracle::random_formula(rng, 5, 6);
      if (parse_formula(print_formula(f)) != f) ++round_trip;
    }
    o.require(round_trip == 0, std::to_string(round_trip) + " round-trip failures");

    const auto family = two_atom_family(6);
    std::size_t unsound = 0;
    for (Mode m : {Mode::Tennant, Mode::StrictTable})
      for (const auto& s : family) unsound += !resolves(decide(s, m), s, m);
    o.require(unsound == 0, std::to_string(unsound) + " unsound results");

    const auto u = FormulaUniverse::over_atoms(2, 6);
    o.require(dump(to_json(cross_check(u, 6, Mode::Tennant, 1))) ==
                  dump(to_json(cross_check(u, 6, Mode::Tennant, threads))),
              "cross-check differs across thread counts");
    ReproOptions one, many;
    one.threads = 1;
    many.threads = threads;
    const auto a = run_repro(one), b = run_repro(many);
    o.require(dump(a.to_json()) == dump(b.to_json()) && a.summary() == b.summary(), "repro differs across thread counts");
    for (const auto& [path, j] : a.files)
      o.require(b.files.count(path) && dump(b.files.at(path)) == dump(j), "repro file differs: " + path);
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures ? 1 : 0;
}
