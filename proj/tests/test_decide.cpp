#include <algorithm>

#include "coreseq/decide.hpp"
#include "coreseq/forward.hpp"
#include "coreseq/universe.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coreseq;

namespace {

DecisionResult run(const char* s, Mode m = Mode::Tennant) { return decide(parse_sequent(s), m); }

void check_sound(const Sequent& s, const DecisionResult& r, Mode m) {
  if (!r.provable()) {
    CHECK_FALSE(r.derivation.has_value());
    CHECK(r.min_height == -1);
    return;
  }
  REQUIRE(r.derivation);
  CHECK(r.derivation->conclusion == s);
  CHECK_FALSE(check_derivation(*r.derivation, m).has_value());
  CHECK(oracle::steps(*r.derivation) == r.min_height);
}

bool contains(const std::vector<Sequent>& xs, const char* s) {
  return std::find(xs.begin(), xs.end(), parse_sequent(s)) != xs.end();
}

}  // namespace

TEST_CASE("decide examples") {
  for (Mode m : {Mode::Tennant, Mode::StrictTable}) {
    CAPTURE(to_string(m));
    CHECK_FALSE(run("~A, A |- B", m).provable());
    const auto eq2 = run("|- ~A -> (A -> B)", m);
    CHECK(eq2.provable());
    CHECK(eq2.min_height == 3);
    CHECK(*eq2.derivation == paper_fixture("d1-upper"));
    CHECK(run("~A -> (A -> B), ~A, A |- B", m).provable());
    CHECK(run("~A -> (A -> B), ~A, A |- B", m).min_height <= height(paper_fixture("d2")));
    CHECK(run("~A, A |-", m).min_height == 1);
    CHECK_FALSE(run("(p->p), q |- q", m).provable());
    CHECK(run("|- ~~(p | ~p)", m).provable());
    CHECK_FALSE(run("|- p | ~p", m).provable());
  }
  CHECK(run("~A, A |- B").stats.rule_instances == 0);
}

TEST_CASE("empty succedents through LImp and LAnd need tennant mode") {
  for (const char* text : {"p -> ~q, p, q |-", "p & ~q, q |-"}) {
    CAPTURE(text);
    const auto s = parse_sequent(text);
    const auto t = decide(s, Mode::Tennant);
    CHECK(t.provable());
    check_sound(s, t, Mode::Tennant);
    CHECK_FALSE(decide(s, Mode::StrictTable).provable());
  }
  // LNeg can go first here, so strict-table mode proves it too.
  CHECK(decide(parse_sequent("~B, A -> B, A |-"), Mode::StrictTable).provable());
}

TEST_CASE("derivations from search re-check") {
  for (const char* text : {"p & q |- q & p", "p | q |- q | p", "p -> q, q -> r, p |- r", "|- p -> ~~p",
                           "~(p | q) |- ~p & ~q", "~p & ~q |- ~(p | q)", "p & (q | r) |- (p & q) | (p & r)",
                           "(p -> q) & (p -> r), p |- q & r", "~q, p -> q |- ~p"}) {
    CAPTURE(text);
    const auto s = parse_sequent(text);
    for (Mode m : {Mode::Tennant, Mode::StrictTable}) {
      const auto r = decide(s, m);
      CHECK(r.provable());
      check_sound(s, r, m);
    }
  }
}

TEST_CASE("resource limit is an error, not a verdict") {
  SearchLimits tiny;
  tiny.goal_cap = 2;
  CHECK_THROWS_AS(decide(parse_sequent("p & (q | r) |- (p & q) | (p & r)"), Mode::Tennant, tiny), ResourceLimitError);
}

TEST_CASE("classical pruning does not change verdicts") {
  SearchLimits off;
  off.classical_pruning = false;
  const auto family = sequent_family(FormulaUniverse::over_atoms(2, 4), 5);
  for (const auto& s : family) {
    const auto a = decide(s);
    const auto b = decide(s, Mode::Tennant, off);
    CHECK(a.verdict == b.verdict);
    CHECK(a.min_height == b.min_height);
  }
}

TEST_CASE("provable_subsequents") {
  const auto sub = provable_subsequents(parse_sequent("B, ~A, A |-"));
  auto has = [&](const char* s) {
    return std::any_of(sub.begin(), sub.end(), [&](const auto& x) { return x.first == parse_sequent(s); });
  };
  CHECK(has("~A, A |-"));
  CHECK_FALSE(has("B, ~A, A |-"));
  for (const auto& [s, r] : sub) CHECK(r.provable());

  const auto ax = provable_subsequents(parse_sequent("p |- p"));
  REQUIRE(ax.size() == 1);
  CHECK(ax[0].first == parse_sequent("p |- p"));

  for (const auto& [s, r] : provable_subsequents(parse_sequent("~A, A |- B")))
    CHECK(s.succedent().is_absurd());
}

TEST_CASE("forward closure examples") {
  const Formula A = Formula::atom("A");
  // The universe must contain A -> A for that sequent to be in the space.
  const std::vector<Formula> u1{Formula::imp(A, A), A};
  const auto c1 = forward_closure(u1, 3);
  CHECK(contains(c1, "A |- A"));
  CHECK(contains(c1, "|- A -> A"));

  const std::vector<Formula> just_a{A};
  CHECK(contains(forward_closure(just_a, 3), "A |- A"));

  const auto u2 = subformulas(parse_sequent("|- ~A -> (A -> B)"));
  CHECK(contains(forward_closure(u2, 10), "|- ~A -> (A -> B)"));

  const std::vector<Formula> u3{parse_formula("(p->p) & q"), parse_formula("p -> p"), parse_formula("p"),
                                parse_formula("q")};
  const auto c3 = forward_closure(u3, 8);
  CHECK_FALSE(contains(c3, "(p->p), q |- q"));
  CHECK(contains(c3, "q |- q"));

  const std::vector<Formula> open{parse_formula("p -> q")};
  CHECK_THROWS_AS(ForwardClosure(open, Mode::Tennant), std::invalid_argument);
}

TEST_CASE("forward closure justifications re-check") {
  const auto u = FormulaUniverse::closure_of(std::vector<Formula>{parse_formula("~A -> (A -> B)"), parse_formula("p | q")});
  for (Mode m : {Mode::Tennant, Mode::StrictTable}) {
    ForwardClosure fc(u.formulas(), m);
    CHECK(fc.derived_count() > 0);
    for (const auto& s : fc.derivable_sequents(100)) {
      const auto d = fc.derivation(s);
      REQUIRE(d);
      CHECK(d->conclusion == s);
      CHECK_FALSE(check_derivation(*d, m).has_value());
    }
  }
}

// Every sequent of a closed universe: backward search and forward
// saturation must agree, and found heights can only be bounded by the
// saturation witnesses.
TEST_CASE("decide agrees with forward closure on whole universes") {
  const std::vector<std::vector<const char*>> generators = {
      {"~A -> (A -> B)"},
      {"(p -> q) & p", "~q"},
      {"p | q", "~p", "~q"},
      {"~(p & q)", "~p | ~q"},
      {"(p -> p) & d", "~(d -> c)"},
  };
  for (const auto& g : generators) {
    std::vector<Formula> fs;
    for (auto* t : g) fs.push_back(parse_formula(t));
    const auto u = FormulaUniverse::closure_of(fs);
    CAPTURE(u.description());
    for (Mode m : {Mode::Tennant, Mode::StrictTable}) {
      ForwardClosure fc(u.formulas(), m);
      int disagreements = 0;
      for (const auto& s : sequent_family(u, 1000)) {
        const auto r = decide(s, m);
        if (r.provable() != fc.derivable(s)) ++disagreements;
        if (r.provable()) CHECK(r.min_height <= height(*fc.derivation(s)));
      }
      CHECK(disagreements == 0);
    }
  }
}
