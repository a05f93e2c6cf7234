#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace coreseq;

namespace {

std::optional<Violation> rule(const char* concl, std::string_view name, std::vector<const char*> premises,
                              Mode mode = Mode::Tennant) {
  std::vector<Sequent> ps;
  for (auto* p : premises) ps.push_back(parse_sequent(p));
  return check_rule(parse_sequent(concl), name, ps, mode);
}

bool valid(const char* concl, std::string_view name, std::vector<const char*> premises, Mode mode = Mode::Tennant) {
  return !rule(concl, name, std::move(premises), mode).has_value();
}

}  // namespace

TEST_CASE("rule names") {
  CHECK(kAllRules.size() == 11);
  for (RuleName r : kAllRules) CHECK(rule_from_string(to_string(r)) == r);
  CHECK_FALSE(rule_from_string("LTop").has_value());
  CHECK_FALSE(rule_from_string("Wk").has_value());
  CHECK(mode_from_string("strict-table") == Mode::StrictTable);
  CHECK(mode_from_string("tennant") == Mode::Tennant);
}

TEST_CASE("check_rule examples") {
  CHECK(valid("~A, A |-", "LNeg", {"A |- A"}));
  CHECK(valid("p |- p", "Ax", {}));
  auto wk = rule("B, ~A, A |-", "Wk", {"~A, A |-"});
  REQUIRE(wk);
  CHECK(wk->clause == Clause::UnknownRule);
  CHECK(wk->message == "unknown rule Wk");
}

TEST_CASE("weakening step is rejected by every rule") {
  const auto premise = parse_sequent("~A, A |-");
  const auto conclusion = parse_sequent("B, ~A, A |-");
  for (Mode m : {Mode::Tennant, Mode::StrictTable}) {
    for (RuleName r : kAllRules) {
      CAPTURE(to_string(r));
      CHECK(check_rule(conclusion, r, std::span<const Sequent>(&premise, 1), m).has_value());
      // No rule accepts it with the premise listed twice either.
      const std::vector<Sequent> twice{premise, premise};
      CHECK(check_rule(conclusion, r, twice, m).has_value());
    }
  }
}

TEST_CASE("individual rules") {
  SUBCASE("Ax") {
    CHECK(rule("p, q |- p", "Ax", {})->clause == Clause::AxSingleton);
    CHECK(rule("p |- q", "Ax", {})->clause == Clause::AxMatch);
    CHECK(rule("p |-", "Ax", {})->clause == Clause::AxMatch);
    CHECK(rule("p |- p", "Ax", {"p |- p"})->clause == Clause::Arity);
  }
  SUBCASE("LNeg keeps the principal optional in the premise") {
    CHECK(valid("~A, A |-", "LNeg", {"~A, A |- A"}));
    CHECK_FALSE(valid("~A, A |- B", "LNeg", {"A |- A"}));
    CHECK_FALSE(valid("~A, A, B |-", "LNeg", {"A |- A"}));
  }
  SUBCASE("RNeg and RImpA discharge") {
    CHECK(valid("~A |- ~A", "RNeg", {"~A, A |-"}));
    CHECK(valid("~A |- A -> B", "RImpA", {"~A, A |-"}));
    CHECK(valid("~A |- A -> q", "RImpA", {"~A, A |-"}));
    CHECK_FALSE(valid("~A, A |- A -> B", "RImpA", {"~A, A |-"}));
    CHECK_FALSE(valid("~A |- ~A", "RNeg", {"~A |-"}));
  }
  SUBCASE("RImpB discharge is optional") {
    CHECK(valid("|- p -> p", "RImpB", {"p |- p"}));
    CHECK(valid("q |- p -> q", "RImpB", {"q |- q"}));
    CHECK(valid("A |- A -> A", "RImpB", {"A |- A"}) == false);
    CHECK_FALSE(valid("|- p -> q", "RImpB", {"p |- p"}));
  }
  SUBCASE("LAnd side condition") {
    CHECK(valid("p & q |- p", "LAnd", {"p |- p"}));
    // A and B are removed from the premise antecedent, never retained.
    CHECK_FALSE(valid("p & q, p |- p", "LAnd", {"p |- p"}));
    CHECK(valid("p & q |- p", "LAnd", {"p, q |- p"}));
    CHECK(rule("p & q, r |- r", "LAnd", {"r |- r"})->clause == Clause::LAndSideCondition);
    CHECK(valid("p & q, ~p |-", "LAnd", {"~p, p |-"}));
    CHECK(rule("p & q, ~p |-", "LAnd", {"~p, p |-"}, Mode::StrictTable)->clause == Clause::StrictTable);
  }
  SUBCASE("RAnd unites antecedents") {
    CHECK(valid("p, q |- p & q", "RAnd", {"p |- p", "q |- q"}));
    CHECK_FALSE(valid("p, q |- p & q", "RAnd", {"q |- q", "p |- p"}));
    CHECK_FALSE(valid("p, q, r |- p & q", "RAnd", {"p |- p", "q |- q"}));
  }
  SUBCASE("LOr succedent matching") {
    CHECK(valid("p | q |- p | q", "LOr", {"p |- p | q", "q |- p | q"}));
    CHECK(valid("p | q, ~p |- q", "LOr", {"~p, p |-", "q |- q"}));
    CHECK(valid("p | q, ~p, ~q |-", "LOr", {"~p, p |-", "~q, q |-"}));
    CHECK_FALSE(valid("p | q, ~p, ~q |- r", "LOr", {"~p, p |-", "~q, q |-"}));
    CHECK_FALSE(valid("p | q |- p", "LOr", {"p |- p", "q |- q"}));
  }
  SUBCASE("ROr") {
    CHECK(valid("p |- p | q", "ROr1", {"p |- p"}));
    CHECK(valid("q |- p | q", "ROr2", {"q |- q"}));
    CHECK_FALSE(valid("q |- p | q", "ROr1", {"q |- q"}));
  }
  SUBCASE("LImp propagates an empty succedent only in tennant mode") {
    CHECK(valid("p -> q, p |- q", "LImp", {"p |- p", "q |- q"}));
    CHECK(valid("~q, p -> q, p |-", "LImp", {"p |- p", "~q, q |-"}));
    CHECK(rule("~q, p -> q, p |-", "LImp", {"p |- p", "~q, q |-"}, Mode::StrictTable)->clause == Clause::StrictTable);
    CHECK_FALSE(valid("p -> q, p |- q", "LImp", {"q |- q", "p |- p"}));
  }
}

TEST_CASE("fixtures") {
  const auto all = paper_fixtures();
  CHECK(all.size() == 7);
  for (const auto& [name, d] : all) {
    CAPTURE(name);
    const auto v = check_derivation(d);
    if (name == "d1-full-with-ltop") {
      REQUIRE(v);
      CHECK(v->path.empty());
      CHECK(v->violation.clause == Clause::UnknownRule);
      CHECK(v->describe() == "unknown rule LTop at root");
    } else {
      CHECK_FALSE(v.has_value());
      CHECK_FALSE(check_derivation(d, Mode::StrictTable).has_value());
      CHECK(height(d) == oracle::steps(d));
    }
  }
  CHECK(print_sequent(paper_fixture("lemma1-right").conclusion) == print_sequent(parse_sequent("d |- (p->p) & d")));
  CHECK(paper_fixture("contradiction1").conclusion == parse_sequent("~(d -> c), ((p->p) & d) -> c |-"));
  CHECK(height(Derivation::make(RuleName::Ax, parse_sequent("p |- p"))) == 0);
  CHECK(height(paper_fixture("d1-upper")) == 3);
  CHECK(height(paper_fixture("d2")) == 3);
  CHECK(node_count(paper_fixture("d1-upper")) == 4);
  CHECK(node_count(paper_fixture("d2")) == 7);
  CHECK_THROWS(paper_fixture("missing"));
}

TEST_CASE("violation paths") {
  Derivation d = paper_fixture("d2");
  d.premises[1].premises[0].rule = "LNeg";
  const auto v = check_derivation(d);
  REQUIRE(v);
  CHECK(v->path == std::vector<std::size_t>{1, 0});
  CHECK(v->location() == "premise 1.0");

  // Pre-order: the earlier sibling's fault is reported first.
  d.premises[0].premises[0].rule = "Cut";
  CHECK(check_derivation(d)->path == std::vector<std::size_t>{0, 0});
}
