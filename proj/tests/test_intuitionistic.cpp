#include <algorithm>

#include "coreseq/intuitionistic.hpp"
#include "doctest.h"

using namespace coreseq;

namespace {
Verdict int_verdict(const char* s) { return decide_int(parse_sequent(s)); }
}  // namespace

TEST_CASE("decide_int examples") {
  CHECK(int_verdict("~A, A |- B") == Verdict::Provable);
  CHECK(int_verdict("|- ~A -> (A -> B)") == Verdict::Provable);
  CHECK(int_verdict("|- p | ~p") == Verdict::Unprovable);
  CHECK(int_verdict("|- ~~(p | ~p)") == Verdict::Provable);
  CHECK(int_verdict("|- ~~p -> p") == Verdict::Unprovable);
  CHECK(int_verdict("|- ((p -> q) -> p) -> p") == Verdict::Unprovable);
  CHECK(int_verdict("(p->p), q |- q") == Verdict::Provable);
  CHECK(int_verdict("~A, A |-") == Verdict::Provable);
  CHECK(int_verdict("p |-") == Verdict::Unprovable);
  CHECK(int_verdict("~(p & q) |- ~p | ~q") == Verdict::Unprovable);
  CHECK(int_verdict("~p | ~q |- ~(p & q)") == Verdict::Provable);
}

TEST_CASE("countermodel examples") {
  const auto lem = parse_sequent("|- p | ~p");
  const auto m = countermodel(lem, 2);
  REQUIRE(m);
  CHECK(m->size() == 2);
  CHECK(m->well_formed());
  CHECK(m->atoms_at(0).empty());
  CHECK(m->atoms_at(1) == std::vector<std::string>{"p"});
  CHECK(m->leq(0, 1));
  CHECK(m->refutes(lem));
  CHECK_FALSE(countermodel(lem, 1).has_value());

  for (int n = 1; n <= 4; ++n) {
    CHECK_FALSE(countermodel(parse_sequent("p |- p"), n).has_value());
    CHECK_FALSE(countermodel(parse_sequent("(p->p), q |- q"), n).has_value());
  }
  CHECK_THROWS(countermodel(lem, 6));
}

TEST_CASE("prover and Kripke semantics agree on small sequents") {
  const auto family = sequent_family(FormulaUniverse::over_atoms(2, 4), 4);
  int unsound = 0, missing = 0;
  for (const auto& s : family) {
    const bool provable = decide_int(s) == Verdict::Provable;
    const auto m = countermodel(s, 3);
    if (provable && m) ++unsound;
    if (!provable && !m) ++missing;
    if (m) CHECK(m->refutes(s));
  }
  CHECK(unsound == 0);
  CHECK(missing == 0);
}

TEST_CASE("cross_check examples") {
  const auto r = cross_check(FormulaUniverse::over_atoms(2, 6), 6);
  CHECK(r.ok());
  CHECK(r.violations.empty());
  CHECK(std::find(r.divergences.begin(), r.divergences.end(), parse_sequent("~p, p |- q")) != r.divergences.end());

  const auto small = cross_check(FormulaUniverse::over_atoms(std::vector<std::string>{"p"}, 2), 2);
  CHECK(small.divergences.empty());
  CHECK(small.sequents > 0);
}

TEST_CASE("cross_check is independent of the thread count") {
  const auto u = FormulaUniverse::over_atoms(2, 5);
  const auto a = cross_check(u, 5, Mode::Tennant, 1);
  const auto b = cross_check(u, 5, Mode::Tennant, 4);
  CHECK(a.divergences == b.divergences);
  CHECK(a.core_provable == b.core_provable);
  CHECK(a.int_provable == b.int_provable);
}
