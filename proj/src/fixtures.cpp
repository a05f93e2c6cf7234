#include <stdexcept>

#include "coreseq/kernel.hpp"

namespace coreseq {

namespace {

Derivation node(RuleName rule, std::string_view conclusion, std::vector<Derivation> premises = {}) {
  return Derivation::make(rule, parse_sequent(conclusion), std::move(premises));
}

Derivation ax(std::string_view formula) {
  const std::string s = std::string(formula) + " |- " + std::string(formula);
  return node(RuleName::Ax, s);
}

// |- p -> p, standing in for the theorem placeholder.
Derivation top_proof() { return node(RuleName::RImpB, "|- p -> p", {ax("p")}); }

Derivation d1_upper() {
  return node(RuleName::RImpB, "|- ~A -> (A -> B)",
              {node(RuleName::RImpA, "~A |- A -> B",
                    {node(RuleName::LNeg, "~A, A |-", {ax("A")})})});
}

}  // namespace

std::vector<std::pair<std::string, Derivation>> paper_fixtures() {
  std::vector<std::pair<std::string, Derivation>> out;

  out.emplace_back("lemma1-right",
                   node(RuleName::RAnd, "d |- (p -> p) & d", {top_proof(), ax("d")}));

  out.emplace_back("lemma1-left", node(RuleName::LAnd, "(p -> p) & d |- d", {ax("d")}));

  out.emplace_back(
      "contradiction1",
      node(RuleName::LNeg, "~(d -> c), (p -> p) & d -> c |-",
           {node(RuleName::RImpB, "(p -> p) & d -> c |- d -> c",
                 {node(RuleName::LImp, "d, (p -> p) & d -> c |- c",
                       {node(RuleName::RAnd, "d |- (p -> p) & d", {top_proof(), ax("d")}),
                        ax("c")})})}));

  out.emplace_back(
      "contradiction2",
      node(RuleName::LNeg, "~((p -> p) & d -> c), d -> c |-",
           {node(RuleName::RImpB, "d -> c |- (p -> p) & d -> c",
                 {node(RuleName::LImp, "(p -> p) & d, d -> c |- c",
                       {node(RuleName::LAnd, "(p -> p) & d |- d", {ax("d")}), ax("c")})})}));

  out.emplace_back("d1-upper", d1_upper());

  out.emplace_back(
      "d2",
      node(RuleName::LImp, "~A -> (A -> B), ~A, A |- B",
           {node(RuleName::RNeg, "~A |- ~A", {node(RuleName::LNeg, "~A, A |-", {ax("A")})}),
            node(RuleName::LImp, "A -> B, A |- B", {ax("A"), ax("B")})}));

  // The final step adds the theorem on the left by a two-premise rule that
  // is not in the calculus; its right premise records a non-derivability
  // claim, which no rule of the calculus concludes either.
  out.emplace_back(
      "d1-full-with-ltop",
      Derivation{parse_sequent("~A -> (A -> B), ~A, A |- B"),
                 "LTop",
                 {d1_upper(), Derivation{parse_sequent("~A, A |- B"), "NotDerivable", {}}}});

  return out;
}

Derivation paper_fixture(std::string_view name) {
  for (auto& [n, d] : paper_fixtures())
    if (n == name) return d;
  throw std::out_of_range("no fixture named " + std::string(name));
}

}  // namespace coreseq
