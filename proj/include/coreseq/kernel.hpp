// Trusted checker for derivations in the propositional Core sequent calculus.
//
// The kernel knows exactly eleven rule names. Antecedents are sets, so a
// schema such as "~A, D |-" matches whenever ~A is in the conclusion and the
// conclusion equals {~A} united with the premise antecedent D (D may itself
// contain ~A). Formulas discharged on the right (RNeg, RImpA, RImpB) and the
// side formulas introduced on the left (the disjuncts of LOr, the consequent
// of LImp) are removed from the conclusion.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coreseq/formula.hpp"

namespace coreseq {

enum class RuleName : std::uint8_t {
  Ax, LNeg, RNeg, LAnd, RAnd, LOr, ROr1, ROr2, LImp, RImpA, RImpB
};

inline constexpr std::array<RuleName, 11> kAllRules = {
    RuleName::Ax,   RuleName::LNeg, RuleName::RNeg, RuleName::LAnd,
    RuleName::RAnd, RuleName::LOr,  RuleName::ROr1, RuleName::ROr2,
    RuleName::LImp, RuleName::RImpA, RuleName::RImpB};

std::string_view to_string(RuleName r);
std::optional<RuleName> rule_from_string(std::string_view name);
std::size_t arity(RuleName r);

// tennant: LAnd and LImp may carry an empty succedent.
// strict-table: LAnd and LImp conclude formulas only, as printed in the table.
enum class Mode : std::uint8_t { Tennant, StrictTable };

std::string_view to_string(Mode m);
std::optional<Mode> mode_from_string(std::string_view name);

struct Derivation {
  Sequent conclusion;
  // Rule label as written. Labels outside RuleName are representable so
  // that the checker, not the loader, rejects them.
  std::string rule;
  std::vector<Derivation> premises;

  static Derivation make(RuleName rule, Sequent conclusion,
                         std::vector<Derivation> premises = {});

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

enum class Clause : std::uint8_t {
  UnknownRule,
  Arity,
  AxSingleton,
  AxMatch,
  Succedent,
  Principal,
  Antecedent,
  LAndSideCondition,
  StrictTable,
};

std::string_view to_string(Clause c);

struct Violation {
  RuleName rule;  // meaningless when clause == UnknownRule
  Clause clause;
  std::string message;
};

struct TreeViolation {
  // Premise indices from the root; empty means the root.
  std::vector<std::size_t> path;
  Violation violation;

  std::string location() const;   // "root" or "premise 0.1"
  std::string describe() const;   // message + " at " + location
};

std::optional<Violation> check_rule(const Sequent& conclusion, RuleName rule,
                                    std::span<const Sequent> premises,
                                    Mode mode = Mode::Tennant);
std::optional<Violation> check_rule(const Sequent& conclusion,
                                    std::string_view rule,
                                    std::span<const Sequent> premises,
                                    Mode mode = Mode::Tennant);

// First failing node in depth-first pre-order, if any.
std::optional<TreeViolation> check_derivation(const Derivation& d,
                                              Mode mode = Mode::Tennant);

int height(const Derivation& d);
std::size_t node_count(const Derivation& d);

// Reference derivations with the schematic context instantiated to the atom d,
// the conclusion letter to c, and the theorem placeholder expanded to p -> p
// together with its proof. "d1-full-with-ltop" is deliberately not a
// derivation of this calculus.
std::vector<std::pair<std::string, Derivation>> paper_fixtures();
Derivation paper_fixture(std::string_view name);

}  // namespace coreseq
