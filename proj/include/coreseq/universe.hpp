// Bounded formula universes and the sequent families drawn from them.

#pragma once

#include <string>
#include <vector>

#include "coreseq/formula.hpp"

namespace coreseq {

class FormulaUniverse {
 public:
  // All formulas over the atoms with weight at most `max_weight`.
  static FormulaUniverse over_atoms(const std::vector<std::string>& atoms, int max_weight);
  static FormulaUniverse over_atoms(int atom_count, int max_weight);
  // Subformula closure of the generators.
  static FormulaUniverse closure_of(std::span<const Formula> generators);

  // Canonically ordered, subformula-closed.
  const std::vector<Formula>& formulas() const { return formulas_; }
  const std::string& description() const { return description_; }

 private:
  std::vector<Formula> formulas_;
  std::string description_;
};

// p, q, r, s, t, u, then p1, p2, ...
std::vector<std::string> atom_letters(int count);

// Every sequent with antecedent a subset of the universe and succedent a
// universe formula or empty, with sequent_weight <= weight_cap, excluding the
// empty judgment. Ordered by sequent_less.
std::vector<Sequent> sequent_family(const FormulaUniverse& u, int weight_cap,
                                    bool empty_antecedent_only = false);

}  // namespace coreseq
