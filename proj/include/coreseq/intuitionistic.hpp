// Intuitionistic oracle: a contraction-free sequent prover and a bounded
// Kripke countermodel search, used to compare Core derivability with
// intuitionistic derivability.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coreseq/decide.hpp"
#include "coreseq/formula.hpp"
#include "coreseq/universe.hpp"

namespace coreseq {

// An empty succedent is read as "the antecedent is inconsistent".
Verdict decide_int(const Sequent& s);

class KripkeModel {
 public:
  // above[w] is the bitmask of worlds v with w <= v; world 0 is the root.
  KripkeModel(std::vector<std::uint32_t> above, std::vector<std::vector<std::string>> valuation);

  int size() const { return static_cast<int>(above_.size()); }
  bool leq(int w, int v) const { return (above_[w] >> v) & 1u; }
  const std::vector<std::string>& atoms_at(int w) const { return valuation_[w]; }

  bool forces(int w, Formula f) const;
  // Root forces every antecedent formula but not the succedent.
  bool refutes(const Sequent& s) const;
  // Reflexive, transitive, rooted at 0, and atoms persist upwards.
  bool well_formed() const;

 private:
  std::uint32_t forcing_set(Formula f) const;

  std::vector<std::uint32_t> above_;
  std::vector<std::vector<std::string>> valuation_;
};

// Smallest model (by world count) refuting the sequent, searching rooted
// partial orders up to isomorphism. Requires max_worlds <= 5.
std::optional<KripkeModel> countermodel(const Sequent& s, int max_worlds);

struct CrossCheckReport {
  std::string universe;
  int weight_cap = 0;
  Mode mode = Mode::Tennant;
  std::size_t sequents = 0;
  std::size_t core_provable = 0;
  std::size_t int_provable = 0;
  std::size_t theorem_candidates = 0;      // empty-antecedent members
  std::vector<Sequent> divergences;        // intuitionistic but not Core
  std::vector<Sequent> violations;         // Core but not intuitionistic
  std::vector<Sequent> theorem_mismatches; // empty antecedent, verdicts differ

  bool ok() const { return violations.empty() && theorem_mismatches.empty(); }
};

CrossCheckReport cross_check(std::span<const Sequent> family, const std::string& description,
                             int weight_cap, Mode mode = Mode::Tennant,
                             unsigned threads = 1);
CrossCheckReport cross_check(const FormulaUniverse& universe, int weight_cap,
                             Mode mode = Mode::Tennant, unsigned threads = 1);

}  // namespace coreseq
