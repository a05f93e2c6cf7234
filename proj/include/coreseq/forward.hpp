// Forward saturation of the Core calculus over a subformula-closed universe.
//
// An oracle independent of the backward search: starting from the axioms it
// applies every rule forwards until nothing new appears. Because the universe
// is closed under subformulas, every derivation of a sequent in the space
// stays inside the space, so membership is exact.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "coreseq/formula.hpp"
#include "coreseq/kernel.hpp"

namespace coreseq {

class ForwardClosure {
 public:
  // Throws std::invalid_argument unless `universe` is subformula-closed, and
  // ResourceLimitError when it has more than `max_universe` formulas.
  ForwardClosure(std::span<const Formula> universe, Mode mode, std::size_t max_universe = 16);

  // Sequents with antecedent and succedent drawn from the universe.
  bool in_space(const Sequent& s) const;
  // Throws std::out_of_range outside the space.
  bool derivable(const Sequent& s) const;
  // The derivation found during saturation (not necessarily of minimal height).
  std::optional<Derivation> derivation(const Sequent& s) const;

  std::vector<Sequent> derivable_sequents(int weight_cap) const;
  std::size_t derived_count() const { return order_.size(); }

 private:
  struct Justification {
    RuleName rule;
    int premises[2];
    int count;
  };

  std::size_t state(std::uint32_t mask, int succ) const { return std::size_t{mask} * (n_ + 1) + succ; }
  std::optional<std::size_t> locate(const Sequent& s) const;
  Sequent to_sequent(std::size_t st) const;
  Derivation build(std::size_t st) const;
  void saturate();

  Mode mode_;
  std::vector<Formula> universe_;
  int n_ = 0;
  std::vector<std::optional<Justification>> just_;
  std::vector<std::size_t> order_;
};

// Every derivable sequent over `universe` whose sequent_weight is at most
// `weight_cap`, in sequent_less order.
std::vector<Sequent> forward_closure(std::span<const Formula> universe, int weight_cap,
                                     Mode mode = Mode::Tennant);

}  // namespace coreseq
