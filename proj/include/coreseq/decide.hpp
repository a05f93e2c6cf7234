// Decision procedure for exact derivability in the Core sequent calculus.
//
// Backward search over every rule instance whose conclusion matches the goal.
// All premises live in the finite space of sequents over the goal's
// subformulas, so the goal graph is finite; provability and minimal height
// are computed as a least fixpoint over that graph (cycles arise because
// antecedents are sets and may retain a principal formula).

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coreseq/formula.hpp"
#include "coreseq/kernel.hpp"

namespace coreseq {

struct SearchStats {
  std::uint64_t goals_expanded = 0;   // goal lookups, repeats included
  std::uint64_t distinct_goals = 0;
  int max_weight_seen = 0;
  Mode mode = Mode::Tennant;
  std::uint64_t rule_instances = 0;
  // Premises skipped because they are not classically valid; such sequents
  // have no derivation, so skipping them keeps the search exhaustive.
  std::uint64_t pruned_premises = 0;
};

enum class Verdict : std::uint8_t { Provable, Unprovable };

struct DecisionResult {
  Verdict verdict = Verdict::Unprovable;
  std::optional<Derivation> derivation;  // set iff provable
  int min_height = -1;                   // -1 iff unprovable
  SearchStats stats;

  bool provable() const { return verdict == Verdict::Provable; }
};

// Default 10^7, overridden by the CORESEQ_MEMO_CAP environment variable.
std::uint64_t default_goal_cap();

struct SearchLimits {
  std::uint64_t goal_cap = default_goal_cap();
  bool classical_pruning = true;
};

// The search was truncated; this is never reported as Unprovable.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, SearchStats stats)
      : std::runtime_error(what), stats_(stats) {}
  const SearchStats& stats() const { return stats_; }

 private:
  SearchStats stats_;
};

DecisionResult decide(const Sequent& s, Mode mode = Mode::Tennant,
                      const SearchLimits& limits = {});

// Decides every (D', S') with D' a subset of the antecedent and S' either the
// succedent or empty; returns the provable ones in sequent_less order.
// Requires at most 12 antecedent formulas.
std::vector<std::pair<Sequent, DecisionResult>> provable_subsequents(
    const Sequent& s, Mode mode = Mode::Tennant, const SearchLimits& limits = {});

}  // namespace coreseq
