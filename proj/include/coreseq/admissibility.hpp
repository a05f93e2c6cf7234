// Extensional tests of rule admissibility over bounded sequent families.
//
// A rule S / S' is admissible when every provable S has a provable S', and
// strongly admissible when moreover the minimal height never grows. Verdicts
// only speak for the family they were computed on; a NotAdmissible verdict
// carries concrete, re-checkable witnesses.

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coreseq/decide.hpp"
#include "coreseq/universe.hpp"

namespace coreseq {

struct RuleTransform {
  std::string name;
  std::function<Sequent(const Sequent&)> map;

  static RuleTransform identity();
  // Adds a concrete theorem to the antecedent.
  static RuleTransform left_top(Formula top);
  // Adds an arbitrary formula to the antecedent.
  static RuleTransform weakening(Formula f);
};

enum class AdmissibilityStatus : std::uint8_t { StronglyAdmissible, Admissible, NotAdmissible };

std::string_view to_string(AdmissibilityStatus s);

struct Witness {
  Sequent premise;
  int premise_height = 0;
  Sequent transformed;
  bool transformed_provable = false;
  int transformed_height = -1;
  std::string invocation;  // CLI call reproducing the transformed verdict
};

struct AdmissibilityVerdict {
  std::string rule;
  std::string universe;
  int weight_cap = 0;
  Mode mode = Mode::Tennant;
  AdmissibilityStatus status = AdmissibilityStatus::StronglyAdmissible;
  std::size_t family_size = 0;
  std::size_t premises_tested = 0;   // provable members of the family
  std::size_t counterexamples = 0;   // transformed sequent unprovable
  std::size_t height_increases = 0;  // provable, but only with larger height
  // Counterexamples if any, otherwise height increases; lightest first.
  std::vector<Witness> witnesses;
};

struct AdmissibilityOptions {
  Mode mode = Mode::Tennant;
  unsigned threads = 1;
  std::size_t max_witnesses = 16;
};

AdmissibilityVerdict test_admissibility(const RuleTransform& t, std::span<const Sequent> family,
                                        const std::string& description, int weight_cap,
                                        const AdmissibilityOptions& options = {});
AdmissibilityVerdict test_admissibility(const RuleTransform& t, const FormulaUniverse& universe,
                                        int weight_cap, const AdmissibilityOptions& options = {});

struct Lemma1Query {
  Sequent sequent;
  bool provable = false;
  int min_height = -1;
};

// Compares the conjunction reading (delta against top & delta) with the
// set reading (top added next to delta).
struct Lemma1Report {
  Formula delta;
  Formula top;
  Lemma1Query introduce;   // delta |- top & delta
  Lemma1Query eliminate;   // top & delta |- delta
  Lemma1Query set_reading; // top, delta |- delta
};

class PreconditionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Throws PreconditionError unless |- top is Core-provable.
Lemma1Report lemma1_study(Formula delta, Formula top, Mode mode = Mode::Tennant);

std::string decide_invocation(const Sequent& s, Mode mode);

}  // namespace coreseq
