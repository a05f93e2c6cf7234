#include "coreseq/admissibility.hpp"

#include "coreseq/parallel.hpp"

namespace coreseq {

RuleTransform RuleTransform::identity() {
  return {"identity", [](const Sequent& s) { return s; }};
}

namespace {

Sequent add_left(const Sequent& s, Formula f) {
  std::vector<Formula> ante(s.antecedent().begin(), s.antecedent().end());
  ante.push_back(f);
  return Sequent(std::move(ante), s.succedent());
}

Lemma1Query query(Sequent s, Mode mode) {
  const auto r = decide(s, mode);
  return {std::move(s), r.provable(), r.min_height};
}

}  // namespace

RuleTransform RuleTransform::left_top(Formula top) {
  return {"LTop[" + top.text() + "]", [top](const Sequent& s) { return add_left(s, top); }};
}

RuleTransform RuleTransform::weakening(Formula f) {
  return {"Wk[" + f.text() + "]", [f](const Sequent& s) { return add_left(s, f); }};
}

std::string_view to_string(AdmissibilityStatus s) {
  switch (s) {
    case AdmissibilityStatus::StronglyAdmissible: return "StronglyAdmissible";
    case AdmissibilityStatus::Admissible: return "Admissible";
    case AdmissibilityStatus::NotAdmissible: return "NotAdmissible";
  }
  return "?";
}

std::string decide_invocation(const Sequent& s, Mode mode) {
  return "coreseq decide \"" + print_sequent(s) + "\" --mode " + std::string(to_string(mode)) + " --json";
}

AdmissibilityVerdict test_admissibility(const RuleTransform& t, std::span<const Sequent> family,
                                        const std::string& description, int weight_cap,
                                        const AdmissibilityOptions& options) {
  struct Row {
    bool premise_provable = false;
    int premise_height = -1;
    std::optional<Sequent> transformed;
    bool transformed_provable = false;
    int transformed_height = -1;
  };
  std::vector<Row> rows(family.size());
  parallel_for(family.size(), options.threads, [&](std::size_t i) {
    const auto p = decide(family[i], options.mode);
    if (!p.provable()) return;
    rows[i].premise_provable = true;
    rows[i].premise_height = p.min_height;
    Sequent ts = t.map(family[i]);
    const auto q = decide(ts, options.mode);
    rows[i].transformed = std::move(ts);
    rows[i].transformed_provable = q.provable();
    rows[i].transformed_height = q.min_height;
  });

  AdmissibilityVerdict v;
  v.rule = t.name;
  v.universe = description;
  v.weight_cap = weight_cap;
  v.mode = options.mode;
  v.family_size = family.size();
  std::vector<Witness> counter, taller;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& r = rows[i];
    if (!r.premise_provable) continue;
    ++v.premises_tested;
    Witness w{family[i], r.premise_height, *r.transformed, r.transformed_provable, r.transformed_height,
              decide_invocation(*r.transformed, options.mode)};
    if (!r.transformed_provable) {
      ++v.counterexamples;
      if (counter.size() < options.max_witnesses) counter.push_back(std::move(w));
    } else if (r.transformed_height > r.premise_height) {
      ++v.height_increases;
      if (taller.size() < options.max_witnesses) taller.push_back(std::move(w));
    }
  }
  // The family is in sequent_less order, so the first witness is the lightest.
  if (v.counterexamples > 0) {
    v.status = AdmissibilityStatus::NotAdmissible;
    v.witnesses = std::move(counter);
  } else if (v.height_increases > 0) {
    v.status = AdmissibilityStatus::Admissible;
    v.witnesses = std::move(taller);
  } else {
    v.status = AdmissibilityStatus::StronglyAdmissible;
  }
  return v;
}

AdmissibilityVerdict test_admissibility(const RuleTransform& t, const FormulaUniverse& universe, int weight_cap,
                                        const AdmissibilityOptions& options) {
  const auto family = sequent_family(universe, weight_cap);
  return test_admissibility(t, family, universe.description(), weight_cap, options);
}

Lemma1Report lemma1_study(Formula delta, Formula top, Mode mode) {
  if (!decide(Sequent({}, Succedent::conclusion(top)), mode).provable())
    throw PreconditionError("lemma1_study: |- " + top.text() + " is not Core-provable");
  const Formula conj = Formula::conj(top, delta);
  return Lemma1Report{
      delta,
      top,
      query(Sequent({delta}, Succedent::conclusion(conj)), mode),
      query(Sequent({conj}, Succedent::conclusion(delta)), mode),
      query(Sequent({top, delta}, Succedent::conclusion(delta)), mode),
  };
}

}  // namespace coreseq
