#include "coreseq/kernel.hpp"

#include <algorithm>
#include <iterator>

namespace coreseq {

namespace {

constexpr std::array<std::string_view, 11> kRuleNames = {
    "Ax", "LNeg", "RNeg", "LAnd", "RAnd", "LOr", "ROr1", "ROr2", "LImp", "RImpA", "RImpB"};

using FormulaSet = std::vector<Formula>;

FormulaSet to_set(std::span<const Formula> xs) { return {xs.begin(), xs.end()}; }

bool member(const FormulaSet& s, Formula f) {
  return std::binary_search(s.begin(), s.end(), f, canonical_less);
}

FormulaSet unite(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                 canonical_less);
  return out;
}

FormulaSet with(FormulaSet s, Formula f) {
  auto it = std::lower_bound(s.begin(), s.end(), f, canonical_less);
  if (it == s.end() || *it != f) s.insert(it, f);
  return s;
}

FormulaSet without(FormulaSet s, Formula f) {
  auto it = std::lower_bound(s.begin(), s.end(), f, canonical_less);
  if (it != s.end() && *it == f) s.erase(it);
  return s;
}

std::string show(const FormulaSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].text();
  return out + "}";
}

class RuleChecker {
 public:
  RuleChecker(RuleName rule, const Sequent& c, std::span<const Sequent> p, Mode m)
      : rule_(rule), concl_(c), prem_(p), mode_(m), gamma_(to_set(c.antecedent())) {}

  std::optional<Violation> run() {
    if (prem_.size() != arity(rule_)) {
      return fail(Clause::Arity, std::string(to_string(rule_)) + " takes " +
                                     std::to_string(arity(rule_)) + " premise(s), got " +
                                     std::to_string(prem_.size()));
    }
    switch (rule_) {
      case RuleName::Ax: return ax();
      case RuleName::LNeg: return lneg();
      case RuleName::RNeg: return discharge(Connective::Neg);
      case RuleName::LAnd: return land();
      case RuleName::RAnd: return rand();
      case RuleName::LOr: return lor();
      case RuleName::ROr1: return ror(true);
      case RuleName::ROr2: return ror(false);
      case RuleName::LImp: return limp();
      case RuleName::RImpA: return discharge(Connective::Imp);
      case RuleName::RImpB: return rimpb();
    }
    return std::nullopt;
  }

 private:
  std::optional<Violation> fail(Clause clause, std::string msg) const {
    return Violation{rule_, clause, std::move(msg)};
  }

  std::string name() const { return std::string(to_string(rule_)); }

  // Succedent of the conclusion must be a formula of the given shape.
  std::optional<Formula> concluded(Connective kind) const {
    const auto& s = concl_.succedent();
    if (s.is_absurd() || s.formula().kind() != kind) return std::nullopt;
    return s.formula();
  }

  std::optional<Violation> ax() {
    if (gamma_.size() != 1) return fail(Clause::AxSingleton, "Ax requires singleton antecedent");
    if (concl_.succedent().is_absurd() || concl_.succedent().formula() != gamma_[0])
      return fail(Clause::AxMatch, "Ax requires succedent equal to the antecedent formula");
    return std::nullopt;
  }

  std::optional<Violation> lneg() {
    if (!concl_.succedent().is_absurd())
      return fail(Clause::Succedent, "LNeg requires an empty conclusion succedent");
    const Sequent& p = prem_[0];
    if (p.succedent().is_absurd())
      return fail(Clause::Succedent, "LNeg requires a formula premise succedent");
    const Formula principal = Formula::neg(p.succedent().formula());
    if (!member(gamma_, principal))
      return fail(Clause::Principal, "LNeg principal " + principal.text() + " not in conclusion");
    if (with(to_set(p.antecedent()), principal) != gamma_)
      return fail(Clause::Antecedent, "LNeg requires conclusion antecedent {~A} u D");
    return std::nullopt;
  }

  // RNeg and RImpA: premise (A, D |-), conclusion D |- ~A or D |- A -> B.
  std::optional<Violation> discharge(Connective kind) {
    auto f = concluded(kind);
    if (!f)
      return fail(Clause::Succedent, name() + " requires conclusion succedent of the form " +
                                         (kind == Connective::Neg ? "~A" : "A -> B"));
    const Sequent& p = prem_[0];
    if (!p.succedent().is_absurd())
      return fail(Clause::Succedent, name() + " requires an empty premise succedent");
    const Formula a = f->left();
    if (!p.contains(a))
      return fail(Clause::Principal, name() + " premise must contain discharged " + a.text());
    if (without(to_set(p.antecedent()), a) != gamma_)
      return fail(Clause::Antecedent, name() + " requires conclusion antecedent D with premise {A} u D, A not in D");
    return std::nullopt;
  }

  std::optional<Violation> rimpb() {
    auto f = concluded(Connective::Imp);
    if (!f) return fail(Clause::Succedent, "RImpB requires conclusion succedent of the form A -> B");
    const Sequent& p = prem_[0];
    if (p.succedent() != Succedent::conclusion(f->right()))
      return fail(Clause::Succedent, "RImpB premise must conclude " + f->right().text());
    if (without(to_set(p.antecedent()), f->left()) != gamma_)
      return fail(Clause::Antecedent, "RImpB requires conclusion antecedent D \\ {A}");
    return std::nullopt;
  }

  std::optional<Violation> ror(bool first) {
    auto f = concluded(Connective::Or);
    if (!f) return fail(Clause::Succedent, name() + " requires conclusion succedent A | B");
    const Sequent& p = prem_[0];
    const Formula side = first ? f->left() : f->right();
    if (p.succedent() != Succedent::conclusion(side))
      return fail(Clause::Succedent, name() + " premise must conclude " + side.text());
    if (to_set(p.antecedent()) != gamma_)
      return fail(Clause::Antecedent, name() + " requires identical antecedents");
    return std::nullopt;
  }

  std::optional<Violation> rand() {
    auto f = concluded(Connective::And);
    if (!f) return fail(Clause::Succedent, "RAnd requires conclusion succedent A & B");
    if (prem_[0].succedent() != Succedent::conclusion(f->left()) ||
        prem_[1].succedent() != Succedent::conclusion(f->right()))
      return fail(Clause::Succedent, "RAnd premises must conclude " + f->left().text() +
                                         " and " + f->right().text());
    if (unite(to_set(prem_[0].antecedent()), to_set(prem_[1].antecedent())) != gamma_)
      return fail(Clause::Antecedent, "RAnd requires conclusion antecedent D u G");
    return std::nullopt;
  }

  std::optional<Violation> strict_succedent() const {
    if (mode_ == Mode::StrictTable && concl_.succedent().is_absurd())
      return fail(Clause::StrictTable, name() + " concludes a formula only in strict-table mode");
    return std::nullopt;
  }

  std::optional<Violation> land() {
    if (auto v = strict_succedent()) return v;
    const Sequent& p = prem_[0];
    if (p.succedent() != concl_.succedent())
      return fail(Clause::Succedent, "LAnd requires equal succedents");
    const FormulaSet delta = to_set(p.antecedent());
    std::optional<Violation> side;
    bool any_principal = false;
    for (Formula c : gamma_) {
      if (c.kind() != Connective::And) continue;
      any_principal = true;
      const FormulaSet rest = without(without(delta, c.left()), c.right());
      if (with(rest, c) != gamma_) continue;
      if (!member(delta, c.left()) && !member(delta, c.right())) {
        side = fail(Clause::LAndSideCondition,
                    "LAnd side condition D n {A,B} != {} violated for " + c.text());
        continue;
      }
      return std::nullopt;
    }
    if (side) return side;
    if (!any_principal) return fail(Clause::Principal, "LAnd needs a conjunction in the conclusion antecedent");
    return fail(Clause::Antecedent, "LAnd requires conclusion antecedent {A & B} u (D \\ {A,B}), premise " + show(delta));
  }

  std::optional<Violation> lor() {
    const Sequent& p1 = prem_[0];
    const Sequent& p2 = prem_[1];
    const auto& s = concl_.succedent();
    const auto& s1 = p1.succedent();
    const auto& s2 = p2.succedent();
    bool ok_succ = false;
    if (s.is_absurd()) {
      ok_succ = s1.is_absurd() && s2.is_absurd();
    } else {
      const bool c1 = s1 == s, c2 = s2 == s;
      ok_succ = (c1 || s1.is_absurd()) && (c2 || s2.is_absurd()) && (c1 || c2);
    }
    if (!ok_succ)
      return fail(Clause::Succedent, "LOr premise succedents must be C or empty, at least one C when C is concluded");
    bool any_principal = false;
    for (Formula c : gamma_) {
      if (c.kind() != Connective::Or) continue;
      any_principal = true;
      if (!p1.contains(c.left()) || !p2.contains(c.right())) continue;
      const FormulaSet d1 = without(to_set(p1.antecedent()), c.left());
      const FormulaSet d2 = without(to_set(p2.antecedent()), c.right());
      if (with(unite(d1, d2), c) == gamma_) return std::nullopt;
    }
    if (!any_principal) return fail(Clause::Principal, "LOr needs a disjunction in the conclusion antecedent");
    return fail(Clause::Antecedent, "LOr requires conclusion antecedent {A | B} u D u G with premises A, D and B, G");
  }

  std::optional<Violation> limp() {
    if (auto v = strict_succedent()) return v;
    const Sequent& p1 = prem_[0];
    const Sequent& p2 = prem_[1];
    if (p1.succedent().is_absurd())
      return fail(Clause::Succedent, "LImp minor premise must conclude the antecedent A");
    if (p2.succedent() != concl_.succedent())
      return fail(Clause::Succedent, "LImp major premise must share the conclusion succedent");
    bool any_principal = false;
    for (Formula c : gamma_) {
      if (c.kind() != Connective::Imp) continue;
      if (p1.succedent().formula() != c.left()) continue;
      any_principal = true;
      if (!p2.contains(c.right())) continue;
      const FormulaSet d2 = without(to_set(p2.antecedent()), c.right());
      if (with(unite(to_set(p1.antecedent()), d2), c) == gamma_) return std::nullopt;
    }
    if (!any_principal)
      return fail(Clause::Principal, "LImp needs A -> B in the conclusion antecedent with A concluded by the minor premise");
    return fail(Clause::Antecedent, "LImp requires conclusion antecedent {A -> B} u D u G with premises D |- A and B, G");
  }

  RuleName rule_;
  const Sequent& concl_;
  std::span<const Sequent> prem_;
  Mode mode_;
  FormulaSet gamma_;
};

std::optional<TreeViolation> check_at(const Derivation& d, Mode mode,
                                      std::vector<std::size_t>& path) {
  std::vector<Sequent> premises;
  premises.reserve(d.premises.size());
  for (const auto& p : d.premises) premises.push_back(p.conclusion);
  if (auto v = check_rule(d.conclusion, d.rule, premises, mode)) return TreeViolation{path, *v};
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(i);
    if (auto v = check_at(d.premises[i], mode, path)) return v;
    path.pop_back();
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(RuleName r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<RuleName> rule_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i)
    if (kRuleNames[i] == name) return static_cast<RuleName>(i);
  return std::nullopt;
}

std::size_t arity(RuleName r) {
  switch (r) {
    case RuleName::Ax: return 0;
    case RuleName::RAnd:
    case RuleName::LOr:
    case RuleName::LImp: return 2;
    default: return 1;
  }
}

std::string_view to_string(Mode m) {
  return m == Mode::Tennant ? "tennant" : "strict-table";
}

std::optional<Mode> mode_from_string(std::string_view name) {
  if (name == "tennant") return Mode::Tennant;
  if (name == "strict-table") return Mode::StrictTable;
  return std::nullopt;
}

std::string_view to_string(Clause c) {
  switch (c) {
    case Clause::UnknownRule: return "unknown-rule";
    case Clause::Arity: return "arity";
    case Clause::AxSingleton: return "ax-singleton";
    case Clause::AxMatch: return "ax-match";
    case Clause::Succedent: return "succedent";
    case Clause::Principal: return "principal";
    case Clause::Antecedent: return "antecedent";
    case Clause::LAndSideCondition: return "land-side-condition";
    case Clause::StrictTable: return "strict-table";
  }
  return "?";
}

Derivation Derivation::make(RuleName rule, Sequent conclusion, std::vector<Derivation> premises) {
  return Derivation{std::move(conclusion), std::string(to_string(rule)), std::move(premises)};
}

std::string TreeViolation::location() const {
  if (path.empty()) return "root";
  std::string out = "premise ";
  for (std::size_t i = 0; i < path.size(); ++i) out += (i ? "." : "") + std::to_string(path[i]);
  return out;
}

std::string TreeViolation::describe() const { return violation.message + " at " + location(); }

std::optional<Violation> check_rule(const Sequent& conclusion, RuleName rule,
                                    std::span<const Sequent> premises, Mode mode) {
  return RuleChecker(rule, conclusion, premises, mode).run();
}

std::optional<Violation> check_rule(const Sequent& conclusion, std::string_view rule,
                                    std::span<const Sequent> premises, Mode mode) {
  auto r = rule_from_string(rule);
  if (!r) return Violation{RuleName::Ax, Clause::UnknownRule, "unknown rule " + std::string(rule)};
  return check_rule(conclusion, *r, premises, mode);
}

std::optional<TreeViolation> check_derivation(const Derivation& d, Mode mode) {
  std::vector<std::size_t> path;
  return check_at(d, mode, path);
}

int height(const Derivation& d) {
  int h = -1;
  for (const auto& p : d.premises) h = std::max(h, height(p));
  return h + 1;
}

std::size_t node_count(const Derivation& d) {
  std::size_t n = 1;
  for (const auto& p : d.premises) n += node_count(p);
  return n;
}

}  // namespace coreseq
