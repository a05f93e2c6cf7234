// Propositional formulas, succedents and sequents.
//
// Formulas are hash-consed: two structurally equal formulas share one node,
// so equality is a pointer comparison and a Formula is a cheap handle.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coreseq {

enum class Connective : std::uint8_t { Atom, Neg, And, Or, Imp };

namespace detail {
struct FormulaNode;
}

class Formula {
 public:
  static Formula atom(std::string_view name);
  static Formula neg(Formula sub);
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula imp(Formula left, Formula right);

  Connective kind() const;
  bool is_atom() const { return kind() == Connective::Atom; }

  // Atom name; empty for compound formulas.
  const std::string& name() const;
  // Operand of a negation, or left operand of a binary connective.
  Formula left() const;
  Formula right() const;
  Formula sub() const { return left(); }

  int weight() const;
  // Canonical minimal-parentheses rendering, cached at construction.
  const std::string& text() const;

  // Interning id. Stable within a process only; never use it for ordering
  // anything that is printed.
  std::size_t id() const;

  friend bool operator==(Formula a, Formula b) { return a.node_ == b.node_; }

 private:
  explicit Formula(const detail::FormulaNode* node) : node_(node) {}
  const detail::FormulaNode* node_;
};

// Canonical order on formulas: heavier first, then by canonical text.
bool canonical_less(Formula a, Formula b);

struct CanonicalLess {
  bool operator()(Formula a, Formula b) const { return canonical_less(a, b); }
};

// Either a conclusion formula or the empty right-hand side.
class Succedent {
 public:
  static Succedent absurd() { return Succedent(); }
  static Succedent conclusion(Formula f) { return Succedent(f); }

  bool is_absurd() const { return !formula_.has_value(); }
  Formula formula() const { return *formula_; }
  int weight() const { return formula_ ? formula_->weight() : 0; }

  friend bool operator==(const Succedent&, const Succedent&) = default;

 private:
  Succedent() = default;
  explicit Succedent(Formula f) : formula_(f) {}
  std::optional<Formula> formula_;
};

class Sequent {
 public:
  // The antecedent is normalised to a duplicate-free canonically ordered set.
  Sequent(std::vector<Formula> antecedent, Succedent succedent);

  std::span<const Formula> antecedent() const { return antecedent_; }
  const Succedent& succedent() const { return succedent_; }
  bool contains(Formula f) const;
  bool empty_judgment() const {
    return antecedent_.empty() && succedent_.is_absurd();
  }

  friend bool operator==(const Sequent&, const Sequent&) = default;

 private:
  std::vector<Formula> antecedent_;
  Succedent succedent_;
};

// Total order used for enumerations and witness selection: lighter first,
// then by canonical text.
bool sequent_less(const Sequent& a, const Sequent& b);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " at column " + std::to_string(column)),
        column_(column) {}
  // 1-based column (in bytes) of the offending token.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// "|-" with neither antecedent nor succedent.
class EmptyJudgmentError : public std::runtime_error {
 public:
  EmptyJudgmentError()
      : std::runtime_error("empty judgment: '|-' needs an antecedent or a succedent") {}
};

Formula parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);

std::string print_formula(Formula f);
std::string print_sequent(const Sequent& s);

int weight(Formula f);
int sequent_weight(const Sequent& s);

// All distinct subformulas of the sequent's formulas, canonically ordered.
std::vector<Formula> subformulas(const Sequent& s);
std::vector<Formula> subformulas(std::span<const Formula> formulas);

// Atom names occurring in the formulas, sorted by name.
std::vector<std::string> atom_names(std::span<const Formula> formulas);

}  // namespace coreseq

template <>
struct std::hash<coreseq::Formula> {
  std::size_t operator()(coreseq::Formula f) const noexcept { return f.id(); }
};

template <>
struct std::hash<coreseq::Sequent> {
  std::size_t operator()(const coreseq::Sequent& s) const noexcept {
    std::size_t h = s.succedent().is_absurd() ? 0x9e3779b9u : s.succedent().formula().id() + 1;
    for (auto f : s.antecedent()) h = h * 1000003u ^ (f.id() + 0x51u);
    return h;
  }
};
