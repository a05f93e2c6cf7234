#include "coreseq/formula.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

namespace coreseq {

namespace detail {

struct FormulaNode {
  Connective kind;
  std::string name;
  const FormulaNode* left = nullptr;
  const FormulaNode* right = nullptr;
  int weight = 1;
  std::string text;
  std::size_t id = 0;
};

}  // namespace detail

namespace {

using detail::FormulaNode;

int precedence(Connective c) {
  switch (c) {
    case Connective::Imp: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    case Connective::Neg: return 4;
    case Connective::Atom: return 5;
  }
  return 0;
}

std::string parenthesize(const FormulaNode* n, bool wrap) {
  return wrap ? "(" + n->text + ")" : n->text;
}

// ∧ and ∨ associate to the left, → to the right.
std::string render(Connective kind, const FormulaNode* l, const FormulaNode* r) {
  const int p = precedence(kind);
  switch (kind) {
    case Connective::Neg:
      return "~" + parenthesize(l, precedence(l->kind) < p);
    case Connective::And:
      return parenthesize(l, precedence(l->kind) < p) + " & " +
             parenthesize(r, precedence(r->kind) <= p);
    case Connective::Or:
      return parenthesize(l, precedence(l->kind) < p) + " | " +
             parenthesize(r, precedence(r->kind) <= p);
    case Connective::Imp:
      return parenthesize(l, precedence(l->kind) <= p) + " -> " +
             parenthesize(r, precedence(r->kind) < p);
    case Connective::Atom:
      break;
  }
  return {};
}

class FormulaTable {
 public:
  static FormulaTable& instance() {
    static FormulaTable table;
    return table;
  }

  const FormulaNode* atom(std::string_view name) {
    std::lock_guard lock(mu_);
    auto it = atoms_.find(std::string(name));
    if (it != atoms_.end()) return it->second;
    auto& n = nodes_.emplace_back();
    n.kind = Connective::Atom;
    n.name = std::string(name);
    n.text = n.name;
    n.id = nodes_.size() - 1;
    atoms_.emplace(n.name, &n);
    return &n;
  }

  const FormulaNode* compound(Connective kind, const FormulaNode* l,
                              const FormulaNode* r) {
    const Key key{kind, l->id, r ? r->id : 0};
    std::lock_guard lock(mu_);
    auto it = compounds_.find(key);
    if (it != compounds_.end()) return it->second;
    auto& n = nodes_.emplace_back();
    n.kind = kind;
    n.left = l;
    n.right = r;
    n.weight = 1 + l->weight + (r ? r->weight : 0);
    n.text = render(kind, l, r);
    n.id = nodes_.size() - 1;
    compounds_.emplace(key, &n);
    return &n;
  }

 private:
  struct Key {
    Connective kind;
    std::size_t left, right;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return (k.left * 0x9e3779b97f4a7c15ull) ^ (k.right * 0xc2b2ae3d27d4eb4full) ^
             static_cast<std::size_t>(k.kind);
    }
  };

  std::mutex mu_;
  std::deque<FormulaNode> nodes_;
  std::unordered_map<std::string, const FormulaNode*> atoms_;
  std::unordered_map<Key, const FormulaNode*, KeyHash> compounds_;
};

}  // namespace

Formula Formula::atom(std::string_view name) {
  return Formula(FormulaTable::instance().atom(name));
}
Formula Formula::neg(Formula sub) {
  return Formula(FormulaTable::instance().compound(Connective::Neg, sub.node_, nullptr));
}
Formula Formula::conj(Formula l, Formula r) {
  return Formula(FormulaTable::instance().compound(Connective::And, l.node_, r.node_));
}
Formula Formula::disj(Formula l, Formula r) {
  return Formula(FormulaTable::instance().compound(Connective::Or, l.node_, r.node_));
}
Formula Formula::imp(Formula l, Formula r) {
  return Formula(FormulaTable::instance().compound(Connective::Imp, l.node_, r.node_));
}

Connective Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
Formula Formula::left() const { return Formula(node_->left); }
Formula Formula::right() const { return Formula(node_->right); }
int Formula::weight() const { return node_->weight; }
const std::string& Formula::text() const { return node_->text; }
std::size_t Formula::id() const { return node_->id; }

bool canonical_less(Formula a, Formula b) {
  if (a == b) return false;
  if (a.weight() != b.weight()) return a.weight() > b.weight();
  return a.text() < b.text();
}

Sequent::Sequent(std::vector<Formula> antecedent, Succedent succedent)
    : antecedent_(std::move(antecedent)), succedent_(succedent) {
  std::sort(antecedent_.begin(), antecedent_.end(), canonical_less);
  antecedent_.erase(std::unique(antecedent_.begin(), antecedent_.end()),
                    antecedent_.end());
}

bool Sequent::contains(Formula f) const {
  return std::binary_search(antecedent_.begin(), antecedent_.end(), f,
                            canonical_less);
}

bool sequent_less(const Sequent& a, const Sequent& b) {
  const int wa = sequent_weight(a), wb = sequent_weight(b);
  if (wa != wb) return wa < wb;
  return print_sequent(a) < print_sequent(b);
}

// {{{ Parsing

namespace {

enum class Tok { Ident, Not, And, Or, Imp, Turnstile, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Imp: return "'->'";
    case Tok::Turnstile: return "'|-'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
}

std::vector<Token> tokenize(std::string_view s) {
  // Unicode aliases, UTF-8 encoded.
  static const std::pair<std::string_view, Tok> kAliases[] = {
      {"\xC2\xAC", Tok::Not},           // ¬
      {"\xE2\x88\xA7", Tok::And},       // ∧
      {"\xE2\x88\xA8", Tok::Or},        // ∨
      {"\xE2\x86\x92", Tok::Imp},       // →
      {"\xE2\x8A\xA2", Tok::Turnstile}, // ⊢
  };
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (s.substr(i, 2) == "|-") {
      out.push_back({Tok::Turnstile, "|-", col});
      i += 2;
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::Imp, "->", col});
      i += 2;
      continue;
    }
    bool matched = true;
    switch (c) {
      case '~': out.push_back({Tok::Not, "~", col}); break;
      case '&': out.push_back({Tok::And, "&", col}); break;
      case '|': out.push_back({Tok::Or, "|", col}); break;
      case '(': out.push_back({Tok::LParen, "(", col}); break;
      case ')': out.push_back({Tok::RParen, ")", col}); break;
      case ',': out.push_back({Tok::Comma, ",", col}); break;
      default: matched = false;
    }
    if (matched) {
      ++i;
      continue;
    }
    bool alias = false;
    for (const auto& [spelling, tok] : kAliases) {
      if (s.substr(i, spelling.size()) == spelling) {
        out.push_back({tok, std::string(spelling), col});
        i += spelling.size();
        alias = true;
        break;
      }
    }
    if (!alias) {
      throw SyntaxError("unexpected character '" + std::string(1, c) + "'", col);
    }
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula implication() {
    Formula lhs = disjunction();
    if (peek() == Tok::Imp) {
      ++pos_;
      return Formula::imp(lhs, implication());
    }
    return lhs;
  }

  Tok peek() const { return toks_[pos_].kind; }
  const Token& current() const { return toks_[pos_]; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(std::string_view expected) const {
    const auto& t = current();
    throw SyntaxError("expected " + std::string(expected) + ", found " +
                          std::string(describe(t.kind)),
                      t.column);
  }

 private:
  Formula disjunction() {
    Formula f = conjunction();
    while (peek() == Tok::Or) {
      ++pos_;
      f = Formula::disj(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek() == Tok::And) {
      ++pos_;
      f = Formula::conj(f, unary());
    }
    return f;
  }

  Formula unary() {
    switch (peek()) {
      case Tok::Not:
        ++pos_;
        return Formula::neg(unary());
      case Tok::Ident: {
        Formula a = Formula::atom(current().text);
        ++pos_;
        return a;
      }
      case Tok::LParen: {
        ++pos_;
        Formula f = implication();
        if (peek() != Tok::RParen) fail("')'");
        ++pos_;
        return f;
      }
      default:
        fail("formula");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(tokenize(text));
  if (p.peek() == Tok::End) throw SyntaxError("empty formula", 1);
  Formula f = p.implication();
  if (p.peek() != Tok::End) p.fail("end of input");
  return f;
}

Sequent parse_sequent(std::string_view text) {
  Parser p(tokenize(text));
  std::vector<Formula> antecedent;
  if (p.peek() != Tok::Turnstile) {
    antecedent.push_back(p.implication());
    while (p.peek() == Tok::Comma) {
      p.advance();
      antecedent.push_back(p.implication());
    }
  }
  if (p.peek() != Tok::Turnstile) p.fail("',' or '|-'");
  p.advance();
  if (p.peek() == Tok::End) {
    if (antecedent.empty()) throw EmptyJudgmentError();
    return Sequent(std::move(antecedent), Succedent::absurd());
  }
  Formula succ = p.implication();
  if (p.peek() != Tok::End) p.fail("end of input");
  return Sequent(std::move(antecedent), Succedent::conclusion(succ));
}

// }}}

std::string print_formula(Formula f) { return f.text(); }

std::string print_sequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent().size(); ++i) {
    if (i) out += ", ";
    out += s.antecedent()[i].text();
  }
  out += out.empty() ? "|-" : " |-";
  if (!s.succedent().is_absurd()) out += " " + s.succedent().formula().text();
  return out;
}

int weight(Formula f) { return f.weight(); }

int sequent_weight(const Sequent& s) {
  int w = s.succedent().weight();
  for (auto f : s.antecedent()) w += f.weight();
  return w;
}

std::vector<Formula> subformulas(std::span<const Formula> formulas) {
  std::vector<Formula> out;
  std::vector<Formula> stack(formulas.begin(), formulas.end());
  std::unordered_map<std::size_t, bool> seen;
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (!seen.emplace(f.id(), true).second) continue;
    out.push_back(f);
    switch (f.kind()) {
      case Connective::Atom: break;
      case Connective::Neg: stack.push_back(f.sub()); break;
      default:
        stack.push_back(f.left());
        stack.push_back(f.right());
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Formula> subformulas(const Sequent& s) {
  std::vector<Formula> roots(s.antecedent().begin(), s.antecedent().end());
  if (!s.succedent().is_absurd()) roots.push_back(s.succedent().formula());
  return subformulas(roots);
}

std::vector<std::string> atom_names(std::span<const Formula> formulas) {
  std::set<std::string> names;
  for (auto f : subformulas(formulas))
    if (f.is_atom()) names.insert(f.name());
  return {names.begin(), names.end()};
}

}  // namespace coreseq
