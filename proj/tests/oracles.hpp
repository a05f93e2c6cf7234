// Small independent computations the tests compare the library against.
#pragma once

#include <algorithm>
#include <cctype>
#include <random>
#include <string>

#include "coreseq/formula.hpp"
#include "coreseq/kernel.hpp"

namespace oracle {

// Node count read off a printed formula: every identifier and every
// connective symbol is one node.
inline int token_weight(const std::string& text) {
  int n = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      ++n;
      while (i + 1 < text.size() && (std::isalnum(static_cast<unsigned char>(text[i + 1])) || text[i + 1] == '_' ||
                                     text[i + 1] == '\''))
        ++i;
    } else if (c == '~' || c == '&' || c == '|') {
      if (c == '|' && i + 1 < text.size() && text[i + 1] == '-') {
        ++i;
        continue;
      }
      ++n;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      ++n;
      ++i;
    }
  }
  return n;
}

// Longest leaf-to-root chain of inference steps.
inline int steps(const coreseq::Derivation& d) {
  int best = -1;
  for (const auto& p : d.premises) best = std::max(best, steps(p));
  return best + 1;
}

inline coreseq::Formula random_formula(std::mt19937& rng, int depth, int atoms) {
  using coreseq::Formula;
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 4);
  const char* names[] = {"p", "q", "r", "s", "A", "B", "x1", "y'"};
  switch (pick(rng)) {
    case 0: {
      std::uniform_int_distribution<int> a(0, atoms - 1);
      return Formula::atom(names[a(rng)]);
    }
    case 1: return Formula::neg(random_formula(rng, depth - 1, atoms));
    case 2: return Formula::conj(random_formula(rng, depth - 1, atoms), random_formula(rng, depth - 1, atoms));
    case 3: return Formula::disj(random_formula(rng, depth - 1, atoms), random_formula(rng, depth - 1, atoms));
    default: return Formula::imp(random_formula(rng, depth - 1, atoms), random_formula(rng, depth - 1, atoms));
  }
}

// Fully parenthesised rendering, independent of the library printer.
inline std::string full_parens(coreseq::Formula f) {
  using coreseq::Connective;
  switch (f.kind()) {
    case Connective::Atom: return f.name();
    case Connective::Neg: return "~(" + full_parens(f.sub()) + ")";
    case Connective::And: return "(" + full_parens(f.left()) + ") & (" + full_parens(f.right()) + ")";
    case Connective::Or: return "(" + full_parens(f.left()) + ") | (" + full_parens(f.right()) + ")";
    case Connective::Imp: return "(" + full_parens(f.left()) + ") -> (" + full_parens(f.right()) + ")";
  }
  return {};
}

}  // namespace oracle
