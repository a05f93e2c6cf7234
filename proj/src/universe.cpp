#include "coreseq/universe.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "coreseq/parallel.hpp"

namespace coreseq {

unsigned default_threads() {
  if (const char* env = std::getenv("CORESEQ_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::string> atom_letters(int count) {
  static const char* kLetters[] = {"p", "q", "r", "s", "t", "u"};
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i)
    out.push_back(i < 6 ? std::string(kLetters[i]) : "p" + std::to_string(i - 5));
  return out;
}

FormulaUniverse FormulaUniverse::over_atoms(const std::vector<std::string>& atoms, int max_weight) {
  // by_weight[w] holds every formula of weight exactly w.
  std::vector<std::vector<Formula>> by_weight(std::max(max_weight, 1) + 1);
  for (const auto& a : atoms) by_weight[1].push_back(Formula::atom(a));
  for (int w = 2; w <= max_weight; ++w) {
    for (auto f : by_weight[w - 1]) by_weight[w].push_back(Formula::neg(f));
    for (int lw = 1; lw <= w - 2; ++lw) {
      const int rw = w - 1 - lw;
      for (auto l : by_weight[lw])
        for (auto r : by_weight[rw]) {
          by_weight[w].push_back(Formula::conj(l, r));
          by_weight[w].push_back(Formula::disj(l, r));
          by_weight[w].push_back(Formula::imp(l, r));
        }
    }
  }
  FormulaUniverse u;
  for (int w = 1; w <= max_weight; ++w)
    u.formulas_.insert(u.formulas_.end(), by_weight[w].begin(), by_weight[w].end());
  std::sort(u.formulas_.begin(), u.formulas_.end(), canonical_less);
  u.description_ = std::to_string(atoms.size()) + " atoms, formula weight <= " + std::to_string(max_weight);
  return u;
}

FormulaUniverse FormulaUniverse::over_atoms(int atom_count, int max_weight) {
  return over_atoms(atom_letters(atom_count), max_weight);
}

FormulaUniverse FormulaUniverse::closure_of(std::span<const Formula> generators) {
  FormulaUniverse u;
  u.formulas_ = subformulas(generators);
  u.description_ = "subformulas of {";
  for (std::size_t i = 0; i < generators.size(); ++i)
    u.description_ += (i ? ", " : "") + generators[i].text();
  u.description_ += "}";
  return u;
}

namespace {

void extend(const std::vector<Formula>& by_weight, std::size_t from, int budget,
            std::vector<Formula>& current, const Succedent& succ, std::vector<Sequent>& out) {
  for (std::size_t i = from; i < by_weight.size(); ++i) {
    const int w = by_weight[i].weight();
    if (w > budget) break;
    current.push_back(by_weight[i]);
    out.emplace_back(current, succ);
    extend(by_weight, i + 1, budget - w, current, succ, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Sequent> sequent_family(const FormulaUniverse& u, int weight_cap, bool empty_antecedent_only) {
  std::vector<Formula> light = u.formulas();
  std::stable_sort(light.begin(), light.end(), [](Formula a, Formula b) { return a.weight() < b.weight(); });

  std::vector<Succedent> succs{Succedent::absurd()};
  for (auto f : light)
    if (f.weight() <= weight_cap) succs.push_back(Succedent::conclusion(f));

  std::vector<Sequent> family;
  for (const auto& succ : succs) {
    if (!succ.is_absurd()) family.emplace_back(std::vector<Formula>{}, succ);
    if (empty_antecedent_only) continue;
    std::vector<Formula> current;
    extend(light, 0, weight_cap - succ.weight(), current, succ, family);
  }

  // Sort once on precomputed keys rather than printing inside comparisons.
  std::vector<std::pair<int, std::string>> keys;
  keys.reserve(family.size());
  for (const auto& s : family) keys.emplace_back(sequent_weight(s), print_sequent(s));
  std::vector<std::size_t> order(family.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
  std::vector<Sequent> sorted;
  sorted.reserve(family.size());
  for (auto i : order) sorted.push_back(std::move(family[i]));
  return sorted;
}

}  // namespace coreseq
