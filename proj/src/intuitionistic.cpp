#include "coreseq/intuitionistic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "coreseq/parallel.hpp"

namespace coreseq {

// {{{ Contraction-free prover

namespace {

enum class IKind : std::uint8_t { Atom, Bot, And, Or, Imp };

// Formulas with a falsum constant; ~A is encoded as A -> bot.
class IntProver {
 public:
  int translate(Formula f) {
    switch (f.kind()) {
      case Connective::Atom: {
        auto [it, fresh] = atoms_.try_emplace(f.name(), 0);
        if (fresh) it->second = make(IKind::Atom, -1, -1);
        return it->second;
      }
      case Connective::Neg: return make(IKind::Imp, translate(f.sub()), bot());
      case Connective::And: return make(IKind::And, translate(f.left()), translate(f.right()));
      case Connective::Or: return make(IKind::Or, translate(f.left()), translate(f.right()));
      case Connective::Imp: return make(IKind::Imp, translate(f.left()), translate(f.right()));
    }
    return -1;
  }

  int bot() {
    if (bot_ < 0) bot_ = make(IKind::Bot, -1, -1);
    return bot_;
  }

  bool prove(std::vector<int> ctx, int goal) {
    std::sort(ctx.begin(), ctx.end());
    ctx.erase(std::unique(ctx.begin(), ctx.end()), ctx.end());
    Key key{ctx, goal};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool r = search(ctx, goal);
    memo_.emplace(std::move(key), r);
    return r;
  }

 private:
  struct Node {
    IKind kind;
    int a, b;
  };
  using Key = std::pair<std::vector<int>, int>;

  int make(IKind k, int a, int b) {
    if (k != IKind::Atom) {
      auto [it, fresh] = nodes_index_.try_emplace({static_cast<int>(k), a, b}, 0);
      if (!fresh) return it->second;
      it->second = static_cast<int>(nodes_.size());
    }
    nodes_.push_back({k, a, b});
    return static_cast<int>(nodes_.size()) - 1;
  }

  static std::vector<int> replace(const std::vector<int>& ctx, int out, std::initializer_list<int> in) {
    std::vector<int> r;
    r.reserve(ctx.size() + in.size());
    for (int x : ctx)
      if (x != out) r.push_back(x);
    r.insert(r.end(), in.begin(), in.end());
    return r;
  }

  bool has(const std::vector<int>& ctx, int f) const {
    return std::binary_search(ctx.begin(), ctx.end(), f);
  }

  bool search(const std::vector<int>& ctx, int goal) {
    if (has(ctx, goal) || (bot_ >= 0 && has(ctx, bot_))) return true;

    // Invertible left rules.
    for (int f : ctx) {
      const Node n = nodes_[f];
      if (n.kind == IKind::And) return prove(replace(ctx, f, {n.a, n.b}), goal);
      if (n.kind == IKind::Or)
        return prove(replace(ctx, f, {n.a}), goal) && prove(replace(ctx, f, {n.b}), goal);
      if (n.kind != IKind::Imp) continue;
      const Node ante = nodes_[n.a];
      switch (ante.kind) {
        case IKind::Bot: return prove(replace(ctx, f, {}), goal);
        case IKind::Atom:
          if (has(ctx, n.a)) return prove(replace(ctx, f, {n.b}), goal);
          break;
        case IKind::And: {
          const int inner = make(IKind::Imp, ante.b, n.b);
          return prove(replace(ctx, f, {make(IKind::Imp, ante.a, inner)}), goal);
        }
        case IKind::Or:
          return prove(replace(ctx, f, {make(IKind::Imp, ante.a, n.b), make(IKind::Imp, ante.b, n.b)}), goal);
        case IKind::Imp:
          break;
      }
    }

    // Invertible right rules.
    const Node g = nodes_[goal];
    if (g.kind == IKind::And) return prove(ctx, g.a) && prove(ctx, g.b);
    if (g.kind == IKind::Imp) return prove(replace(ctx, -1, {g.a}), g.b);

    // Non-invertible choices.
    if (g.kind == IKind::Or && (prove(ctx, g.a) || prove(ctx, g.b))) return true;
    for (int f : ctx) {
      const Node n = nodes_[f];
      if (n.kind != IKind::Imp || nodes_[n.a].kind != IKind::Imp) continue;
      const Node cd = nodes_[n.a];
      if (prove(replace(ctx, f, {make(IKind::Imp, cd.b, n.b)}), n.a) && prove(replace(ctx, f, {n.b}), goal))
        return true;
    }
    return false;
  }

  std::vector<Node> nodes_;
  std::map<std::tuple<int, int, int>, int> nodes_index_;
  std::unordered_map<std::string, int> atoms_;
  int bot_ = -1;
  std::map<Key, bool> memo_;
};

}  // namespace

Verdict decide_int(const Sequent& s) {
  IntProver prover;
  std::vector<int> ctx;
  for (auto f : s.antecedent()) ctx.push_back(prover.translate(f));
  const int goal = s.succedent().is_absurd() ? prover.bot() : prover.translate(s.succedent().formula());
  return prover.prove(std::move(ctx), goal) ? Verdict::Provable : Verdict::Unprovable;
}

// }}}
// {{{ Kripke models

KripkeModel::KripkeModel(std::vector<std::uint32_t> above, std::vector<std::vector<std::string>> valuation)
    : above_(std::move(above)), valuation_(std::move(valuation)) {
  if (above_.empty() || above_.size() != valuation_.size() || above_.size() > 32)
    throw std::invalid_argument("KripkeModel: world count mismatch");
  for (auto& v : valuation_) std::sort(v.begin(), v.end());
}

bool KripkeModel::well_formed() const {
  const int n = size();
  for (int w = 0; w < n; ++w) {
    if (!leq(0, w) || !leq(w, w)) return false;
    for (int v = 0; v < n; ++v) {
      if (!leq(w, v)) continue;
      if ((above_[v] & ~above_[w]) != 0) return false;
      for (const auto& a : valuation_[w])
        if (!std::binary_search(valuation_[v].begin(), valuation_[v].end(), a)) return false;
    }
  }
  return true;
}

std::uint32_t KripkeModel::forcing_set(Formula f) const {
  const int n = size();
  std::uint32_t out = 0;
  switch (f.kind()) {
    case Connective::Atom:
      for (int w = 0; w < n; ++w)
        if (std::binary_search(valuation_[w].begin(), valuation_[w].end(), f.name())) out |= 1u << w;
      return out;
    case Connective::And: return forcing_set(f.left()) & forcing_set(f.right());
    case Connective::Or: return forcing_set(f.left()) | forcing_set(f.right());
    case Connective::Neg: {
      const auto a = forcing_set(f.sub());
      for (int w = 0; w < n; ++w)
        if ((above_[w] & a) == 0) out |= 1u << w;
      return out;
    }
    case Connective::Imp: {
      const auto a = forcing_set(f.left()), b = forcing_set(f.right());
      for (int w = 0; w < n; ++w)
        if ((above_[w] & a & ~b) == 0) out |= 1u << w;
      return out;
    }
  }
  return out;
}

bool KripkeModel::forces(int w, Formula f) const { return (forcing_set(f) >> w) & 1u; }

bool KripkeModel::refutes(const Sequent& s) const {
  for (auto f : s.antecedent())
    if (!forces(0, f)) return false;
  return s.succedent().is_absurd() || !forces(0, s.succedent().formula());
}

namespace {

// Rooted partial orders on n worlds, one per isomorphism class. World 0 is
// the root; above[w] includes w.
std::vector<std::vector<std::uint32_t>> rooted_orders(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);

  auto encode = [&](const std::vector<std::uint32_t>& above, const std::vector<int>& perm) {
    std::uint64_t code = 0;
    for (auto [i, j] : pairs) code = (code << 1) | ((above[perm[i]] >> perm[j]) & 1u);
    return code;
  };

  std::set<std::uint64_t> seen;
  std::vector<std::vector<std::uint32_t>> out;
  const std::size_t m = pairs.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::vector<std::uint32_t> above(n, 0);
    above[0] = (1u << n) - 1;
    for (int w = 1; w < n; ++w) above[w] = 1u << w;
    for (std::size_t k = 0; k < m; ++k)
      if ((bits >> k) & 1u) above[pairs[k].first] |= 1u << pairs[k].second;
    bool order = true;
    for (int w = 1; w < n && order; ++w)
      for (int v = 1; v < n && order; ++v) {
        if (w == v || !((above[w] >> v) & 1u)) continue;
        if ((above[v] >> w) & 1u) order = false;                // antisymmetry
        if ((above[v] & ~above[w]) != 0) order = false;          // transitivity
      }
    if (!order) continue;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t canonical = ~std::uint64_t{0};
    do {
      canonical = std::min(canonical, encode(above, perm));
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    if (seen.insert(canonical).second) out.push_back(std::move(above));
  }
  return out;
}

}  // namespace

std::optional<KripkeModel> countermodel(const Sequent& s, int max_worlds) {
  if (max_worlds < 1 || max_worlds > 5) throw std::invalid_argument("countermodel: max_worlds must be in 1..5");
  std::vector<Formula> roots(s.antecedent().begin(), s.antecedent().end());
  if (!s.succedent().is_absurd()) roots.push_back(s.succedent().formula());
  const auto atoms = atom_names(roots);

  for (int n = 1; n <= max_worlds; ++n) {
    for (const auto& above : rooted_orders(n)) {
      std::vector<std::uint32_t> upsets;
      for (std::uint32_t u = 0; u < (1u << n); ++u) {
        bool up = true;
        for (int w = 0; w < n && up; ++w)
          if (((u >> w) & 1u) && (above[w] & ~u)) up = false;
        if (up) upsets.push_back(u);
      }
      // Odometer over one up-set per atom.
      std::vector<std::size_t> choice(atoms.size(), 0);
      while (true) {
        std::vector<std::vector<std::string>> val(n);
        for (std::size_t a = 0; a < atoms.size(); ++a)
          for (int w = 0; w < n; ++w)
            if ((upsets[choice[a]] >> w) & 1u) val[w].push_back(atoms[a]);
        KripkeModel model(above, std::move(val));
        if (model.refutes(s)) return model;
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == upsets.size()) choice[k++] = 0;
        if (k == choice.size()) break;
      }
    }
  }
  return std::nullopt;
}

// }}}
// {{{ Cross check

CrossCheckReport cross_check(std::span<const Sequent> family, const std::string& description, int weight_cap,
                             Mode mode, unsigned threads) {
  struct Row {
    bool core = false, intu = false;
  };
  std::vector<Row> rows(family.size());
  parallel_for(family.size(), threads, [&](std::size_t i) {
    rows[i].core = decide(family[i], mode).provable();
    rows[i].intu = decide_int(family[i]) == Verdict::Provable;
  });

  CrossCheckReport r;
  r.universe = description;
  r.weight_cap = weight_cap;
  r.mode = mode;
  r.sequents = family.size();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& s = family[i];
    r.core_provable += rows[i].core;
    r.int_provable += rows[i].intu;
    if (rows[i].core && !rows[i].intu) r.violations.push_back(s);
    if (!rows[i].core && rows[i].intu) r.divergences.push_back(s);
    if (s.antecedent().empty() && !s.succedent().is_absurd()) {
      ++r.theorem_candidates;
      if (rows[i].core != rows[i].intu) r.theorem_mismatches.push_back(s);
    }
  }
  return r;
}

CrossCheckReport cross_check(const FormulaUniverse& universe, int weight_cap, Mode mode, unsigned threads) {
  const auto family = sequent_family(universe, weight_cap);
  return cross_check(family, universe.description(), weight_cap, mode, threads);
}

// }}}

}  // namespace coreseq
