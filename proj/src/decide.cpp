#include "coreseq/decide.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <string>
#include <unordered_map>

namespace coreseq {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

// Iterates every submask of `m`, including `m` and 0.
template <class F>
void for_submasks(Mask m, F&& f) {
  Mask s = m;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

struct GoalKey {
  Mask mask;
  int succ;
  bool operator==(const GoalKey&) const = default;
};

struct GoalKeyHash {
  std::size_t operator()(const GoalKey& k) const noexcept {
    return std::hash<Mask>{}(k.mask * 0x9e3779b97f4a7c15ull + static_cast<Mask>(k.succ));
  }
};

struct Instance {
  RuleName rule;
  std::uint32_t conclusion;
  std::uint32_t premises[2];
  std::uint8_t count;
};

constexpr int kUnreached = std::numeric_limits<int>::max();

class Search {
 public:
  Search(const Sequent& root, Mode mode, const SearchLimits& limits)
      : mode_(mode), limits_(limits) {
    universe_ = subformulas(root);
    n_ = static_cast<int>(universe_.size());
    if (n_ > 62) {
      throw ResourceLimitError("sequent has more than 62 distinct subformulas", stats_);
    }
    stats_.mode = mode;
    absurd_ = n_;
    std::unordered_map<std::size_t, int> local;
    for (int i = 0; i < n_; ++i) local[universe_[i].id()] = i;
    kind_.resize(n_);
    left_.assign(n_, -1);
    right_.assign(n_, -1);
    weight_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      const Formula f = universe_[i];
      kind_[i] = f.kind();
      weight_[i] = f.weight();
      if (!f.is_atom()) left_[i] = local.at(f.left().id());
      if (f.kind() != Connective::Atom && f.kind() != Connective::Neg)
        right_[i] = local.at(f.right().id());
    }
    build_truth_tables();

    Mask m = 0;
    for (auto f : root.antecedent()) m |= bit(local.at(f.id()));
    const int succ = root.succedent().is_absurd() ? absurd_ : local.at(root.succedent().formula().id());
    root_ = intern(m, succ);
  }

  DecisionResult run() {
    for (std::uint32_t g = 0; g < goals_.size(); ++g) expand(g);
    stats_.distinct_goals = goals_.size();
    stats_.rule_instances = instances_.size();
    solve();

    DecisionResult result;
    result.stats = stats_;
    if (height_[root_] == kUnreached) return result;
    result.verdict = Verdict::Provable;
    result.min_height = height_[root_];
    result.derivation = reconstruct(root_);
    return result;
  }

 private:
  // {{{ Local universe

  void build_truth_tables() {
    std::vector<int> atoms;
    for (int i = 0; i < n_; ++i)
      if (kind_[i] == Connective::Atom) atoms.push_back(i);
    if (!limits_.classical_pruning || atoms.size() > 6) {
      pruning_ = false;
      return;
    }
    pruning_ = true;
    const unsigned rows = 1u << atoms.size();
    full_ = rows == 64 ? ~Mask{0} : (Mask{1} << rows) - 1;
    table_.assign(n_, 0);
    // Subformulas are ordered heaviest first, so fill from the back.
    for (int i = n_ - 1; i >= 0; --i) {
      switch (kind_[i]) {
        case Connective::Atom: {
          const auto j = std::find(atoms.begin(), atoms.end(), i) - atoms.begin();
          for (unsigned r = 0; r < rows; ++r)
            if (r & (1u << j)) table_[i] |= Mask{1} << r;
          break;
        }
        case Connective::Neg: table_[i] = ~table_[left_[i]] & full_; break;
        case Connective::And: table_[i] = table_[left_[i]] & table_[right_[i]]; break;
        case Connective::Or: table_[i] = table_[left_[i]] | table_[right_[i]]; break;
        case Connective::Imp: table_[i] = (~table_[left_[i]] | table_[right_[i]]) & full_; break;
      }
    }
  }

  bool classically_valid(Mask mask, int succ) const {
    if (!pruning_) return true;
    Mask rows = full_;
    for (Mask m = mask; m; m &= m - 1) rows &= table_[std::countr_zero(m)];
    if (succ == absurd_) return rows == 0;
    return (rows & ~table_[succ]) == 0;
  }

  int goal_weight(Mask mask, int succ) const {
    int w = succ == absurd_ ? 0 : weight_[succ];
    for (Mask m = mask; m; m &= m - 1) w += weight_[std::countr_zero(m)];
    return w;
  }

  // }}}
  // {{{ Goal graph

  std::uint32_t intern(Mask mask, int succ) {
    ++stats_.goals_expanded;
    auto [it, fresh] = index_.try_emplace(GoalKey{mask, succ}, static_cast<std::uint32_t>(goals_.size()));
    if (fresh) {
      goals_.push_back({mask, succ});
      stats_.max_weight_seen = std::max(stats_.max_weight_seen, goal_weight(mask, succ));
      if (goals_.size() > limits_.goal_cap) {
        stats_.distinct_goals = goals_.size();
        throw ResourceLimitError("distinct goal cap of " + std::to_string(limits_.goal_cap) + " exceeded", stats_);
      }
    }
    return it->second;
  }

  bool admissible(Mask mask, int succ) {
    if (classically_valid(mask, succ)) return true;
    ++stats_.pruned_premises;
    return false;
  }

  void emit(RuleName rule, std::uint32_t g, Mask m1, int s1) {
    if (!admissible(m1, s1)) return;
    const auto p = intern(m1, s1);
    instances_.push_back({rule, g, {p, p}, 1});
  }

  void emit(RuleName rule, std::uint32_t g, Mask m1, int s1, Mask m2, int s2) {
    if (!admissible(m1, s1) || !admissible(m2, s2)) return;
    const auto p1 = intern(m1, s1);
    const auto p2 = intern(m2, s2);
    instances_.push_back({rule, g, {p1, p2}, 2});
  }

  void expand(std::uint32_t g) {
    const Mask M = goals_[g].mask;
    const int S = goals_[g].succ;
    first_instance_.push_back(static_cast<std::uint32_t>(instances_.size()));

    if (S != absurd_ && M == bit(S)) instances_.push_back({RuleName::Ax, g, {0, 0}, 0});

    if (S != absurd_) expand_right(g, M, S);
    for (Mask rest = M; rest; rest &= rest - 1) expand_left(g, M, S, std::countr_zero(rest));
  }

  void expand_right(std::uint32_t g, Mask M, int S) {
    const int A = left_[S], B = right_[S];
    switch (kind_[S]) {
      case Connective::Atom:
        break;
      case Connective::Neg:
        if (!(M & bit(A))) emit(RuleName::RNeg, g, M | bit(A), absurd_);
        break;
      case Connective::And:
        for_submasks(M, [&](Mask d) {
          if (!classically_valid(d, A)) return;
          const Mask rest = M & ~d;
          for_submasks(d, [&](Mask e) { emit(RuleName::RAnd, g, d, A, rest | e, B); });
        });
        break;
      case Connective::Or:
        emit(RuleName::ROr1, g, M, A);
        if (B != A) emit(RuleName::ROr2, g, M, B);
        break;
      case Connective::Imp:
        if (M & bit(A)) break;
        emit(RuleName::RImpA, g, M | bit(A), absurd_);
        emit(RuleName::RImpB, g, M, B);
        emit(RuleName::RImpB, g, M | bit(A), B);
        break;
    }
  }

  void expand_left(std::uint32_t g, Mask M, int S, int P) {
    const Mask R0 = M & ~bit(P);
    const int A = left_[P], B = right_[P];
    const bool formula_succ = S != absurd_;
    switch (kind_[P]) {
      case Connective::Atom:
        break;
      case Connective::Neg:
        if (formula_succ) break;
        emit(RuleName::LNeg, g, R0, A);
        emit(RuleName::LNeg, g, M, A);
        break;
      case Connective::And: {
        if (mode_ == Mode::StrictTable && !formula_succ) break;
        const Mask parts = bit(A) | bit(B);
        if (R0 & parts) break;
        for (Mask x : {R0, M}) {
          for_submasks(parts, [&](Mask t) {
            if (t) emit(RuleName::LAnd, g, x | t, S);
          });
        }
        break;
      }
      case Connective::Or: {
        // Premises A, D1 |- S1 and B, D2 |- S2 with D1, D2 free of the side
        // formula and together covering the conclusion's context.
        std::vector<std::pair<int, int>> succs;
        if (formula_succ) succs = {{S, S}, {S, absurd_}, {absurd_, S}};
        else succs = {{absurd_, absurd_}};
        for_submasks(M & ~bit(A), [&](Mask d1) {
          const Mask need = R0 & ~d1;
          if (need & bit(B)) return;
          const Mask free = M & ~need & ~bit(B);
          for_submasks(free, [&](Mask e) {
            for (auto [s1, s2] : succs)
              emit(RuleName::LOr, g, d1 | bit(A), s1, need | e | bit(B), s2);
          });
        });
        break;
      }
      case Connective::Imp: {
        if (mode_ == Mode::StrictTable && !formula_succ) break;
        for_submasks(M, [&](Mask d1) {
          if (!classically_valid(d1, A)) return;
          const Mask need = R0 & ~d1;
          if (need & bit(B)) return;
          const Mask free = M & ~need & ~bit(B);
          for_submasks(free, [&](Mask e) { emit(RuleName::LImp, g, d1, A, need | e | bit(B), S); });
        });
        break;
      }
    }
  }

  // }}}
  // {{{ Least fixpoint of minimal height

  // Knuth's generalisation of Dijkstra: instance cost is 1 + max over its
  // premises, goals are finalised in order of height.
  void solve() {
    const auto G = goals_.size();
    first_instance_.push_back(static_cast<std::uint32_t>(instances_.size()));
    height_.assign(G, kUnreached);
    std::vector<int> best(G, kUnreached);
    std::vector<std::uint8_t> pending(instances_.size());

    std::vector<std::uint32_t> user_start(G + 1, 0);
    for (const auto& in : instances_) {
      ++user_start[in.premises[0] + 1];
      if (in.count == 2 && in.premises[1] != in.premises[0]) ++user_start[in.premises[1] + 1];
    }
    for (std::size_t i = 0; i < G; ++i) user_start[i + 1] += user_start[i];
    std::vector<std::uint32_t> users(user_start[G]);
    {
      auto fill = user_start;
      for (std::uint32_t k = 0; k < instances_.size(); ++k) {
        const auto& in = instances_[k];
        if (in.count == 0) continue;
        users[fill[in.premises[0]]++] = k;
        pending[k] = 1;
        if (in.count == 2 && in.premises[1] != in.premises[0]) {
          users[fill[in.premises[1]]++] = k;
          pending[k] = 2;
        }
      }
    }

    std::vector<std::vector<std::uint32_t>> buckets(1);
    for (const auto& in : instances_) {
      if (in.count == 0 && best[in.conclusion] > 0) {
        best[in.conclusion] = 0;
        buckets[0].push_back(in.conclusion);
      }
    }
    for (std::size_t h = 0; h < buckets.size(); ++h) {
      for (std::size_t i = 0; i < buckets[h].size(); ++i) {
        const auto g = buckets[h][i];
        if (height_[g] != kUnreached) continue;
        height_[g] = static_cast<int>(h);
        if (g == root_) return;
        for (auto u = user_start[g]; u < user_start[g + 1]; ++u) {
          const auto k = users[u];
          if (--pending[k] != 0) continue;
          const auto& in = instances_[k];
          int cand = height_[in.premises[0]];
          if (in.count == 2) cand = std::max(cand, height_[in.premises[1]]);
          ++cand;
          if (height_[in.conclusion] == kUnreached && cand < best[in.conclusion]) {
            best[in.conclusion] = cand;
            if (buckets.size() <= static_cast<std::size_t>(cand)) buckets.resize(cand + 1);
            buckets[cand].push_back(in.conclusion);
          }
        }
      }
    }
  }

  Sequent to_sequent(std::uint32_t g) const {
    std::vector<Formula> ante;
    for (Mask m = goals_[g].mask; m; m &= m - 1) ante.push_back(universe_[std::countr_zero(m)]);
    const int s = goals_[g].succ;
    return Sequent(std::move(ante), s == absurd_ ? Succedent::absurd() : Succedent::conclusion(universe_[s]));
  }

  std::vector<std::string> premise_texts(const Instance& in) const {
    std::vector<std::string> out;
    for (int i = 0; i < in.count; ++i) out.push_back(print_sequent(to_sequent(in.premises[i])));
    return out;
  }

  // Among instances achieving the minimal height, the first by rule order,
  // then by the canonical text of the premises.
  Derivation reconstruct(std::uint32_t g) {
    if (auto it = built_.find(g); it != built_.end()) return it->second;
    const int h = height_[g];
    const Instance* chosen = nullptr;
    std::vector<std::string> chosen_texts;
    for (auto k = first_instance_[g]; k < first_instance_[g + 1]; ++k) {
      const auto& in = instances_[k];
      int cost = 0;
      if (in.count > 0) {
        int hp = height_[in.premises[0]];
        if (in.count == 2) hp = std::max(hp, height_[in.premises[1]]);
        if (hp >= h) continue;  // also excludes unreached premises
        cost = hp + 1;
      }
      if (cost != h) continue;
      if (chosen && in.rule > chosen->rule) continue;
      auto texts = premise_texts(in);
      if (chosen && in.rule == chosen->rule && texts >= chosen_texts) continue;
      chosen = &in;
      chosen_texts = std::move(texts);
    }
    std::vector<Derivation> premises;
    for (int i = 0; i < chosen->count; ++i) premises.push_back(reconstruct(chosen->premises[i]));
    Derivation d = Derivation::make(chosen->rule, to_sequent(g), std::move(premises));
    built_.emplace(g, d);
    return d;
  }

  // }}}

  Mode mode_;
  SearchLimits limits_;
  SearchStats stats_;

  std::vector<Formula> universe_;
  int n_ = 0;
  int absurd_ = 0;
  std::vector<Connective> kind_;
  std::vector<int> left_, right_, weight_;
  bool pruning_ = false;
  Mask full_ = 0;
  std::vector<Mask> table_;

  std::vector<GoalKey> goals_;
  std::unordered_map<GoalKey, std::uint32_t, GoalKeyHash> index_;
  std::vector<Instance> instances_;
  std::vector<std::uint32_t> first_instance_;
  std::uint32_t root_ = 0;
  std::vector<int> height_;
  std::unordered_map<std::uint32_t, Derivation> built_;
};

}  // namespace

std::uint64_t default_goal_cap() {
  if (const char* env = std::getenv("CORESEQ_MEMO_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

DecisionResult decide(const Sequent& s, Mode mode, const SearchLimits& limits) {
  return Search(s, mode, limits).run();
}

std::vector<std::pair<Sequent, DecisionResult>> provable_subsequents(const Sequent& s, Mode mode,
                                                                     const SearchLimits& limits) {
  const auto ante = s.antecedent();
  if (ante.size() > 12) throw std::invalid_argument("provable_subsequents: more than 12 antecedent formulas");
  std::vector<Succedent> succs{s.succedent()};
  if (!s.succedent().is_absurd()) succs.push_back(Succedent::absurd());

  std::vector<Sequent> candidates;
  for (Mask m = 0; m < bit(static_cast<int>(ante.size())); ++m) {
    std::vector<Formula> sub;
    for (std::size_t i = 0; i < ante.size(); ++i)
      if (m & bit(static_cast<int>(i))) sub.push_back(ante[i]);
    for (const auto& succ : succs) candidates.emplace_back(sub, succ);
  }
  std::sort(candidates.begin(), candidates.end(), sequent_less);

  std::vector<std::pair<Sequent, DecisionResult>> out;
  for (auto& c : candidates) {
    auto r = decide(c, mode, limits);
    if (r.provable()) out.emplace_back(std::move(c), std::move(r));
  }
  return out;
}

}  // namespace coreseq
