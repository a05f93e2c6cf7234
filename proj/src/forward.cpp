#include "coreseq/forward.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "coreseq/decide.hpp"

namespace coreseq {

ForwardClosure::ForwardClosure(std::span<const Formula> universe, Mode mode, std::size_t max_universe)
    : mode_(mode), universe_(universe.begin(), universe.end()) {
  std::sort(universe_.begin(), universe_.end(), canonical_less);
  universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
  if (universe_.size() > max_universe) {
    throw ResourceLimitError("forward closure universe of " + std::to_string(universe_.size()) +
                                 " formulas exceeds the bound of " + std::to_string(max_universe),
                             SearchStats{});
  }
  for (auto f : universe_) {
    if (f.is_atom()) continue;
    const bool closed = std::binary_search(universe_.begin(), universe_.end(), f.left(), canonical_less) &&
                        (f.kind() == Connective::Neg ||
                         std::binary_search(universe_.begin(), universe_.end(), f.right(), canonical_less));
    if (!closed) throw std::invalid_argument("universe is not subformula-closed at " + f.text());
  }
  n_ = static_cast<int>(universe_.size());
  saturate();
}

void ForwardClosure::saturate() {
  const int n = n_;
  const int absurd = n;
  std::unordered_map<std::size_t, int> local;
  for (int i = 0; i < n; ++i) local[universe_[i].id()] = i;
  auto index_of = [&](Formula f) {
    auto it = local.find(f.id());
    return it == local.end() ? -1 : it->second;
  };
  std::vector<int> left(n, -1), right(n, -1), neg_of(n, -1);
  for (int i = 0; i < n; ++i) {
    const Formula f = universe_[i];
    if (!f.is_atom()) left[i] = index_of(f.left());
    if (f.kind() != Connective::Atom && f.kind() != Connective::Neg) right[i] = index_of(f.right());
    if (f.kind() == Connective::Neg) neg_of[left[i]] = i;
  }
  auto of_kind = [&](Connective k) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
      if (universe_[i].kind() == k) out.push_back(i);
    return out;
  };
  const auto ands = of_kind(Connective::And), ors = of_kind(Connective::Or), imps = of_kind(Connective::Imp);

  just_.assign((std::size_t{1} << n) * (n + 1), std::nullopt);
  std::vector<std::size_t> queue;
  auto add = [&](std::uint32_t mask, int succ, RuleName rule, int p1 = -1, int p2 = -1) {
    const auto st = state(mask, succ);
    if (just_[st]) return;
    just_[st] = Justification{rule, {p1, p2}, (p1 >= 0) + (p2 >= 0)};
    queue.push_back(st);
  };
  auto bit = [](int i) { return std::uint32_t{1} << i; };
  const bool strict = mode_ == Mode::StrictTable;

  for (int i = 0; i < n; ++i) add(bit(i), i, RuleName::Ax);

  std::vector<std::size_t> processed;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const auto x = queue[qi];
    const auto xm = static_cast<std::uint32_t>(x / (n + 1));
    const int xs = static_cast<int>(x % (n + 1));
    const int xi = static_cast<int>(x);

    if (xs != absurd) {
      if (neg_of[xs] >= 0) add(xm | bit(neg_of[xs]), absurd, RuleName::LNeg, xi);
      for (int c : ors) {
        if (left[c] == xs) add(xm, c, RuleName::ROr1, xi);
        if (right[c] == xs) add(xm, c, RuleName::ROr2, xi);
      }
      for (int c : imps)
        if (right[c] == xs) add(xm & ~bit(left[c]), c, RuleName::RImpB, xi);
    } else {
      for (int a = 0; a < n; ++a) {
        if (!(xm & bit(a))) continue;
        if (neg_of[a] >= 0) add(xm & ~bit(a), neg_of[a], RuleName::RNeg, xi);
        for (int c : imps)
          if (left[c] == a) add(xm & ~bit(a), c, RuleName::RImpA, xi);
      }
    }
    if (!(strict && xs == absurd)) {
      for (int c : ands) {
        const std::uint32_t parts = bit(left[c]) | bit(right[c]);
        if (xm & parts) add((xm & ~parts) | bit(c), xs, RuleName::LAnd, xi);
      }
    }

    processed.push_back(x);
    // Two-premise rules: pair x with everything processed so far, itself included.
    for (const auto y : processed) {
      const auto ym = static_cast<std::uint32_t>(y / (n + 1));
      const int ys = static_cast<int>(y % (n + 1));
      const int yi = static_cast<int>(y);
      for (int dir = 0; dir < 2; ++dir) {
        const auto m1 = dir ? ym : xm, m2 = dir ? xm : ym;
        const int s1 = dir ? ys : xs, s2 = dir ? xs : ys;
        const int i1 = dir ? yi : xi, i2 = dir ? xi : yi;
        for (int c : ands)
          if (s1 == left[c] && s2 == right[c]) add(m1 | m2, c, RuleName::RAnd, i1, i2);
        if (!(strict && s2 == absurd)) {
          for (int c : imps)
            if (s1 == left[c] && (m2 & bit(right[c])))
              add(bit(c) | m1 | (m2 & ~bit(right[c])), s2, RuleName::LImp, i1, i2);
        }
        int s = -1;
        if (s1 == absurd && s2 == absurd) s = absurd;
        else if (s1 == absurd) s = s2;
        else if (s2 == absurd || s1 == s2) s = s1;
        if (s < 0) continue;
        for (int c : ors)
          if ((m1 & bit(left[c])) && (m2 & bit(right[c])))
            add(bit(c) | (m1 & ~bit(left[c])) | (m2 & ~bit(right[c])), s, RuleName::LOr, i1, i2);
      }
    }
  }
  order_ = std::move(queue);
}

std::optional<std::size_t> ForwardClosure::locate(const Sequent& s) const {
  std::uint32_t mask = 0;
  auto find = [&](Formula f) -> int {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), f, canonical_less);
    return (it != universe_.end() && *it == f) ? static_cast<int>(it - universe_.begin()) : -1;
  };
  for (auto f : s.antecedent()) {
    const int i = find(f);
    if (i < 0) return std::nullopt;
    mask |= std::uint32_t{1} << i;
  }
  int succ = n_;
  if (!s.succedent().is_absurd()) {
    succ = find(s.succedent().formula());
    if (succ < 0) return std::nullopt;
  }
  return state(mask, succ);
}

bool ForwardClosure::in_space(const Sequent& s) const { return locate(s).has_value(); }

bool ForwardClosure::derivable(const Sequent& s) const {
  auto st = locate(s);
  if (!st) throw std::out_of_range("sequent outside the forward closure space: " + print_sequent(s));
  return just_[*st].has_value();
}

Sequent ForwardClosure::to_sequent(std::size_t st) const {
  const auto mask = static_cast<std::uint32_t>(st / (n_ + 1));
  const int succ = static_cast<int>(st % (n_ + 1));
  std::vector<Formula> ante;
  for (int i = 0; i < n_; ++i)
    if (mask & (std::uint32_t{1} << i)) ante.push_back(universe_[i]);
  return Sequent(std::move(ante), succ == n_ ? Succedent::absurd() : Succedent::conclusion(universe_[succ]));
}

Derivation ForwardClosure::build(std::size_t st) const {
  const auto& j = *just_[st];
  std::vector<Derivation> premises;
  for (int i = 0; i < j.count; ++i) premises.push_back(build(static_cast<std::size_t>(j.premises[i])));
  return Derivation::make(j.rule, to_sequent(st), std::move(premises));
}

std::optional<Derivation> ForwardClosure::derivation(const Sequent& s) const {
  auto st = locate(s);
  if (!st || !just_[*st]) return std::nullopt;
  return build(*st);
}

std::vector<Sequent> ForwardClosure::derivable_sequents(int weight_cap) const {
  std::vector<Sequent> out;
  for (auto st : order_) {
    Sequent s = to_sequent(st);
    if (sequent_weight(s) <= weight_cap) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), sequent_less);
  return out;
}

std::vector<Sequent> forward_closure(std::span<const Formula> universe, int weight_cap, Mode mode) {
  return ForwardClosure(universe, mode).derivable_sequents(weight_cap);
}

}  // namespace coreseq
