#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "specz/certificate.hpp"
#include "specz/terms.hpp"

namespace specz {

/// Resource guard for Buchberger runs: maximal (shifted) degree of a new
/// basis element and maximal number of S-pairs processed per run.
struct Budget {
  int max_degree = 24;
  long max_pairs = 100000;
};

namespace detail {
inline Budget& budget_slot() {
  thread_local Budget b;
  return b;
}
}  // namespace detail

inline const Budget& current_budget() { return detail::budget_slot(); }

/// Installs a budget for the current thread until destruction.
class BudgetScope {
 public:
  explicit BudgetScope(Budget b) : saved_(detail::budget_slot()) { detail::budget_slot() = b; }
  ~BudgetScope() { detail::budget_slot() = saved_; }
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

 private:
  Budget saved_;
};

template <class K>
bool lead_divides(const Terms<K>& g, const Monomial& m) {
  return g.front().m.comp == m.comp && g.front().m.divides(m);
}

/// Remainder of f on division by `basis` (leading terms first, then tails
/// when `full`). Every leading coefficient that drives a reduction step is
/// noted as a pivot so specializations can be certified.
template <class K>
Terms<K> reduce(Terms<K> f, const std::vector<const Terms<K>*>& basis, const TermOrder& ord,
                bool full = true) {
  Terms<K> done;
  while (!f.empty()) {
    const Monomial lm = f.front().m;
    const Terms<K>* reducer = nullptr;
    for (const auto* g : basis)
      if (lead_divides(*g, lm)) {
        reducer = g;
        break;
      }
    if (reducer) {
      note_pivot(f.front().c);
      note_pivot(reducer->front().c);
      K q = f.front().c / reducer->front().c;
      f = terms_sub_mul(f, q, lm / reducer->front().m, *reducer, ord);
    } else {
      if (!full) {
        done.insert(done.end(), f.begin(), f.end());
        break;
      }
      done.push_back(std::move(f.front()));
      f.erase(f.begin());
    }
  }
  return done;
}

template <class K>
Terms<K> reduce(const Terms<K>& f, const std::vector<Terms<K>>& basis, const TermOrder& ord, bool full = true) {
  std::vector<const Terms<K>*> ptrs;
  ptrs.reserve(basis.size());
  for (const auto& g : basis) ptrs.push_back(&g);
  return reduce(f, ptrs, ord, full);
}

template <class K>
Terms<K> make_monic(Terms<K> f) {
  if (f.empty() || f.front().c.is_one()) return f;
  note_pivot(f.front().c);
  K inv = K(1) / f.front().c;
  for (auto& t : f) t.c = t.c * inv;
  return f;
}

namespace detail {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

template <class K>
class Buchberger {
 public:
  explicit Buchberger(const TermOrder& ord) : ord_(ord) {}

  void add_generator(Terms<K> f) {
    if (f.empty()) return;
    if (f.front().m.comp != 0) ideal_case_ = false;
    for (const auto& t : f)
      if (t.m.comp != 0) ideal_case_ = false;
    pending_.push_back(std::move(f));
  }

  std::vector<Terms<K>> run() {
    for (auto& f : pending_) {
      Terms<K> h = reduce(std::move(f), active(), ord_);
      if (!h.empty()) insert(make_monic(std::move(h)));
    }
    pending_.clear();
    const Budget& budget = current_budget();
    long processed = 0;
    while (!pairs_.empty()) {
      if (++processed > budget.max_pairs)
        fail(ErrorCode::BudgetExceeded, "S-pair limit of " + std::to_string(budget.max_pairs) + " exceeded");
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      Terms<K> s = spoly(polys_[p.i], polys_[p.j], p.lcm);
      Terms<K> h = reduce(std::move(s), active(), ord_);
      if (h.empty()) continue;
      int deg = ord_.shifted_degree(h.front().m);
      if (deg > budget.max_degree)
        fail(ErrorCode::BudgetExceeded, "basis degree " + std::to_string(deg) + " exceeds limit " +
                                            std::to_string(budget.max_degree));
      insert(make_monic(std::move(h)));
    }
    return finish();
  }

 private:
  std::vector<const Terms<K>*> active() const {
    std::vector<const Terms<K>*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (in_basis_[k]) out.push_back(&polys_[k]);
    return out;
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    int da = ord_.shifted_degree(a.lcm), db = ord_.shifted_degree(b.lcm);
    if (da != db) return da < db;
    return ord_.compare(a.lcm, b.lcm) < 0;
  }

  Terms<K> spoly(const Terms<K>& f, const Terms<K>& g, const Monomial& l) const {
    Terms<K> a = terms_mul_term(f, K(1) / f.front().c, l / f.front().m);
    return terms_sub_mul(a, K(1) / g.front().c, l / g.front().m, g, ord_);
  }

  bool disjoint(const Monomial& a, const Monomial& b) const { return ideal_case_ && coprime(a, b); }

  /// Gebauer-Moeller update with the new element h.
  void insert(Terms<K> h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.front().m;
    polys_.push_back(std::move(h));
    in_basis_.push_back(false);

    std::vector<Pair> cand;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!in_basis_[g] || polys_[g].front().m.comp != lh.comp) continue;
      cand.push_back({g, hi, lcm(polys_[g].front().m, lh)});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      const Pair& p = cand[a];
      bool keep = disjoint(polys_[p.i].front().m, lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cand.size() && keep; ++b)
          if (cand[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (kept[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (const auto& p : kept)
      if (!disjoint(polys_[p.i].front().m, lh)) fresh.push_back(p);

    std::vector<Pair> old;
    for (const auto& p : pairs_) {
      bool drop = p.lcm.comp == lh.comp && lh.divides(p.lcm) &&
                  !(lcm(polys_[p.i].front().m, lh) == p.lcm) && !(lcm(polys_[p.j].front().m, lh) == p.lcm);
      if (!drop) old.push_back(p);
    }
    old.insert(old.end(), fresh.begin(), fresh.end());
    pairs_ = std::move(old);

    for (std::size_t g = 0; g < hi; ++g)
      if (in_basis_[g] && lead_divides(polys_[hi], polys_[g].front().m)) in_basis_[g] = false;
    in_basis_[hi] = true;
  }

  std::vector<Terms<K>> finish() {
    std::vector<Terms<K>> basis;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (in_basis_[k]) basis.push_back(polys_[k]);
    // drop elements whose leading term is divisible by another's
    std::vector<Terms<K>> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
        if (a == b) continue;
        if (lead_divides(basis[b], basis[a].front().m) && (basis[b].front().m != basis[a].front().m || b < a))
          redundant = true;
      }
      if (!redundant) minimal.push_back(basis[a]);
    }
    std::vector<Terms<K>> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<const Terms<K>*> others;
      for (std::size_t b = 0; b < minimal.size(); ++b)
        if (b != a) others.push_back(&minimal[b]);
      Terms<K> head{minimal[a].front()};
      Terms<K> tail(minimal[a].begin() + 1, minimal[a].end());
      tail = reduce(std::move(tail), others, ord_);
      head.insert(head.end(), tail.begin(), tail.end());
      reduced.push_back(make_monic(std::move(head)));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Terms<K>& x, const Terms<K>& y) { return ord_.greater(x.front().m, y.front().m); });
    return reduced;
  }

  TermOrder ord_;
  bool ideal_case_ = true;
  std::vector<Terms<K>> pending_;
  std::vector<Terms<K>> polys_;
  std::vector<bool> in_basis_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// Reduced Groebner basis (monic, inter-reduced, sorted by decreasing
/// leading term) of the submodule generated by `gens` under `ord`.
template <class K>
std::vector<Terms<K>> groebner_basis(const std::vector<Terms<K>>& gens, const TermOrder& ord) {
  detail::Buchberger<K> bb(ord);
  for (const auto& g : gens) bb.add_generator(g);
  return bb.run();
}

/// S-polynomial of two basis elements (zero when the components differ).
template <class K>
Terms<K> s_polynomial(const Terms<K>& f, const Terms<K>& g, const TermOrder& ord) {
  if (f.empty() || g.empty() || f.front().m.comp != g.front().m.comp) return {};
  Monomial l = lcm(f.front().m, g.front().m);
  Terms<K> a = terms_mul_term(f, K(1) / f.front().c, l / f.front().m);
  return terms_sub_mul(a, K(1) / g.front().c, l / g.front().m, g, ord);
}

}  // namespace specz
