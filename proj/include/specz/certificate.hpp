#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "specz/param_poly.hpp"
#include "specz/ratfunc.hpp"

namespace specz {

enum class Provenance { Denominator, LeadingCoefficient, Pivot };

inline std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Denominator: return "denominator";
    case Provenance::LeadingCoefficient: return "leading-coefficient";
    case Provenance::Pivot: return "pivot";
  }
  return "?";
}

/// Nonzero g in Q[u] such that every equality asserted alongside it holds
/// at each point alpha with g(alpha) != 0.
///
/// Stored as a list of monic, squarefree, pairwise coprime factors, each
/// tagged with where it came from. The product of the factors is the
/// certificate polynomial; the trivial certificate (no factors) is 1.
class Certificate {
 public:
  struct Factor {
    ParamPoly poly;
    Provenance tag;
  };

  Certificate() = default;

  static Certificate of(const ParamPoly& p, Provenance tag) {
    Certificate c;
    c.add(p, tag);
    return c;
  }

  void add(const ParamPoly& p, Provenance tag) {
    if (p.is_zero()) fail(ErrorCode::ZeroInput, "certificate factor must be nonzero");
    if (p.is_constant()) return;
    std::vector<Factor> todo{{squarefree_part(p), tag}};
    while (!todo.empty()) {
      Factor w = std::move(todo.back());
      todo.pop_back();
      if (w.poly.is_constant()) continue;
      bool split = false;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        ParamPoly g = gcd(factors_[i].poly, w.poly);
        if (g.is_constant()) continue;
        Factor f = std::move(factors_[i]);
        factors_.erase(factors_.begin() + static_cast<std::ptrdiff_t>(i));
        todo.push_back({exact_div(f.poly, g).monic(), f.tag});
        todo.push_back({g, f.tag});
        todo.push_back({exact_div(w.poly, g).monic(), w.tag});
        split = true;
        break;
      }
      if (!split) factors_.push_back(std::move(w));
    }
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  }

  void merge(const Certificate& o) {
    for (const auto& f : o.factors_) add(f.poly, f.tag);
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool trivial() const { return factors_.empty(); }

  bool vanishes_at(std::span<const Rational> point) const {
    for (const auto& f : factors_)
      if (f.poly.eval(point).is_zero()) return true;
    return false;
  }

  ParamPoly poly() const {
    ParamPoly p(1);
    for (const auto& f : factors_) p *= f.poly;
    return p;
  }

  /// "1" or a product of parenthesised factors.
  std::string str(std::span<const std::string> names) const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& f : factors_) {
      if (!s.empty()) s += "*";
      s += "(" + f.poly.str(names) + ")";
    }
    return s;
  }

  friend bool operator==(const Certificate& a, const Certificate& b) {
    return a.poly() == b.poly();
  }

 private:
  std::vector<Factor> factors_;
};

/// Product of certificates with merged provenance, squarefree-reduced.
inline Certificate certificate_product(std::span<const Certificate> certs) {
  Certificate out;
  for (const auto& c : certs) out.merge(c);
  return out;
}

/// Records the parameter polynomials whose non-vanishing keeps a Q(u)
/// computation on the same path as its specialization. Scopes nest; every
/// active scope on the current thread receives each note.
class PivotScope {
 public:
  PivotScope() { stack().push_back(this); }
  ~PivotScope() { std::erase(stack(), this); }
  PivotScope(const PivotScope&) = delete;
  PivotScope& operator=(const PivotScope&) = delete;

  const Certificate& certificate() const { return cert_; }

  static void note(const ParamPoly& p, Provenance tag) {
    if (p.is_constant()) return;
    for (PivotScope* s : stack()) {
      if (!s->seen_.insert(p).second) continue;
      s->cert_.add(p, tag);
    }
  }

  static bool active() { return !stack().empty(); }

 private:
  static std::vector<PivotScope*>& stack() {
    thread_local std::vector<PivotScope*> s;
    return s;
  }

  Certificate cert_;
  std::set<ParamPoly> seen_;
};

inline void note_pivot(const Rational&) {}

inline void note_pivot(const RatFunc& c) {
  if (c.is_constant() || !PivotScope::active()) return;
  PivotScope::note(c.num(), Provenance::Pivot);
  PivotScope::note(c.den(), Provenance::Denominator);
}

}  // namespace specz
