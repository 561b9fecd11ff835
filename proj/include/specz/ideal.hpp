#pragma once

#include <bit>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "specz/groebner.hpp"
#include "specz/poly.hpp"

namespace specz {

/// Exact quotient a / b for polynomials; throws when b does not divide a.
template <class K>
Poly<K> divide_exact(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroInput, "division by the zero polynomial");
  const TermOrder ord = a.order();
  Terms<K> rem = a.terms(), quo;
  while (!rem.empty()) {
    if (!b.lead_monomial().divides(rem.front().m))
      fail(ErrorCode::InvalidArgument, "inexact polynomial division");
    Monomial m = rem.front().m / b.lead_monomial();
    K c = rem.front().c / b.lead_coefficient();
    quo.push_back({m, c});
    rem = terms_sub_mul(rem, c, m, b.terms(), ord);
  }
  return Poly<K>(a.ring(), std::move(quo));
}

/// Ideal of a polynomial ring given by generators, with a lazily computed
/// and then immutable reduced Groebner basis shared between copies.
template <class K>
class Ideal {
 public:
  using P = Poly<K>;

  Ideal() = default;
  Ideal(RingPtr ring, std::vector<P> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      require_same_ring(ring_, g.ring());
      gens_.push_back(std::move(g));
    }
  }
  static Ideal unit(RingPtr ring) { return Ideal(ring, {P::constant(ring, K(1))}); }
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<P>& gens() const { return gens_; }

  /// Reduced Groebner basis under the ring's order.
  const std::vector<P>& basis() const {
    std::call_once(cache_->once, [this] {
      PivotScope scope;
      std::vector<Terms<K>> in;
      in.reserve(gens_.size());
      for (const auto& g : gens_) in.push_back(g.terms());
      for (auto& t : groebner_basis(in, ring_->term_order())) cache_->gb.emplace_back(ring_, std::move(t), true);
      cache_->pivots = scope.certificate();
    });
    for (const auto& f : cache_->pivots.factors()) PivotScope::note(f.poly, f.tag);
    return cache_->gb;
  }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    const auto& b = basis();
    return b.size() == 1 && b[0].is_constant();
  }
  bool is_homogeneous() const {
    for (const auto& g : gens_)
      if (!g.is_homogeneous()) return false;
    return true;
  }

  P normal_form(const P& f) const {
    require_same_ring(ring_, f.ring());
    const auto& b = basis();
    std::vector<const Terms<K>*> ptrs;
    for (const auto& g : b) ptrs.push_back(&g.terms());
    return P(ring_, reduce(f.terms(), ptrs, ring_->term_order()), true);
  }

  bool contains(const P& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& o) const {
    for (const auto& g : o.gens())
      if (!contains(g)) return false;
    return true;
  }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : basis()) out.push_back(g.lead_monomial());
    return out;
  }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_);
    const auto& x = a.basis();
    const auto& y = b.basis();
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].terms() != y[i].terms()) return false;
    return true;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].str();
    return s + ")";
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<P> gb;
    Certificate pivots;
  };

  RingPtr ring_;
  std::vector<P> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using QIdeal = Ideal<Rational>;
using FIdeal = Ideal<RatFunc>;

// -- ring extensions for elimination --------------------------------------

/// Ring with `extra` new variables in front, eliminated first (block order).
inline RingPtr elimination_ring(const RingPtr& r, std::size_t extra) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < extra; ++i) vars.push_back("_t" + std::to_string(i));
  vars.insert(vars.end(), r->vars().begin(), r->vars().end());
  return std::make_shared<const Ring>(r->params(), std::move(vars), r->order().kind, static_cast<int>(extra));
}

inline std::vector<int> shift_map(std::size_t n, int offset) {
  std::vector<int> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(i) + offset;
  return m;
}

// -- basic operations ------------------------------------------------------

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_ring(a.ring(), b.ring());
  auto g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return Ideal<K>(a.ring(), std::move(g));
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Poly<K>> g;
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) g.push_back(x * y);
  return Ideal<K>(a.ring(), std::move(g));
}

template <class K>
Ideal<K> ideal_power(const Ideal<K>& a, unsigned e) {
  Ideal<K> r = Ideal<K>::unit(a.ring());
  for (unsigned i = 0; i < e; ++i) r = Ideal<K>(a.ring(), ideal_product(r, a).basis());
  return r;
}

/// I intersected with the subring without the variables in `vars`.
template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, const std::vector<std::size_t>& vars) {
  const RingPtr& r = ideal.ring();
  const std::size_t n = r->nvars();
  std::vector<int> perm(n, -1);
  std::vector<std::string> names;
  int next = 0;
  for (auto v : vars) {
    if (v >= n) fail(ErrorCode::InvalidArgument, "elimination variable out of range");
    if (perm[v] >= 0) continue;
    perm[v] = next++;
    names.push_back(r->vars()[v]);
  }
  const int block = next;
  for (std::size_t v = 0; v < n; ++v)
    if (perm[v] < 0) {
      perm[v] = next++;
      names.push_back(r->vars()[v]);
    }
  auto er = std::make_shared<const Ring>(r->params(), names, r->order().kind, block);
  std::vector<Poly<K>> moved;
  for (const auto& g : ideal.gens()) moved.push_back(g.rebase(er, perm));
  Ideal<K> big(er, std::move(moved));
  std::vector<int> back(n, -1);
  for (std::size_t v = 0; v < n; ++v) back[static_cast<std::size_t>(perm[v])] = static_cast<int>(v);
  std::vector<Poly<K>> kept;
  for (const auto& g : big.basis()) {
    bool clean = true;
    for (int b = 0; b < block && clean; ++b)
      if (g.involves(static_cast<std::size_t>(b))) clean = false;
    if (clean) kept.push_back(g.rebase(r, back));
  }
  return Ideal<K>(r, std::move(kept));
}

/// I ∩ J via t*I + (1-t)*J with t eliminated.
template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& r = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal<K>::zero(r);
  RingPtr er = elimination_ring(r, 1);
  auto up = shift_map(r->nvars(), 1);
  Poly<K> t = Poly<K>::variable(er, 0);
  Poly<K> one_minus_t = Poly<K>::constant(er, K(1)) - t;
  std::vector<Poly<K>> g;
  for (const auto& f : a.gens()) g.push_back(t * f.rebase(er, up));
  for (const auto& f : b.gens()) g.push_back(one_minus_t * f.rebase(er, up));
  Ideal<K> big(er, std::move(g));
  std::vector<int> down(r->nvars() + 1, -1);
  for (std::size_t i = 0; i < r->nvars(); ++i) down[i + 1] = static_cast<int>(i);
  std::vector<Poly<K>> kept;
  for (const auto& f : big.basis())
    if (!f.involves(0)) kept.push_back(f.rebase(r, down));
  return Ideal<K>(r, std::move(kept));
}

template <class K>
Ideal<K> intersect_all(const std::vector<Ideal<K>>& list, const RingPtr& r) {
  if (list.empty()) return Ideal<K>::unit(r);
  Ideal<K> acc = list.front();
  for (std::size_t i = 1; i < list.size(); ++i) acc = intersect(acc, list[i]);
  return acc;
}

/// I : (g).
template <class K>
Ideal<K> colon(const Ideal<K>& a, const Poly<K>& g) {
  require_same_ring(a.ring(), g.ring());
  if (g.is_zero()) fail(ErrorCode::ZeroIdeal, "colon by the zero element");
  Ideal<K> meet = intersect(a, Ideal<K>(a.ring(), {g}));
  std::vector<Poly<K>> q;
  for (const auto& f : meet.basis()) q.push_back(divide_exact(f, g));
  return Ideal<K>(a.ring(), std::move(q));
}

/// I : J = intersection of I : g over the generators g of J.
template <class K>
Ideal<K> colon(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) fail(ErrorCode::ZeroIdeal, "colon by the zero ideal");
  std::vector<Ideal<K>> parts;
  for (const auto& g : b.basis()) parts.push_back(colon(a, g));
  return intersect_all(parts, a.ring());
}

/// Union of I : J^t, iterating colons until two consecutive bases agree.
template <class K>
Ideal<K> saturate(const Ideal<K>& a, const Ideal<K>& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroIdeal, "saturation by the zero ideal");
  Ideal<K> cur = a;
  for (;;) {
    Ideal<K> next = colon(cur, b);
    if (next == cur) return cur;
    cur = Ideal<K>(a.ring(), next.basis());
  }
}

/// I : f^infinity via (I + (1 - t f)) with t eliminated.
template <class K>
Ideal<K> saturate(const Ideal<K>& a, const Poly<K>& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroIdeal, "saturation by the zero element");
  const RingPtr& r = a.ring();
  RingPtr er = elimination_ring(r, 1);
  auto up = shift_map(r->nvars(), 1);
  std::vector<Poly<K>> g;
  for (const auto& x : a.gens()) g.push_back(x.rebase(er, up));
  g.push_back(Poly<K>::constant(er, K(1)) - Poly<K>::variable(er, 0) * f.rebase(er, up));
  Ideal<K> big(er, std::move(g));
  std::vector<int> down(r->nvars() + 1, -1);
  for (std::size_t i = 0; i < r->nvars(); ++i) down[i + 1] = static_cast<int>(i);
  std::vector<Poly<K>> kept;
  for (const auto& x : big.basis())
    if (!x.involves(0)) kept.push_back(x.rebase(r, down));
  return Ideal<K>(r, std::move(kept));
}

/// f in rad(J)  <=>  J : f^infinity = (1).
template <class K>
bool in_radical(const Poly<K>& f, const Ideal<K>& j) {
  if (f.is_zero()) return true;
  return saturate(j, f).is_unit();
}

/// rad(J) contains I.
template <class K>
bool radical_contains(const Ideal<K>& j, const Ideal<K>& i) {
  for (const auto& g : i.gens())
    if (!in_radical(g, j)) return false;
  return true;
}

template <class K>
bool same_radical(const Ideal<K>& a, const Ideal<K>& b) {
  return radical_contains(a, b) && radical_contains(b, a);
}

// -- dimension and length --------------------------------------------------

/// Largest number of variables independent modulo a monomial ideal
/// (restricted to component `comp`).
inline int independent_set_dimension(const std::vector<Monomial>& lead, std::size_t nvars, int comp = 0) {
  std::vector<unsigned> supports;
  for (const auto& m : lead) {
    if (m.comp != comp) continue;
    unsigned s = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (m.e[v] != 0) s |= 1u << v;
    supports.push_back(s);
  }
  int best = -1;
  const unsigned full = nvars == 0 ? 0u : ((1u << nvars) - 1u);
  for (unsigned set = 0;; ++set) {
    bool independent = true;
    for (auto s : supports)
      if ((s & ~set) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, std::popcount(set));
    if (set == full) break;
  }
  return best;
}

/// dim R/I; throws UnitIdeal (dimension -1) when 1 is in I.
template <class K>
int krull_dim(const Ideal<K>& i) {
  if (i.is_unit()) fail(ErrorCode::UnitIdeal, "dimension of the zero ring (reported as -1)");
  return independent_set_dimension(i.leading_monomials(), i.ring()->nvars());
}

/// dim R/I, or -1 for the unit ideal.
template <class K>
int dimension_or_minus_one(const Ideal<K>& i) {
  return i.is_unit() ? -1 : krull_dim(i);
}

/// Height of I as n - dim R/I (polynomial rings are catenary and
/// equidimensional); the unit ideal has height n + 1 by convention.
template <class K>
int height(const Ideal<K>& i) {
  int n = static_cast<int>(i.ring()->nvars());
  return i.is_unit() ? n + 1 : n - krull_dim(i);
}

/// Number of monomials (in component `comp`) outside the leading module;
/// -1 when infinite.
inline long count_standard_monomials(const std::vector<Monomial>& lead, std::size_t nvars, int comp = 0) {
  if (independent_set_dimension(lead, nvars, comp) > 0) return -1;
  std::vector<Monomial> stack{Monomial{}};
  stack.back().comp = comp;
  std::set<std::array<int16_t, kMaxVars>> seen{stack.back().e};
  long count = 0;
  while (!stack.empty()) {
    Monomial m = stack.back();
    stack.pop_back();
    bool standard = true;
    for (const auto& l : lead)
      if (l.comp == comp && l.divides(m)) {
        standard = false;
        break;
      }
    if (!standard) continue;
    ++count;
    for (std::size_t v = 0; v < nvars; ++v) {
      Monomial x = m;
      ++x.e[v];
      if (seen.insert(x.e).second) stack.push_back(x);
    }
  }
  return count;
}

/// Vector-space dimension of R/I for zero-dimensional I.
template <class K>
long finite_colength(const Ideal<K>& i) {
  if (i.is_unit()) return 0;
  if (krull_dim(i) != 0) fail(ErrorCode::NotZeroDimensional, "ideal is not zero-dimensional");
  return count_standard_monomials(i.leading_monomials(), i.ring()->nvars());
}

}  // namespace specz

namespace specz {

/// Reduced basis over Q(u) with its specialization certificate: the cleared
/// basis elements live in Q[u][X], and the certificate multiplies every
/// cleared denominator with every Q[u]-leading coefficient of the cleared
/// elements. Away from its zero set the evaluated cleared basis has the
/// same leading-term ideal as the specialized ideal.
struct CertifiedBasis {
  std::vector<FPoly> basis;
  std::vector<FPoly> cleared;
  Certificate cert;
};

inline CertifiedBasis reduced_basis(const FIdeal& ideal) {
  CertifiedBasis out;
  out.basis = ideal.basis();
  for (const auto& g : out.basis) {
    auto [c, lcd] = clear_content(g);
    out.cert.add(lcd, Provenance::Denominator);
    out.cert.add(c.lead_coefficient().num(), Provenance::LeadingCoefficient);
    out.cleared.push_back(std::move(c));
  }
  return out;
}

/// Over Q there is nothing to certify.
inline std::pair<std::vector<QPoly>, Certificate> reduced_basis(const QIdeal& ideal) {
  return {ideal.basis(), Certificate{}};
}

}  // namespace specz
