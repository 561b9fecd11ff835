#pragma once

#include <span>
#include <string>
#include <vector>

#include "specz/ring.hpp"
#include "specz/terms.hpp"

namespace specz {

/// Polynomial in X over K (Rational for Q, RatFunc for Q(u)) attached to a
/// ring. Terms are kept sorted decreasingly under the ring's order with no
/// zero coefficients, so the leading term is terms().front().
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, Terms<K> terms, bool sorted = false) : ring_(std::move(ring)), terms_(std::move(terms)) {
    if (!sorted) terms_ = terms_normalize(std::move(terms_), order());
  }

  static Poly constant(RingPtr ring, const K& c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static Poly variable(RingPtr ring, std::size_t i, int power = 1) {
    Monomial m;
    m.e[i] = static_cast<int16_t>(power);
    Poly p(std::move(ring));
    p.terms_.push_back({m, K(1)});
    return p;
  }
  static Poly monomial(RingPtr ring, const Monomial& m, const K& c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const Terms<K>& terms() const { return terms_; }
  TermOrder order() const { return ring_->term_order(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  const Term<K>& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().m; }
  const K& lead_coefficient() const { return terms_.front().c; }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
  }

  int degree_in(std::size_t v) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, t.m.e[v]);
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_[0].m.degree();
    for (const auto& t : terms_)
      if (t.m.degree() != d) return false;
    return true;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check(a, b);
    return Poly(a.ring_, terms_add(a.terms_, b.terms_, a.order()), true);
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    check(a, b);
    return Poly(a.ring_, terms_add(a.terms_, b.terms_, a.order(), true), true);
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    check(a, b);
    return Poly(a.ring_, terms_mul(a.terms_, b.terms_, a.order()), true);
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const K& c) const { return Poly(ring_, terms_scale(terms_, c), true); }
  Poly times_term(const K& c, const Monomial& m) const {
    return Poly(ring_, terms_mul_term(terms_, c, m), true);
  }

  Poly pow(unsigned e) const {
    Poly r = constant(ring_, K(1)), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  Poly monic() const {
    if (is_zero() || lead_coefficient().is_one()) return *this;
    return scaled(K(1) / lead_coefficient());
  }

  Poly derivative(std::size_t v) const {
    Terms<K> out;
    for (const auto& t : terms_) {
      if (t.m.e[v] == 0) continue;
      Monomial m = t.m;
      m.e[v] = static_cast<int16_t>(m.e[v] - 1);
      out.push_back({m, t.c * K(Rational(static_cast<long>(t.m.e[v])))});
    }
    return Poly(ring_, std::move(out));
  }

  /// Moves the polynomial into `target`, sending variable i to var_map[i].
  Poly rebase(RingPtr target, std::span<const int> var_map) const {
    Terms<K> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        if (t.m.e[i] == 0) continue;
        if (var_map[i] < 0) fail(ErrorCode::RingMismatch, "variable has no image in the target ring");
        m.e[static_cast<std::size_t>(var_map[i])] = t.m.e[i];
      }
      out.push_back({m, t.c});
    }
    return Poly(std::move(target), std::move(out));
  }

  bool involves(std::size_t v) const {
    for (const auto& t : terms_)
      if (t.m.e[v] != 0) return true;
    return false;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

  std::string str() const {
    const auto& vars = ring_->vars();
    const auto& params = ring_->params();
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      std::string mono = monomial_string(std::span<const int16_t>(t.m.e.data(), vars.size()), vars);
      std::string body;
      bool neg = false;
      if (coeff_is_scalar(t.c)) {
        Rational c = coeff_scalar(t.c);
        neg = c.sign() < 0;
        if (neg) c = -c;
        body = mono.empty() ? c.str() : (c.is_one() ? mono : c.str() + "*" + mono);
      } else {
        std::string cs = coeff_str(t.c, params);
        bool compound = cs.find_first_of("+-/ ") != std::string::npos;
        if (compound) cs = "(" + cs + ")";
        body = mono.empty() ? cs : cs + "*" + mono;
      }
      if (first) out += neg ? "-" + body : body;
      else out += neg ? " - " + body : " + " + body;
      first = false;
    }
    return out;
  }

 private:
  static void check(const Poly& a, const Poly& b) { require_same_ring(a.ring_, b.ring_); }

  RingPtr ring_;
  Terms<K> terms_;
};

using QPoly = Poly<Rational>;
using FPoly = Poly<RatFunc>;

/// Coefficientwise evaluation u -> alpha (ring homomorphism where defined).
inline QPoly eval_poly(const FPoly& f, std::span<const Rational> alpha, const RingPtr& target) {
  Terms<Rational> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Rational c = t.c.eval(alpha);
    if (!c.is_zero()) out.push_back({t.m, c});
  }
  return QPoly(target, std::move(out), true);
}

inline QPoly eval_poly(const FPoly& f, std::span<const Rational> alpha) {
  return eval_poly(f, alpha, specialized_ring(f.ring()));
}

/// Lifts a Q-polynomial to the parameter ring (constant coefficients).
inline FPoly lift_poly(const QPoly& f, const RingPtr& target) {
  Terms<RatFunc> out;
  for (const auto& t : f.terms()) out.push_back({t.m, RatFunc(t.c)});
  return FPoly(target, std::move(out), true);
}

/// Multiplies f by the least common denominator of its coefficients and
/// divides by the rational content, so every coefficient is a polynomial in
/// u with integer coefficients of gcd 1. Returns the cleared polynomial and
/// the certificate lcd.
inline std::pair<FPoly, ParamPoly> clear_content(const FPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroInput, "clear_content of the zero polynomial");
  ParamPoly lcd(1);
  for (const auto& t : f.terms()) {
    const ParamPoly& d = t.c.den();
    if (d.is_one()) continue;
    lcd = exact_div(lcd * d, gcd(lcd, d));
  }
  lcd = lcd.monic();
  Terms<RatFunc> out;
  mpz_class den_lcm = 1;
  for (const auto& t : f.terms()) {
    ParamPoly c = exact_div(t.c.num() * lcd, t.c.den());
    for (const auto& pt : c.terms()) den_lcm = lcm(den_lcm, pt.second.den());
    out.push_back({t.m, RatFunc(std::move(c))});
  }
  // scale to integers, then divide out the integer content
  mpz_class content = 0;
  for (auto& t : out)
    for (const auto& pt : t.c.num().terms()) {
      mpq_class v = pt.second.value() * den_lcm;
      content = gcd(content, v.get_num());
    }
  Rational factor(mpz_class(den_lcm), content);
  const RatFunc& lead = out.front().c;
  if (lead.num().leading_coefficient().sign() < 0) factor = -factor;
  for (auto& t : out) t.c = t.c.scaled(factor);
  return {FPoly(f.ring(), std::move(out), true), lcd};
}

}  // namespace specz
