#pragma once

#include <span>
#include <string>

#include "specz/param_poly.hpp"

namespace specz {

/// Element of Q(u): num/den in lowest terms with a monic denominator, so
/// that two equal functions always have identical representations.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rational(c)) {}         // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(Rational(c)) {}          // NOLINT(google-explicit-constructor)
  RatFunc(ParamPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc param(std::size_t i) { return RatFunc(ParamPoly::variable(i)); }

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  Rational constant_value() const { return num_.constant_value(); }

  Rational eval(std::span<const Rational> point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) fail(ErrorCode::DenominatorVanishes, "denominator vanishes at the point");
    return num_.eval(point) / d;
  }

  RatFunc operator-() const { return raw(-num_, den_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b.scaled(a.constant_value());
    if (b.is_constant()) return a.scaled(b.constant_value());
    if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ * b.num_, ParamPoly(1));
    ParamPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    ParamPoly n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    ParamPoly d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
    return monic_den(std::move(n), std::move(d));
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) fail(ErrorCode::DenominatorVanishes, "division by the zero function");
    return a * b.inverse();
  }

  RatFunc inverse() const {
    if (is_zero()) fail(ErrorCode::DenominatorVanishes, "inverse of the zero function");
    return monic_den(den_, num_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    return raw(num_.scaled(c), den_);
  }

  RatFunc pow(unsigned e) const { return raw(num_.pow(e), den_.pow(e)); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;
  friend bool operator<(const RatFunc& a, const RatFunc& b) {
    if (a.num_ == b.num_) return a.den_ < b.den_;
    return a.num_ < b.num_;
  }

  std::string str(std::span<const std::string> names) const {
    if (den_.is_one()) return num_.str(names);
    auto wrap = [&](const ParamPoly& p) {
      std::string s = p.str(names);
      return p.terms().size() > 1 || (!p.is_constant() && !p.leading_coefficient().is_one())
                 ? "(" + s + ")"
                 : s;
    };
    return wrap(num_) + "/" + wrap(den_);
  }

 private:
  static RatFunc raw(ParamPoly n, ParamPoly d) {
    RatFunc r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }

  static RatFunc monic_den(ParamPoly n, ParamPoly d) {
    if (n.is_zero()) return {};
    const Rational& lc = d.leading_coefficient();
    if (!lc.is_one()) {
      Rational inv = Rational(1) / lc;
      n = n.scaled(inv);
      d = d.scaled(inv);
    }
    return raw(std::move(n), std::move(d));
  }

  static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract) {
    if (a.den_ == b.den_) {
      ParamPoly n = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      if (a.den_.is_one()) return raw(std::move(n), a.den_);
      return RatFunc(std::move(n), a.den_);
    }
    ParamPoly g = gcd(a.den_, b.den_);
    ParamPoly ca = exact_div(b.den_, g), cb = exact_div(a.den_, g);
    ParamPoly n = subtract ? a.num_ * ca - b.num_ * cb : a.num_ * ca + b.num_ * cb;
    return RatFunc(std::move(n), a.den_ * ca);
  }

  void normalize() {
    if (den_.is_zero()) fail(ErrorCode::DenominatorVanishes, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = ParamPoly(1);
      return;
    }
    ParamPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    *this = monic_den(std::move(num_), std::move(den_));
  }

  ParamPoly num_;
  ParamPoly den_;
};

}  // namespace specz
