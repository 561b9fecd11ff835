#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "specz/error.hpp"
#include "specz/rational.hpp"

namespace specz {

inline constexpr std::size_t kMaxParams = 4;

using ParamExp = std::array<int16_t, kMaxParams>;

inline int total_degree(const ParamExp& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

/// Polynomial in the parameters u_1..u_m with rational coefficients.
/// Terms are stored in strictly decreasing lex order, with no zero
/// coefficients. The parameter count is not stored: unused exponent slots
/// stay zero, so constants are shared by every parameter count.
class ParamPoly {
 public:
  using Term = std::pair<ParamExp, Rational>;

  ParamPoly() = default;
  ParamPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.push_back({ParamExp{}, c});
  }
  ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  ParamPoly(int c) : ParamPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static ParamPoly variable(std::size_t i) {
    if (i >= kMaxParams) fail(ErrorCode::InvalidArgument, "too many parameters");
    ParamPoly p;
    ParamExp e{};
    e[i] = 1;
    p.terms_.push_back({e, Rational(1)});
    return p;
  }

  /// Builds from arbitrary (possibly repeated or zero) terms.
  static ParamPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first > b.first; });
    ParamPoly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
      } else if (!t.second.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == ParamExp{});
  }
  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    return is_constant() ? terms_[0].second : Rational(0);
  }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].second.is_one(); }
  const Rational& leading_coefficient() const { return terms_.front().second; }
  const ParamExp& leading_exponent() const { return terms_.front().first; }

  int degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.first));
    return d;
  }
  int degree_in(std::size_t v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max<int>(d, t.first[v]);
    return d;
  }
  /// Number of parameter slots actually used (highest index + 1).
  std::size_t used_params() const {
    std::size_t n = 0;
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < kMaxParams; ++i)
        if (t.first[i] != 0) n = std::max(n, i + 1);
    return n;
  }

  ParamPoly operator-() const {
    ParamPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) { return merge(a, b, false); }
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return merge(a, b, true); }

  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b.scaled(a.terms_[0].second);
    if (b.is_constant()) return a.scaled(b.terms_[0].second);
    std::map<ParamExp, Rational, std::greater<>> acc;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        ParamExp e;
        for (std::size_t i = 0; i < kMaxParams; ++i) e[i] = static_cast<int16_t>(ea[i] + eb[i]);
        auto [it, inserted] = acc.try_emplace(e, ca * cb);
        if (!inserted) it->second += ca * cb;
      }
    ParamPoly r;
    for (auto& [e, c] : acc)
      if (!c.is_zero()) r.terms_.push_back({e, c});
    return r;
  }

  ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
  ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  ParamPoly scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    ParamPoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  ParamPoly times_monomial(const ParamExp& m) const {
    ParamPoly r = *this;
    for (auto& t : r.terms_)
      for (std::size_t i = 0; i < kMaxParams; ++i) t.first[i] = static_cast<int16_t>(t.first[i] + m[i]);
    return r;
  }

  ParamPoly pow(unsigned e) const {
    ParamPoly r(1), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  /// Leading coefficient normalised to 1 (zero stays zero).
  ParamPoly monic() const {
    if (is_zero() || leading_coefficient().is_one()) return *this;
    return scaled(Rational(1) / leading_coefficient());
  }

  ParamPoly derivative(std::size_t v) const {
    std::vector<Term> out;
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      ParamExp f = e;
      f[v] = static_cast<int16_t>(f[v] - 1);
      out.push_back({f, c * Rational(static_cast<long>(e[v]))});
    }
    return from_terms(std::move(out));
  }

  Rational eval(std::span<const Rational> point) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < kMaxParams; ++i) {
        if (e[i] == 0) continue;
        if (i >= point.size())
          fail(ErrorCode::ArityMismatch, "point has fewer coordinates than parameters in use");
        t *= point[i].pow(static_cast<unsigned>(e[i]));
      }
      acc += t;
    }
    return acc;
  }

  /// Coefficient of v^k, as a polynomial in the remaining parameters.
  ParamPoly coefficient_in(std::size_t v, int k) const {
    ParamPoly r;
    for (const auto& [e, c] : terms_)
      if (e[v] == k) {
        ParamExp f = e;
        f[v] = 0;
        r.terms_.push_back({f, c});
      }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return a.first > b.first; });
    return r;
  }

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) = default;
  friend bool operator<(const ParamPoly& a, const ParamPoly& b) {
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
        [](const Term& x, const Term& y) {
          if (x.first != y.first) return x.first < y.first;
          return x.second < y.second;
        });
  }

  std::string str(std::span<const std::string> names) const;

 private:
  static ParamPoly merge(const ParamPoly& a, const ParamPoly& b, bool subtract) {
    ParamPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first > b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first > a.terms_[i].first) {
        r.terms_.push_back(b.terms_[j++]);
        if (subtract) r.terms_.back().second = -r.terms_.back().second;
      } else {
        Rational c = subtract ? a.terms_[i].second - b.terms_[j].second
                              : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].first, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline std::string monomial_string(std::span<const int16_t> e, std::span<const std::string> names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += i < names.size() ? names[i] : ("v" + std::to_string(i));
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

/// Shared term printer: "c*m" with signs folded into the joins.
template <class Iter, class MonoFn>
std::string format_terms(Iter begin, Iter end, MonoFn mono) {
  if (begin == end) return "0";
  std::string out;
  bool first = true;
  for (auto it = begin; it != end; ++it) {
    Rational c = it->second;
    std::string m = mono(it->first);
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    std::string body;
    if (m.empty()) body = c.str();
    else if (c.is_one()) body = m;
    else body = c.str() + "*" + m;
    if (first) out += neg ? "-" + body : body;
    else out += neg ? " - " + body : " + " + body;
    first = false;
  }
  return out;
}

inline std::string ParamPoly::str(std::span<const std::string> names) const {
  return format_terms(terms_.begin(), terms_.end(), [&](const ParamExp& e) {
    return monomial_string(std::span<const int16_t>(e.data(), e.size()), names);
  });
}

/// Exact quotient a / b; throws InvalidArgument when b does not divide a.
inline ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DenominatorVanishes, "polynomial division by zero");
  if (b.is_constant()) return a.scaled(Rational(1) / b.constant_value());
  ParamPoly rem = a, quo;
  const ParamExp& lb = b.leading_exponent();
  const Rational& cb = b.leading_coefficient();
  std::vector<ParamPoly::Term> qterms;
  while (!rem.is_zero()) {
    ParamExp e = rem.leading_exponent();
    for (std::size_t i = 0; i < kMaxParams; ++i) {
      if (e[i] < lb[i]) fail(ErrorCode::InvalidArgument, "inexact parameter polynomial division");
      e[i] = static_cast<int16_t>(e[i] - lb[i]);
    }
    Rational c = rem.leading_coefficient() / cb;
    qterms.push_back({e, c});
    rem -= b.times_monomial(e).scaled(c);
  }
  return ParamPoly::from_terms(std::move(qterms));
}

namespace detail {

inline int highest_var(const ParamPoly& p) { return static_cast<int>(p.used_params()) - 1; }

ParamPoly gcd_impl(const ParamPoly& a, const ParamPoly& b);

/// Monic gcd of the coefficients of p viewed as a polynomial in v.
inline ParamPoly content_in(const ParamPoly& p, std::size_t v) {
  ParamPoly g;
  for (int k = p.degree_in(v); k >= 0; --k) {
    ParamPoly c = p.coefficient_in(v, k);
    if (c.is_zero()) continue;
    g = gcd_impl(g, c);
    if (g.is_one()) break;
  }
  return g;
}

inline ParamPoly primitive_in(const ParamPoly& p, std::size_t v) {
  if (p.is_zero()) return p;
  return exact_div(p, content_in(p, v)).monic();
}

inline ParamPoly pseudo_remainder(ParamPoly a, const ParamPoly& b, std::size_t v) {
  int db = b.degree_in(v);
  ParamPoly lb = b.coefficient_in(v, db);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    int da = a.degree_in(v);
    ParamPoly la = a.coefficient_in(v, da);
    ParamExp shift{};
    shift[v] = static_cast<int16_t>(da - db);
    a = lb * a - (la * b).times_monomial(shift);
    // keep coefficients from growing between steps
    if (!a.is_zero()) a = a.monic();
  }
  return a;
}

inline ParamPoly gcd_impl(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return ParamPoly(1);
  int v = std::max(highest_var(a), highest_var(b));
  auto uv = static_cast<std::size_t>(v);
  if (a.degree_in(uv) == 0) return gcd_impl(a, content_in(b, uv));
  if (b.degree_in(uv) == 0) return gcd_impl(content_in(a, uv), b);
  ParamPoly ca = content_in(a, uv), cb = content_in(b, uv);
  ParamPoly c = gcd_impl(ca, cb);
  ParamPoly pa = exact_div(a, ca).monic(), pb = exact_div(b, cb).monic();
  if (pa.degree_in(uv) < pb.degree_in(uv)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    ParamPoly r = pseudo_remainder(pa, pb, uv);
    pa = std::move(pb);
    pb = r.is_zero() ? ParamPoly() : primitive_in(r, uv);
  }
  ParamPoly g = pa.degree_in(uv) > 0 ? primitive_in(pa, uv) : ParamPoly(1);
  return (c * g).monic();
}

}  // namespace detail

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) { return detail::gcd_impl(a, b); }

/// Product of the distinct irreducible factors of p (up to a scalar), monic.
inline ParamPoly squarefree_part(const ParamPoly& p) {
  if (p.is_zero() || p.is_constant()) return p.is_zero() ? p : ParamPoly(1);
  ParamPoly g = p;
  for (std::size_t v = 0; v < p.used_params(); ++v) {
    ParamPoly d = p.derivative(v);
    if (!d.is_zero()) g = gcd(g, d);
  }
  return exact_div(p, g).monic();
}

}  // namespace specz
