#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "specz/certificate.hpp"
#include "specz/monomial.hpp"
#include "specz/rational.hpp"
#include "specz/ratfunc.hpp"

namespace specz {

template <class K>
struct Term {
  Monomial m;
  K c;
  friend bool operator==(const Term&, const Term&) = default;
};

/// A term list sorted strictly decreasing under some TermOrder. Shared by
/// plain polynomials and by free-module vectors in the Groebner engine.
template <class K>
using Terms = std::vector<Term<K>>;

// -- coefficient helpers ---------------------------------------------------

inline std::string coeff_str(const Rational& c, std::span<const std::string>) { return c.str(); }
inline std::string coeff_str(const RatFunc& c, std::span<const std::string> params) {
  return c.str(params);
}
inline bool coeff_is_scalar(const Rational&) { return true; }
inline bool coeff_is_scalar(const RatFunc& c) { return c.is_constant(); }
inline Rational coeff_scalar(const Rational& c) { return c; }
inline Rational coeff_scalar(const RatFunc& c) { return c.constant_value(); }

template <class K>
K coeff_from_rational(const Rational& r) {
  return K(r);
}

// -- term list algebra -----------------------------------------------------

template <class K>
Terms<K> terms_add(const Terms<K>& a, const Terms<K>& b, const TermOrder& ord, bool subtract = false) {
  Terms<K> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : (j == b.size() ? 1 : ord.compare(a[i].m, b[j].m));
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back(b[j++]);
      if (subtract) r.back().c = -r.back().c;
    } else {
      K s = subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
      if (!s.is_zero()) r.push_back({a[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

/// a - c * m * b in one pass; m is a plain monomial (comp ignored).
template <class K>
Terms<K> terms_sub_mul(const Terms<K>& a, const K& c, const Monomial& m, const Terms<K>& b,
                       const TermOrder& ord) {
  Terms<K> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial mb;
  auto shifted = [&](std::size_t k) {
    Monomial x = b[k].m;
    for (std::size_t v = 0; v < kMaxVars; ++v) x.e[v] = static_cast<int16_t>(x.e[v] + m.e[v]);
    return x;
  };
  if (j < b.size()) mb = shifted(j);
  while (i < a.size() || j < b.size()) {
    int cmp = i == a.size() ? -1 : (j == b.size() ? 1 : ord.compare(a[i].m, mb));
    if (cmp > 0) {
      r.push_back(a[i++]);
    } else if (cmp < 0) {
      r.push_back({mb, -(c * b[j].c)});
      if (++j < b.size()) mb = shifted(j);
    } else {
      K s = a[i].c - c * b[j].c;
      if (!s.is_zero()) r.push_back({mb, std::move(s)});
      ++i;
      if (++j < b.size()) mb = shifted(j);
    }
  }
  return r;
}

template <class K>
Terms<K> terms_scale(Terms<K> a, const K& c) {
  if (c.is_zero()) return {};
  for (auto& t : a) t.c = t.c * c;
  return a;
}

template <class K>
Terms<K> terms_mul_term(const Terms<K>& a, const K& c, const Monomial& m) {
  Terms<K> r;
  if (c.is_zero()) return r;
  r.reserve(a.size());
  for (const auto& t : a) {
    Monomial x = t.m;
    for (std::size_t v = 0; v < kMaxVars; ++v) x.e[v] = static_cast<int16_t>(x.e[v] + m.e[v]);
    r.push_back({x, t.c * c});
  }
  return r;
}

/// Sorts and combines an arbitrary term list.
template <class K>
Terms<K> terms_normalize(Terms<K> t, const TermOrder& ord) {
  std::sort(t.begin(), t.end(), [&](const Term<K>& x, const Term<K>& y) { return ord.greater(x.m, y.m); });
  Terms<K> r;
  r.reserve(t.size());
  for (auto& x : t) {
    if (!r.empty() && r.back().m == x.m) {
      r.back().c = r.back().c + x.c;
      if (r.back().c.is_zero()) r.pop_back();
    } else if (!x.c.is_zero()) {
      r.push_back(std::move(x));
    }
  }
  return r;
}

template <class K>
Terms<K> terms_mul(const Terms<K>& a, const Terms<K>& b, const TermOrder& ord) {
  if (a.empty() || b.empty()) return {};
  if (a.size() < b.size()) return terms_mul(b, a, ord);
  Terms<K> acc;
  for (const auto& t : b) acc = terms_add(acc, terms_mul_term(a, t.c, t.m), ord);
  return acc;
}

}  // namespace specz
