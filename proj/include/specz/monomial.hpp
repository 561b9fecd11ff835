#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "specz/error.hpp"

namespace specz {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector x^e times the basis vector e_comp of a free module.
/// Plain polynomials use comp = 0.
struct Monomial {
  std::array<int16_t, kMaxVars> e{};
  int32_t comp = 0;

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }

  bool is_one() const {
    for (auto x : e)
      if (x != 0) return false;
    return true;
  }

  /// Divisibility ignores the component; callers check components.
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  friend Monomial operator*(Monomial a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i) a.e[i] = static_cast<int16_t>(a.e[i] + b.e[i]);
    a.comp = std::max(a.comp, b.comp);
    return a;
  }

  /// a / b, assuming b divides a; keeps a's component.
  friend Monomial operator/(Monomial a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i) a.e[i] = static_cast<int16_t>(a.e[i] - b.e[i]);
    return a;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
  return m;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

enum class OrderKind { GRevLex, Lex, GrLex };

inline std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::GRevLex: return "grevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
  }
  return "?";
}

inline OrderKind parse_order(const std::string& s) {
  if (s == "grevlex") return OrderKind::GRevLex;
  if (s == "lex") return OrderKind::Lex;
  if (s == "grlex" || s == "graded-lex" || s == "deglex") return OrderKind::GrLex;
  fail(ErrorCode::InvalidArgument, "unknown monomial order '" + s + "'");
}

/// Monomial order on the first `nvars` exponents. When `block` > 0 the
/// first `block` variables are compared first (grevlex on the block) and
/// only ties fall through to `kind` on the remaining variables, which is
/// the elimination order for that block.
struct MonomialOrder {
  OrderKind kind = OrderKind::GRevLex;
  int nvars = 0;
  int block = 0;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

  int compare(const Monomial& a, const Monomial& b) const {
    if (block > 0) {
      int c = grevlex(a, b, 0, block);
      if (c != 0) return c;
      return compare_range(a, b, block, nvars);
    }
    return compare_range(a, b, 0, nvars);
  }

 private:
  int compare_range(const Monomial& a, const Monomial& b, int lo, int hi) const {
    switch (kind) {
      case OrderKind::GRevLex: return grevlex(a, b, lo, hi);
      case OrderKind::Lex: return lex(a, b, lo, hi);
      case OrderKind::GrLex: {
        int da = partial_degree(a, lo, hi), db = partial_degree(b, lo, hi);
        if (da != db) return da > db ? 1 : -1;
        return lex(a, b, lo, hi);
      }
    }
    return 0;
  }

  static int partial_degree(const Monomial& m, int lo, int hi) {
    int d = 0;
    for (int i = lo; i < hi; ++i) d += m.e[static_cast<std::size_t>(i)];
    return d;
  }

  static int lex(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      auto k = static_cast<std::size_t>(i);
      if (a.e[k] != b.e[k]) return a.e[k] > b.e[k] ? 1 : -1;
    }
    return 0;
  }

  static int grevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = partial_degree(a, lo, hi), db = partial_degree(b, lo, hi);
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
      auto k = static_cast<std::size_t>(i);
      if (a.e[k] != b.e[k]) return a.e[k] < b.e[k] ? 1 : -1;
    }
    return 0;
  }
};

/// Term order on a free module: position-over-term (POT, lower component
/// index is larger) or term-over-position with optional degree shifts per
/// component (Schreyer-style weights for graded modules).
struct TermOrder {
  MonomialOrder mono;
  bool pot = false;
  std::vector<int> shift;

  int shifted_degree(const Monomial& m) const {
    int s = m.comp < static_cast<int>(shift.size()) ? shift[static_cast<std::size_t>(m.comp)] : 0;
    return m.degree() + s;
  }

  int compare(const Monomial& a, const Monomial& b) const {
    if (pot && a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    if (!pot && !shift.empty()) {
      int da = shifted_degree(a), db = shifted_degree(b);
      if (da != db) return da > db ? 1 : -1;
    }
    int c = mono.compare(a, b);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

/// Compares exponent vectors of equal length under the named order.
inline int compare_monomials(const std::vector<int>& a, const std::vector<int>& b, OrderKind kind) {
  if (a.size() != b.size()) fail(ErrorCode::LengthMismatch, "exponent vectors differ in length");
  if (a.size() > kMaxVars) fail(ErrorCode::InvalidArgument, "too many variables");
  Monomial ma, mb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma.e[i] = static_cast<int16_t>(a[i]);
    mb.e[i] = static_cast<int16_t>(b[i]);
  }
  MonomialOrder ord{kind, static_cast<int>(a.size()), 0};
  return ord.compare(ma, mb);
}

}  // namespace specz
