#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "specz/poly.hpp"

namespace specz {

struct Token {
  enum Kind { Ident, Int, Punct, End } kind = End;
  std::string text;
  int line = 1;
  int col = 1;
};

// Theorem tags start with a lowercase word followed by '-' (e.g. "ops-2.3").
inline bool looks_like_tag(std::string_view prefix) {
  static const char* const kTagHeads[] = {"height", "colon", "exact", "ops", "gens", "ann", "length",
                                          "depth", "cm", "ext", "grade", "anncoh", "gcm", "standard",
                                          "gorenstein", "ncm", "sing", "serre", "dim", "prod"};
  std::string_view head = prefix.substr(0, prefix.find('-'));
  for (const char* h : kTagHeads)
    if (head == h) return true;
  return false;
}

/// Splits session text into identifiers, integer literals and single
/// punctuation characters. `#` starts a comment running to end of line.
inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' ||
                                src[j] == '-' || src[j] == '.')) {
        // '-' and '.' only continue identifiers that look like theorem tags
        // (e.g. ann-dim-2.6); arithmetic never needs them inside a name.
        if ((src[j] == '-' || src[j] == '.') &&
            (j + 1 >= src.size() || !std::isalnum(static_cast<unsigned char>(src[j + 1])) ||
             !looks_like_tag(src.substr(i, j - i))))
          break;
        ++j;
      }
      t.kind = Token::Ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::Int;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::string_view("+-*/^()[],;=").find(c) != std::string_view::npos) {
      t.kind = Token::Punct;
      t.text = std::string(1, c);
      advance(1);
    } else {
      fail(ErrorCode::SyntaxError, "unexpected character '" + std::string(1, c) + "' at " +
                                       std::to_string(line) + ":" + std::to_string(col));
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}


/// Recursive-descent reader over a token stream.
class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::End; }
  bool is_punct(char c) const { return peek().kind == Token::Punct && peek().text[0] == c; }
  bool is_word(std::string_view w) const { return peek().kind == Token::Ident && peek().text == w; }
  bool accept(char c) {
    if (!is_punct(c)) return false;
    next();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error("expected '" + std::string(1, c) + "'");
  }
  std::string expect_ident() {
    if (peek().kind != Token::Ident) error("expected identifier");
    return next().text;
  }
  long expect_int() {
    bool neg = accept('-');
    if (peek().kind != Token::Int) error("expected integer");
    long v = std::stol(next().text);
    return neg ? -v : v;
  }
  [[noreturn]] void error(const std::string& msg, ErrorCode code = ErrorCode::SyntaxError) const {
    const Token& t = peek();
    std::string near = t.kind == Token::End ? "end of input" : "'" + t.text + "'";
    fail(code, msg + " at " + std::to_string(t.line) + ":" + std::to_string(t.col) + " near " + near);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

/// Parses a polynomial expression over Q(u)[X]: integers, ring variables,
/// parameters, + - * / ^ and parentheses. Division is allowed only by
/// nonzero elements of Q(u).
class ExprParser {
 public:
  ExprParser(TokenCursor& cur, RingPtr ring) : cur_(cur), ring_(std::move(ring)) {}

  FPoly expr() {
    FPoly acc = term();
    for (;;) {
      if (cur_.accept('+')) acc += term();
      else if (cur_.accept('-')) acc -= term();
      else return acc;
    }
  }

 private:
  FPoly term() {
    FPoly acc = unary();
    for (;;) {
      if (cur_.accept('*')) {
        acc *= unary();
      } else if (cur_.is_punct('/')) {
        cur_.next();
        FPoly d = unary();
        if (d.is_zero()) cur_.error("division by zero", ErrorCode::DenominatorVanishes);
        if (!d.is_constant()) cur_.error("division by a non-constant polynomial");
        acc = acc.scaled(RatFunc(1) / d.lead_coefficient());
      } else if (cur_.peek().kind == Token::Ident || cur_.peek().kind == Token::Int || cur_.is_punct('(')) {
        cur_.error("juxtaposition is not allowed; use '*'");
      } else {
        return acc;
      }
    }
  }

  FPoly unary() {
    if (cur_.accept('-')) return -unary();
    if (cur_.accept('+')) return unary();
    return power();
  }

  FPoly power() {
    FPoly base = atom();
    if (cur_.accept('^')) {
      if (cur_.peek().kind != Token::Int) cur_.error("expected integer exponent");
      long e = std::stol(cur_.next().text);
      if (e > 64) cur_.error("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  FPoly atom() {
    const Token& t = cur_.peek();
    if (t.kind == Token::Int) {
      cur_.next();
      return FPoly::constant(ring_, RatFunc(Rational::parse(t.text)));
    }
    if (t.kind == Token::Ident) {
      std::string name = t.text;
      int v = ring_->var_index(name);
      if (v >= 0) {
        cur_.next();
        return FPoly::variable(ring_, static_cast<std::size_t>(v));
      }
      int p = ring_->param_index(name);
      if (p >= 0) {
        cur_.next();
        return FPoly::constant(ring_, RatFunc::param(static_cast<std::size_t>(p)));
      }
      cur_.error("unknown symbol '" + name + "'", ErrorCode::UnknownName);
    }
    if (cur_.accept('(')) {
      FPoly e = expr();
      cur_.expect(')');
      return e;
    }
    cur_.error("expected expression");
  }

  TokenCursor& cur_;
  RingPtr ring_;
};

/// Parses a single polynomial expression (whole string).
inline FPoly parse_poly(const RingPtr& ring, std::string_view text) {
  TokenCursor cur(tokenize(text));
  ExprParser p(cur, ring);
  FPoly f = p.expr();
  if (!cur.at_end()) cur.error("trailing input");
  return f;
}

/// Parses a polynomial with constant coefficients into a Q-ring.
inline QPoly parse_qpoly(const RingPtr& ring, std::string_view text) {
  RingPtr pr = std::make_shared<const Ring>(ring->params(), ring->vars(), ring->order().kind, ring->order().block);
  FPoly f = parse_poly(pr, text);
  Terms<Rational> out;
  for (const auto& t : f.terms()) {
    if (!t.c.is_constant()) fail(ErrorCode::InvalidArgument, "parameter in a Q-polynomial");
    out.push_back({t.m, t.c.constant_value()});
  }
  return QPoly(ring, std::move(out), true);
}

}  // namespace specz
