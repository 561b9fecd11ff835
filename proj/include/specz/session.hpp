#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "specz/modules.hpp"
#include "specz/parse.hpp"
#include "specz/specializer.hpp"

namespace specz {

enum class ObjKind { Ideal, Matrix, Module, Point, Complex };

inline std::string_view to_string(ObjKind k) {
  switch (k) {
    case ObjKind::Ideal: return "ideal";
    case ObjKind::Matrix: return "matrix";
    case ObjKind::Module: return "module";
    case ObjKind::Point: return "point";
    case ObjKind::Complex: return "complex";
  }
  return "?";
}

struct ModuleDef {
  enum class Kind { Coker, Free, Quotient } kind = Kind::Free;
  std::string ref;
  std::size_t rank = 0;
};

/// Subject slots a theorem tag expects. `Module` slots also accept ideals
/// (read as R/I); `Complex` slots accept complexes, modules and ideals
/// (a module stands for its free resolution).
enum class Slot { Ideal, Module, Complex };

struct TagInfo {
  std::string_view tag;
  std::vector<Slot> slots;
};

inline const std::vector<TagInfo>& theorem_tags() {
  static const std::vector<TagInfo> tags = {
      {"height-1.1", {Slot::Ideal}},
      {"colon-kr1", {Slot::Ideal, Slot::Ideal}},
      {"exact-2.2", {Slot::Complex}},
      {"ops-2.3", {Slot::Ideal, Slot::Ideal}},
      {"gens-2.4", {Slot::Ideal}},
      {"colon-prod-2.5", {Slot::Ideal, Slot::Ideal}},
      {"ann-dim-2.6", {Slot::Module}},
      {"height-2.7", {Slot::Ideal, Slot::Ideal}},
      {"length-2.8", {Slot::Module}},
      {"depth-projdim-3.1", {Slot::Module}},
      {"cm-3.2", {Slot::Module}},
      {"ext-tor-3.3", {Slot::Module, Slot::Module}},
      {"grade-3.4", {Slot::Ideal, Slot::Module}},
      {"anncoh-3.5", {Slot::Module}},
      {"gcm-3.6", {Slot::Module}},
      {"standard-3.7", {Slot::Module, Slot::Ideal}},
      {"gorenstein-4.2", {Slot::Ideal}},
      {"ncm-4.3", {Slot::Ideal}},
      {"sing-4.4", {Slot::Ideal}},
      {"serre-4.5", {Slot::Ideal}},
  };
  return tags;
}

inline const TagInfo* find_tag(std::string_view tag) {
  for (const auto& t : theorem_tags())
    if (t.tag == tag) return &t;
  return nullptr;
}

struct CheckSpec {
  std::string tag;
  std::vector<std::string> subjects;
  int trials = 20;
  bool trials_given = false;
  std::uint64_t seed = 0;
  long bound = 10000;
  std::vector<std::string> points;
  std::vector<Point> alphas;  // literal points supplied outside the session text
};

class Session {
 public:
  RingPtr ring;
  std::vector<std::pair<std::string, ObjKind>> order;
  std::map<std::string, FIdeal> ideals;
  std::map<std::string, FMatrix> matrices;
  std::map<std::string, ModuleDef> module_defs;
  std::map<std::string, Point> points;
  std::map<std::string, std::vector<std::string>> complexes;
  std::vector<CheckSpec> checks;

  std::optional<ObjKind> kind_of(const std::string& name) const {
    for (const auto& [n, k] : order)
      if (n == name) return k;
    return std::nullopt;
  }

  const FIdeal& ideal(const std::string& name) const {
    auto it = ideals.find(name);
    if (it == ideals.end()) fail(ErrorCode::UnknownName, "no ideal named '" + name + "'");
    return it->second;
  }

  const FMatrix& matrix(const std::string& name) const {
    auto it = matrices.find(name);
    if (it == matrices.end()) fail(ErrorCode::UnknownName, "no matrix named '" + name + "'");
    return it->second;
  }

  const Point& point(const std::string& name) const {
    auto it = points.find(name);
    if (it == points.end()) fail(ErrorCode::UnknownName, "no point named '" + name + "'");
    return it->second;
  }

  /// Module by name; an ideal name yields R/I.
  FModule module(const std::string& name) const {
    if (auto it = ideals.find(name); it != ideals.end()) return FModule::cyclic(it->second);
    auto it = module_defs.find(name);
    if (it == module_defs.end()) fail(ErrorCode::UnknownName, "no module named '" + name + "'");
    const ModuleDef& d = it->second;
    switch (d.kind) {
      case ModuleDef::Kind::Coker: return FModule(matrix(d.ref));
      case ModuleDef::Kind::Free: return FModule::free(ring, d.rank);
      case ModuleDef::Kind::Quotient: return FModule::cyclic(ideal(d.ref));
    }
    fail(ErrorCode::InvalidArgument, "bad module definition");
  }

  std::vector<FMatrix> complex(const std::string& name) const {
    auto it = complexes.find(name);
    if (it == complexes.end()) fail(ErrorCode::UnknownName, "no complex named '" + name + "'");
    std::vector<FMatrix> maps;
    for (const auto& m : it->second) maps.push_back(matrix(m));
    return maps;
  }
};

namespace detail {

inline const std::set<std::string>& reserved_words() {
  static const std::set<std::string> w = {"ring",  "ideal", "matrix", "module", "point", "complex",
                                          "check", "order", "coker",  "free",   "quotient", "trials",
                                          "seed",  "bound", "at",     "Q"};
  return w;
}

class SessionParser {
 public:
  explicit SessionParser(std::string_view text) : cur_(tokenize(text)) {}

  Session run() {
    while (!cur_.at_end()) statement();
    if (!s_.ring) fail(ErrorCode::SyntaxError, "session declares no ring");
    return std::move(s_);
  }

 private:
  void statement() {
    if (cur_.peek().kind != Token::Ident) cur_.error("expected a statement keyword");
    if (!is_statement(cur_.peek().text)) cur_.error("unknown statement '" + cur_.peek().text + "'");
    std::string kw = cur_.next().text;
    if (kw == "ring") {
      if (s_.ring) cur_.error("ring declared twice");
      ring_decl();
    } else {
      if (!s_.ring) cur_.error("the ring must be declared first");
      if (kw == "ideal") ideal_decl();
      else if (kw == "matrix") matrix_decl();
      else if (kw == "module") module_decl();
      else if (kw == "point") point_decl();
      else if (kw == "complex") complex_decl();
      else check_decl();
    }
    cur_.expect(';');
  }

  static bool is_statement(const std::string& w) {
    return w == "ring" || w == "ideal" || w == "matrix" || w == "module" || w == "point" || w == "complex" ||
           w == "check";
  }

  void ring_decl() {
    if (!cur_.is_word("Q")) cur_.error("expected 'Q'");
    cur_.next();
    std::vector<std::string> params, vars;
    if (cur_.accept('(')) params = name_list(')');
    cur_.expect('[');
    vars = name_list(']');
    if (vars.empty()) cur_.error("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : params) unique_symbol(seen, n);
    for (const auto& n : vars) unique_symbol(seen, n);
    OrderKind kind = OrderKind::GRevLex;
    if (cur_.is_word("order")) {
      cur_.next();
      kind = parse_order(cur_.expect_ident());
    }
    if (vars.size() > kMaxVars) cur_.error("too many variables");
    if (params.size() > kMaxParams) cur_.error("too many parameters");
    s_.ring = make_ring(params, vars, kind);
  }

  void unique_symbol(std::set<std::string>& seen, const std::string& n) {
    if (!seen.insert(n).second) cur_.error("symbol '" + n + "' declared twice");
  }

  std::vector<std::string> name_list(char close) {
    std::vector<std::string> out;
    if (cur_.accept(close)) return out;
    do out.push_back(cur_.expect_ident());
    while (cur_.accept(','));
    cur_.expect(close);
    return out;
  }

  std::string new_name(ObjKind k) {
    if (cur_.peek().kind != Token::Ident) cur_.error("expected a name");
    std::string n = cur_.peek().text;
    if (reserved_words().count(n)) cur_.error("'" + n + "' is a reserved word");
    if (s_.kind_of(n)) cur_.error("name '" + n + "' declared twice");
    if (s_.ring->var_index(n) >= 0 || s_.ring->param_index(n) >= 0) cur_.error("name '" + n + "' is a ring symbol");
    if (n.find_first_of("-.") != std::string::npos) cur_.error("invalid name '" + n + "'");
    cur_.next();
    s_.order.emplace_back(n, k);
    return n;
  }

  std::string ref(ObjKind k) {
    if (cur_.peek().kind != Token::Ident) cur_.error("expected a name");
    std::string n = cur_.peek().text;
    auto kind = s_.kind_of(n);
    if (!kind) cur_.error("unknown name '" + n + "'", ErrorCode::UnknownName);
    if (*kind != k) cur_.error("'" + n + "' is a " + std::string(to_string(*kind)) + ", expected " +
                               std::string(to_string(k)));
    cur_.next();
    return n;
  }

  FPoly poly() {
    ExprParser p(cur_, s_.ring);
    return p.expr();
  }

  void ideal_decl() {
    std::string name = new_name(ObjKind::Ideal);
    cur_.expect('=');
    std::vector<FPoly> gens;
    do gens.push_back(poly());
    while (cur_.accept(','));
    s_.ideals.emplace(name, FIdeal(s_.ring, gens));
  }

  void matrix_decl() {
    std::string name = new_name(ObjKind::Matrix);
    cur_.expect('=');
    cur_.expect('[');
    std::vector<std::vector<FPoly>> rows;
    if (!cur_.is_punct(']')) {
      do {
        cur_.expect('[');
        rows.emplace_back();
        if (!cur_.is_punct(']')) {
          do rows.back().push_back(poly());
          while (cur_.accept(','));
        }
        if (rows.size() > 1 && rows.back().size() != rows.front().size())
          cur_.error("row length differs from the first row", ErrorCode::ArityMismatch);
        cur_.expect(']');
      } while (cur_.accept(','));
    }
    cur_.expect(']');
    s_.matrices.emplace(name, FMatrix::from_rows(s_.ring, rows));
  }

  void module_decl() {
    std::string name = new_name(ObjKind::Module);
    cur_.expect('=');
    ModuleDef d;
    if (!cur_.is_word("coker") && !cur_.is_word("free") && !cur_.is_word("quotient"))
      cur_.error("expected coker, free or quotient");
    std::string how = cur_.next().text;
    if (how == "coker") {
      d.kind = ModuleDef::Kind::Coker;
      d.ref = ref(ObjKind::Matrix);
    } else if (how == "free") {
      d.kind = ModuleDef::Kind::Free;
      long r = cur_.expect_int();
      if (r < 0) cur_.error("negative rank");
      d.rank = static_cast<std::size_t>(r);
    } else if (how == "quotient") {
      d.kind = ModuleDef::Kind::Quotient;
      d.ref = ref(ObjKind::Ideal);
    }
    s_.module_defs.emplace(name, d);
  }

  Rational rational() {
    bool neg = cur_.accept('-');
    if (cur_.peek().kind != Token::Int) cur_.error("expected a rational number");
    std::string text = cur_.next().text;
    if (cur_.accept('/')) {
      if (cur_.peek().kind != Token::Int) cur_.error("expected a denominator");
      std::string den = cur_.next().text;
      if (mpz_class(den) == 0) cur_.error("zero denominator", ErrorCode::DenominatorVanishes);
      text += "/" + den;
    }
    Rational r = Rational::parse(text);
    return neg ? -r : r;
  }

  void point_decl() {
    std::string name = new_name(ObjKind::Point);
    cur_.expect('=');
    cur_.expect('(');
    Point p;
    if (!cur_.is_punct(')')) {
      do p.push_back(rational());
      while (cur_.accept(','));
    }
    if (p.size() != s_.ring->nparams())
      cur_.error("point has " + std::to_string(p.size()) + " coordinates but the ring has " +
                     std::to_string(s_.ring->nparams()) + " parameters",
                 ErrorCode::ArityMismatch);
    cur_.expect(')');
    s_.points.emplace(name, std::move(p));
  }

  void complex_decl() {
    std::string name = new_name(ObjKind::Complex);
    cur_.expect('=');
    std::vector<std::string> maps;
    do maps.push_back(ref(ObjKind::Matrix));
    while (cur_.accept(','));
    for (std::size_t j = 0; j + 1 < maps.size(); ++j)
      if (s_.matrices.at(maps[j]).cols() != s_.matrices.at(maps[j + 1]).rows())
        cur_.error("maps " + maps[j] + " and " + maps[j + 1] + " have incompatible sizes", ErrorCode::ArityMismatch);
    s_.complexes.emplace(name, std::move(maps));
  }

  void check_decl() {
    CheckSpec c;
    if (cur_.peek().kind != Token::Ident) cur_.error("expected a theorem tag");
    const TagInfo* info = find_tag(cur_.peek().text);
    if (!info) cur_.error("unknown theorem tag '" + cur_.peek().text + "'", ErrorCode::UnknownName);
    c.tag = cur_.next().text;
    static const std::set<std::string> opts = {"trials", "seed", "bound", "at"};
    while (cur_.peek().kind == Token::Ident && !opts.count(cur_.peek().text)) {
      std::string n = cur_.peek().text;
      if (!s_.kind_of(n)) cur_.error("unknown name '" + n + "'", ErrorCode::UnknownName);
      if (c.subjects.size() < info->slots.size()) check_slot(info->slots[c.subjects.size()], n);
      c.subjects.push_back(cur_.next().text);
    }
    if (c.subjects.size() != info->slots.size())
      cur_.error(c.tag + " takes " + std::to_string(info->slots.size()) + " subject(s), got " +
                     std::to_string(c.subjects.size()),
                 ErrorCode::ArityMismatch);
    bool seeded = false;
    while (cur_.peek().kind == Token::Ident) {
      if (!opts.count(cur_.peek().text)) cur_.error("unknown check option '" + cur_.peek().text + "'");
      std::string o = cur_.next().text;
      if (o == "trials") {
        long t = cur_.expect_int();
        if (t < 1) cur_.error("trials must be at least 1");
        c.trials = static_cast<int>(t);
        c.trials_given = true;
      } else if (o == "seed") {
        long v = cur_.expect_int();
        if (v < 0) cur_.error("seed must be nonnegative");
        c.seed = static_cast<std::uint64_t>(v);
        seeded = true;
      } else if (o == "bound") {
        c.bound = cur_.expect_int();
        if (c.bound < 1) cur_.error("bound must be at least 1");
      } else if (o == "at") {
        do c.points.push_back(ref(ObjKind::Point));
        while (cur_.accept(','));
      } else {
        cur_.error("unknown check option '" + o + "'");
      }
    }
    if (!seeded) cur_.error("check requires a seed");
    s_.checks.push_back(std::move(c));
  }

  void check_slot(Slot slot, const std::string& name) {
    ObjKind k = *s_.kind_of(name);
    bool ok = false;
    switch (slot) {
      case Slot::Ideal: ok = k == ObjKind::Ideal; break;
      case Slot::Module: ok = k == ObjKind::Ideal || k == ObjKind::Module; break;
      case Slot::Complex: ok = k == ObjKind::Ideal || k == ObjKind::Module || k == ObjKind::Complex; break;
    }
    if (!ok) cur_.error("'" + name + "' (" + std::string(to_string(k)) + ") cannot be used here");
  }

  TokenCursor cur_;
  Session s_;
};

}  // namespace detail

inline Session parse_session(std::string_view text) { return detail::SessionParser(text).run(); }

inline std::string ring_line(const Session& s) {
  const auto& r = *s.ring;
  auto join = [](const std::vector<std::string>& xs) {
    std::string j;
    for (std::size_t k = 0; k < xs.size(); ++k) j += (k ? "," : "") + xs[k];
    return j;
  };
  std::string out = "ring Q";
  if (r.nparams()) out += "(" + join(r.params()) + ")";
  return out + "[" + join(r.vars()) + "] order " + std::string(to_string(r.order().kind)) + ";";
}

/// The declaration statement of a named object, as it would be re-read.
inline std::string definition_line(const Session& s, const std::string& name) {
  auto kind = s.kind_of(name);
  if (!kind) fail(ErrorCode::UnknownName, "unknown name '" + name + "'");
  std::string out;
  switch (*kind) {
    case ObjKind::Ideal: {
      const auto& g = s.ideals.at(name).gens();
      out = "ideal " + name + " = ";
      if (g.empty()) out += "0";
      for (std::size_t k = 0; k < g.size(); ++k) out += (k ? ", " : "") + g[k].str();
      break;
    }
    case ObjKind::Matrix: out = "matrix " + name + " = " + s.matrices.at(name).str(); break;
    case ObjKind::Module: {
      const auto& d = s.module_defs.at(name);
      out = "module " + name + " = ";
      if (d.kind == ModuleDef::Kind::Coker) out += "coker " + d.ref;
      else if (d.kind == ModuleDef::Kind::Free) out += "free " + std::to_string(d.rank);
      else out += "quotient " + d.ref;
      break;
    }
    case ObjKind::Point: out = "point " + name + " = " + point_str(s.points.at(name)); break;
    case ObjKind::Complex: {
      out = "complex " + name + " = ";
      const auto& maps = s.complexes.at(name);
      for (std::size_t k = 0; k < maps.size(); ++k) out += (k ? ", " : "") + maps[k];
      break;
    }
  }
  return out + ";";
}

/// Names an object depends on (itself last), in declaration order.
inline std::vector<std::string> dependencies(const Session& s, const std::vector<std::string>& names) {
  std::set<std::string> need;
  std::vector<std::string> todo(names.begin(), names.end());
  while (!todo.empty()) {
    std::string n = todo.back();
    todo.pop_back();
    if (!need.insert(n).second) continue;
    if (auto it = s.module_defs.find(n); it != s.module_defs.end() && !it->second.ref.empty())
      todo.push_back(it->second.ref);
    if (auto it = s.complexes.find(n); it != s.complexes.end())
      for (const auto& m : it->second) todo.push_back(m);
  }
  std::vector<std::string> out;
  for (const auto& [n, k] : s.order)
    if (need.count(n)) out.push_back(n);
  return out;
}

inline std::string print_session(const Session& s) {
  std::string out = ring_line(s) + "\n";
  for (const auto& [name, kind] : s.order) out += definition_line(s, name) + "\n";
  for (const auto& c : s.checks) {
    out += "check " + c.tag;
    for (const auto& n : c.subjects) out += " " + n;
    if (c.trials_given) out += " trials " + std::to_string(c.trials);
    out += " seed " + std::to_string(c.seed) + " bound " + std::to_string(c.bound);
    for (std::size_t k = 0; k < c.points.size(); ++k) out += (k ? ", " : " at ") + c.points[k];
    out += ";\n";
  }
  return out;
}

}  // namespace specz
