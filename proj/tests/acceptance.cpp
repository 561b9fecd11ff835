// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "specz/checks.hpp"

using namespace specz;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

/// Every check in every session must PASS (a skip counts as a failure here).
Outcome all_pass(const std::vector<std::string>& sessions, int min_trials = 20) {
  Outcome o;
  int checks = 0;
  for (const auto& text : sessions) {
    Session s = parse_session(text);
    for (const auto& c : s.checks) {
      CheckReport r = run_check(s, c);
      ++checks;
      std::string who = r.theorem + " on";
      for (const auto& n : r.subjects) who += " " + n;
      std::string why = r.counterexample ? r.counterexample->detail : r.reason;
      o.require(r.status == CheckStatus::Pass, who + ": " + std::string(to_string(r.status)) + " " + why);
      o.require(r.trials >= min_trials, who + ": only " + std::to_string(r.trials) + " trials");
    }
  }
  if (o.ok) o.note = std::to_string(checks) + " checks";
  return o;
}

QIdeal qideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<QPoly> g;
  for (auto s : gens) g.push_back(parse_qpoly(r, s));
  return QIdeal(r, g);
}

FIdeal fideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<FPoly> g;
  for (auto s : gens) g.push_back(parse_poly(r, s));
  return FIdeal(r, g);
}

// -- criterion 1 ---------------------------------------------------------------

Outcome example_reproduction() {
  Outcome o;
  auto r = make_ring({"u"}, {"X"});
  auto si = specialize_ideal(fideal(r, {"u*X^2 - 1"}), std::vector<Rational>{Rational(4)});
  auto q = si.ideal.ring();
  QIdeal expected = qideal(q, {"4*X^2 - 1"});
  o.require(si.ideal == expected, "specialization at 4 is " + si.ideal.str());
  QIdeal split = intersect(qideal(q, {"2*X - 1"}), qideal(q, {"2*X + 1"}));
  o.require(split == expected, "intersection is " + split.str());
  o.require(!qideal(q, {"2*X - 1"}).contains(parse_qpoly(q, "2*X + 1")) &&
                !qideal(q, {"2*X + 1"}).contains(parse_qpoly(q, "2*X - 1")),
            "the two factors coincide");
  o.require(si.cert.str(r->params()) == "(u)", "certificate " + si.cert.str(r->params()));
  if (o.ok) o.note = "(4X^2 - 1) = (2X - 1) cap (2X + 1)";
  return o;
}

// -- criterion 2 ---------------------------------------------------------------

Outcome groebner_soundness() {
  Outcome o;
  auto r2 = make_ring({"u", "v"}, {"x", "y", "z"});
  auto r1 = make_ring({"u"}, {"x", "y"});
  std::vector<FIdeal> corpus = {
      fideal(r1, {"u*x^2 - 1"}),
      fideal(r1, {"x^2 - u*y", "x*y - 1"}),
      fideal(r1, {"u*x*y - y^2", "x^3 - u"}),
      fideal(r1, {"(1/u)*x + y", "y^3 - x"}),
      fideal(r1, {"x^2 + u*y^2 - 1", "x*y - u"}),
      fideal(r2, {"x^2 - u*y*z", "y^2 - v*x*z"}),
      fideal(r2, {"x*y - u*z^2", "x*z - v*y^2", "y*z - x^2"}),
      fideal(r2, {"u*x + v*y + z", "x^2 - y*z", "v*y^2 - u*x*z"}),
      fideal(r2, {"x^3 - u*y^2*z", "x*y - v*z^2", "(u - v)*y^3 - z^3"}),
      fideal(r2, {"x - u*y", "y - v*z", "z^2 - u*v"}),
      fideal(r2, {"x^2*y - u*z", "y^2*z - v*x", "z^2*x - y"}),
      fideal(r2, {"(u^2 - 1)*x^2 - y^2", "v*x*y - z^2"}),
  };
  std::uint64_t seed = 2024;
  int points = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const FIdeal& i = corpus[k];
    CertifiedBasis cb = certify_ideal(i);
    PointSampler sampler(seed + k);
    RingPtr target = specialized_ring(i.ring());
    for (int t = 0; t < 20; ++t) {
      Point alpha = sampler.next(cb.cert, i.ring()->nparams(), 10000);
      QIdeal spec = specialize_generators(i, alpha);
      auto key = [](const Monomial& m) { return std::vector<int>(m.e.begin(), m.e.end()); };
      std::set<std::vector<int>> lt_spec, lt_eval;
      for (const auto& m : spec.leading_monomials()) lt_spec.insert(key(m));
      for (const auto& g : cb.cleared) {
        QPoly e = eval_poly(g, alpha, target);
        if (!e.is_zero()) lt_eval.insert(key(e.lead_monomial()));
      }
      o.require(lt_spec == lt_eval, "ideal " + std::to_string(k) + " at " + point_str(alpha));
      ++points;
    }
  }
  if (o.ok) o.note = std::to_string(corpus.size()) + " ideals, " + std::to_string(points) + " points";
  return o;
}

// -- criteria 3 to 12: theorem checks through the harness --------------------------

const char* kThreeVars =
    "ring Q(u,v)[x,y,z];\n"
    "ideal P1 = x - u*y, z^2 - v*y^2;\n"
    "ideal P2 = x*y - u*z^2;\n"
    "ideal P3 = x^2 - u*y*z, y^2 - v*x*z;\n"
    "ideal B3 = x^2 - u*y*z;\n"
    "ideal J = x*y, u*x*z;\n"
    "ideal N = x^2, u*x*y;\n"
    "matrix A = [[x, u*y], [v*z, x]];\n"
    "module L = coker A;\n"
    "matrix A2 = [[x, y, 0], [0, u*x, z + v*y]];\n"
    "module L2 = coker A2;\n";

Outcome dim_ann_height() {
  std::string s = std::string(kThreeVars) +
                  "check height-1.1 P1 seed 1; check height-1.1 P2 seed 2; check height-1.1 P3 seed 3;"
                  "check height-1.1 J seed 4;"
                  "check ann-dim-2.6 P1 seed 5; check ann-dim-2.6 P3 seed 6; check ann-dim-2.6 J seed 7;"
                  "check ann-dim-2.6 N seed 8; check ann-dim-2.6 L seed 9; check ann-dim-2.6 L2 seed 10;"
                  "check height-2.7 P3 B3 seed 11; check height-2.7 P1 P1 seed 12;";
  return all_pass({s});
}

Outcome exactness() {
  std::string s = std::string(kThreeVars) +
                  "matrix K1 = [[x, y + u*z, z^2 + v*x*y]];\n"
                  "matrix K2 = [[-y - u*z, -z^2 - v*x*y, 0], [x, 0, -z^2 - v*x*y], [0, x, y + u*z]];\n"
                  "matrix K3 = [[z^2 + v*x*y], [-y - u*z], [x]];\n"
                  "complex K = K1, K2, K3;\n"
                  "matrix M1 = [[x - u*y, z]];\n"
                  "matrix M2 = [[-z], [x - u*y]];\n"
                  "complex M = M1, M2;\n"
                  "complex S = A;\n"
                  "check exact-2.2 K seed 1; check exact-2.2 M seed 2; check exact-2.2 S seed 3;"
                  "check exact-2.2 L seed 4; check exact-2.2 L2 seed 5; check exact-2.2 P3 seed 6;"
                  "check exact-2.2 N seed 7;";
  return all_pass({s});
}

Outcome operations() {
  std::string s =
      "ring Q(u,v)[x,y];\n"
      "ideal I1 = x^2 - u*y, x*y;\n"
      "ideal I2 = y - v*x;\n"
      "ideal I3 = x*y^2 - u, x^2;\n"
      "ideal I4 = x - u*y^2;\n"
      "ideal P = x^2 - u*y^3;\n"
      "ideal G = x + v, y;\n"
      "matrix A = [[x, u*y], [0, x - v*y]];\n"
      "module L = coker A;\n"
      "check ops-2.3 I1 I2 seed 1; check ops-2.3 I2 I3 seed 2; check ops-2.3 I1 I4 seed 3;"
      "check colon-prod-2.5 I1 I2 seed 4; check colon-prod-2.5 I3 I1 seed 5; check colon-prod-2.5 I1 I4 seed 6;"
      "check gens-2.4 I1 seed 7; check gens-2.4 I3 seed 8;"
      "check colon-kr1 P G seed 9;"
      "check ann-dim-2.6 L seed 10; check ann-dim-2.6 I3 seed 11;";
  return all_pass({s});
}

Outcome colength() {
  std::string s =
      "ring Q(u,v)[x,y];\n"
      "ideal Z1 = x^2 - u, y^2;\n"
      "ideal Z2 = x^3 - u*y, y^2 - v*x;\n"
      "ideal Z3 = x*y - u, x^2 + y^2 - v;\n"
      "ideal Z4 = x^2 - u*x, y^3 - v;\n"
      "ideal Z5 = x*y, x^2 - u*y, y^2 - v*x;\n"
      "ideal Z6 = (x - u)^2, x*y, y^3;\n"
      "matrix A = [[x^2 - u, y, 0], [0, x, y^2 - v]];\n"
      "module L = coker A;\n"
      "check length-2.8 Z1 seed 1; check length-2.8 Z2 seed 2; check length-2.8 Z3 seed 3;"
      "check length-2.8 Z4 seed 4; check length-2.8 Z5 seed 5; check length-2.8 Z6 seed 6;"
      "check length-2.8 L seed 7;";
  return all_pass({s});
}

Outcome projdim_depth() {
  std::string s = std::string(kThreeVars) +
                  "ideal H1 = x^2 - u*y^2, x*y;\n"
                  "ideal H2 = x*z - u*y^2, y*z - v*x^2;\n"
                  "check depth-projdim-3.1 N seed 1; check depth-projdim-3.1 L seed 2;"
                  "check depth-projdim-3.1 L2 seed 3; check depth-projdim-3.1 H1 seed 4;"
                  "check depth-projdim-3.1 H2 seed 5; check depth-projdim-3.1 P3 seed 6;"
                  "check cm-3.2 N seed 7; check cm-3.2 P3 seed 8; check cm-3.2 H2 seed 9;";
  return all_pass({s});
}

Outcome ext_tor() {
  std::string s =
      "ring Q(u)[x,y];\n"
      "ideal A1 = x + u*y;\n"
      "ideal A2 = x - u*y;\n"
      "ideal N = (x + u*y)^2, (x + u*y)*y;\n"
      "ideal M0 = x, y;\n"
      "ideal Y = y;\n"
      "matrix P = [[x, u*y], [0, x]];\n"
      "module L = coker P;\n"
      "check ext-tor-3.3 A1 A2 seed 1; check ext-tor-3.3 N M0 seed 2; check ext-tor-3.3 N Y seed 3;"
      "check ext-tor-3.3 L A1 seed 4; check ext-tor-3.3 M0 L seed 5;"
      "check grade-3.4 M0 N seed 6; check grade-3.4 Y N seed 7; check grade-3.4 A1 L seed 8;"
      "check grade-3.4 M0 A2 seed 9;";
  return all_pass({s});
}

Outcome local_cohomology() {
  std::string two =
      "ring Q(u)[x,y];\n"
      "ideal N = (x + u*y)^2, (x + u*y)*y;\n"
      "ideal C = x^2 - u*y^2;\n"
      "matrix P = [[x, u*y], [0, x]];\n"
      "module L = coker P;\n"
      "check anncoh-3.5 N seed 1; check anncoh-3.5 C seed 2; check anncoh-3.5 L seed 3;"
      "check gcm-3.6 N seed 4; check gcm-3.6 C seed 5; check gcm-3.6 L seed 6;";
  std::string three =
      "ring Q(u)[x,y,z];\n"
      "ideal T = x*z, y*(z + u*x);\n"
      "ideal G = x^2, x*(y + u*z);\n"
      "check anncoh-3.5 T seed 7; check gcm-3.6 T seed 8; check gcm-3.6 G seed 9;";
  Outcome o = all_pass({two, three});
  if (!o.ok) return o;
  // the family contains a non-CM generalized CM module
  auto r = make_ring({"u"}, {"x", "y"});
  auto rep = classify_cm(FModule::cyclic(fideal(r, {"(x + u*y)^2", "(x + u*y)*y"})));
  o.require(!rep.cm && rep.generalized_cm && rep.ext_colengths == std::vector<long>{1},
            "R/((x + uy)^2, (x + uy)y) is not classified as non-CM generalized CM");
  return o;
}

Outcome standard_sop() {
  std::string s =
      "ring Q(u,v)[x,y];\n"
      "ideal N = (x + u*y)^2, (x + u*y)*y;\n"
      "ideal N2 = (x + u*y)^2, (x + u*y)*y^2;\n"
      "ideal A1 = y;\n"
      "ideal A2 = y^2;\n"
      "ideal A3 = y + v*x;\n"
      "check standard-3.7 N A1 seed 1; check standard-3.7 N2 A2 seed 2; check standard-3.7 N A3 seed 3;";
  Outcome o = all_pass({s});
  if (!o.ok) return o;
  Session ses = parse_session(s);
  auto sop = [&](const char* l, const char* a) {
    return standard_sop_check(FModule::cyclic(ses.ideal(l)), ses.ideal(a).gens());
  };
  o.require(sop("N", "A1") && sop("N2", "A2") && sop("N", "A3"), "a declared sop is not standard over Q(u)");
  return o;
}

Outcome gorenstein() {
  std::string s =
      "ring Q(u,v)[x,y,z];\n"
      "ideal C1 = x^2 + u*y^2, x*y;\n"
      "ideal C2 = x^2 - u*z^2, y^2 - v*z^2;\n"
      "ideal C3 = x*y - u*z^2;\n"
      "ideal M2 = x^2, x*(y + u*z), (y + u*z)^2;\n"
      "ideal M3 = (x - v*z)^2, (x - v*z)*y, y^2;\n"
      "check gorenstein-4.2 C1 seed 1; check gorenstein-4.2 C2 seed 2; check gorenstein-4.2 C3 seed 3;"
      "check gorenstein-4.2 M2 seed 4; check gorenstein-4.2 M3 seed 5;";
  Outcome o = all_pass({s});
  if (!o.ok) return o;
  Session ses = parse_session(s);
  for (const char* n : {"C1", "C2", "C3"}) o.require(gorenstein_check(ses.ideal(n)), std::string(n) + " not Gorenstein");
  for (const char* n : {"M2", "M3"}) o.require(!gorenstein_check(ses.ideal(n)), std::string(n) + " Gorenstein");
  return o;
}

Outcome loci() {
  std::string three =
      "ring Q(u)[x,y,z];\n"
      "ideal Cone = x*y - u*z^2;\n"
      "ideal Tw = x*z - y^2, y*z - u*x^2, z^2 - u*x*y;\n"
      "check ncm-4.3 Cone seed 1; check sing-4.4 Cone seed 2; check serre-4.5 Cone seed 3;"
      "check sing-4.4 Tw seed 4; check ncm-4.3 Tw seed 5;";
  std::string two =
      "ring Q(u)[x,y];\n"
      "ideal Node = x*(y + u*x);\n"
      "ideal Cusp = y^2*u - x^3;\n"
      "check ncm-4.3 Node seed 6; check sing-4.4 Node seed 7; check serre-4.5 Node seed 8;"
      "check sing-4.4 Cusp seed 9;";
  std::string four =
      "ring Q(u)[x,y,z,w];\n"
      "ideal Planes = x*z, x*(w + u*x), y*z, y*(w + u*x);\n"
      "check ncm-4.3 Planes seed 10; check sing-4.4 Planes seed 11;";
  Outcome o = all_pass({three, two, four});
  if (!o.ok) return o;
  auto r3 = make_ring({"u"}, {"x", "y", "z"});
  auto cone = ring_quality(fideal(r3, {"x*y - u*z^2"}));
  o.require(cone.reduced && cone.normal && !cone.regular, "quadric cone flags");
  auto r2 = make_ring({"u"}, {"x", "y"});
  auto node = ring_quality(fideal(r2, {"x*(y + u*x)"}));
  o.require(node.reduced && !node.normal, "node flags");
  auto r4 = make_ring({"u"}, {"x", "y", "z", "w"});
  auto planes = ncm_locus(fideal(r4, {"x*z", "x*(w + u*x)", "y*z", "y*(w + u*x)"})).ideal;
  o.require(same_radical(planes, fideal(r4, {"x", "y", "z", "w"})), "two planes: NCM locus is not the origin");
  return o;
}

// -- criterion 13 ------------------------------------------------------------------

template <class K>
bool confluent(const Ideal<K>& i) {
  const auto& b = i.basis();
  const auto& ord = i.ring()->term_order();
  std::vector<Terms<K>> t;
  for (const auto& g : b) t.push_back(g.terms());
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t c = a + 1; c < t.size(); ++c)
      if (!reduce(s_polynomial(t[a], t[c], ord), t, ord).empty()) return false;
  for (const auto& g : i.gens())
    if (!i.contains(g)) return false;
  return true;
}

template <class K>
void self_checks(Outcome& o, const Ideal<K>& i, bool unmixed, const std::string& name) {
  o.require(confluent(i), name + ": basis not confluent");
  const RingPtr& ring = i.ring();
  const int n = static_cast<int>(ring->nvars());
  auto l = PresentedModule<K>::cyclic(i);
  if (i.is_homogeneous() && !i.is_unit()) {
    auto [pd, depth] = projdim_and_depth(l);
    std::vector<Poly<K>> vars;
    for (std::size_t v = 0; v < ring->nvars(); ++v) vars.push_back(Poly<K>::variable(ring, v));
    int depth_ext = grade_on_module(Ideal<K>(ring, vars), l);
    o.require(depth_ext + pd == n, name + ": depth + projdim != n");
  }
  if (!i.is_unit() && !i.is_zero()) {
    int g = grade_on_ring(i).value;
    auto exts = ext_modules(l, PresentedModule<K>::free(ring, 1), n);
    for (int k = 0; k < g; ++k) o.require(is_zero_module(exts[static_cast<std::size_t>(k)].module), name + ": Ext below grade");
    o.require(!is_zero_module(exts[static_cast<std::size_t>(g)].module), name + ": Ext at grade vanishes");
    if (unmixed) o.require(g == n - krull_dim(i), name + ": grade differs from codimension");
    else o.require(g <= n - krull_dim(i), name + ": grade exceeds codimension");
  }
}

template <class K>
void fitting_check(Outcome& o, const PresentedModule<K>& l, const std::string& name) {
  auto fit = minor_ideal(l.presentation(), l.rank0());
  auto ann = annihilator(l);
  o.require(ann.contains(fit), name + ": Fitting ideal not inside the annihilator");
  o.require(same_radical(ann, fit), name + ": Fitting ideal and annihilator have different radicals");
}

Outcome engine_self_checks() {
  Outcome o;
  auto r = make_ring({"u", "v"}, {"x", "y", "z"});
  struct Entry {
    const char* name;
    std::vector<const char*> gens;
    bool unmixed;
  };
  std::vector<Entry> corpus = {
      {"P1", {"x - u*y", "z^2 - v*y^2"}, true},
      {"P2", {"x*y - u*z^2"}, true},
      {"P3", {"x^2 - u*y*z", "y^2 - v*x*z"}, true},
      {"J", {"x*y", "u*x*z"}, false},
      {"N", {"x^2", "u*x*y"}, false},
      {"H2", {"x*z - u*y^2", "y*z - v*x^2"}, false},
      {"Z", {"x^2 - u", "y^2", "z - v"}, true},
      {"T", {"x*y - u*z^2", "x*z - v*y^2", "y*z - x^2"}, false},
  };
  std::vector<std::vector<std::vector<const char*>>> matrices = {
      {{"x", "u*y"}, {"v*z", "x"}},
      {{"x", "y", "0"}, {"0", "u*x", "z + v*y"}},
      {{"x^2 - u*y", "z"}},
  };
  std::vector<Point> points = {{Rational(2), Rational(-3)}, {Rational(5), Rational(7)}};
  int members = 0;
  for (const auto& e : corpus) {
    std::vector<FPoly> gens;
    for (auto g : e.gens) gens.push_back(parse_poly(r, g));
    FIdeal i(r, gens);
    self_checks(o, i, e.unmixed, e.name);
    fitting_check(o, FModule::cyclic(i), e.name);
    for (const auto& p : points) {
      auto si = specialize_ideal(i, p);
      self_checks(o, si.ideal, e.unmixed, std::string(e.name) + " at " + point_str(p));
      fitting_check(o, QModule::cyclic(si.ideal), std::string(e.name) + " at " + point_str(p));
    }
    ++members;
  }
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    std::vector<std::vector<FPoly>> rows;
    for (const auto& row : matrices[k]) {
      rows.emplace_back();
      for (auto x : row) rows.back().push_back(parse_poly(r, x));
    }
    FModule l(FMatrix::from_rows(r, rows));
    std::string name = "module " + std::to_string(k);
    fitting_check(o, l, name);
    auto fc = free_resolution(l, false);
    o.require(be_exactness(fc), name + ": resolution fails the exactness criterion");
    if (l.is_homogeneous()) {
      auto [pd, depth] = projdim_and_depth(l);
      std::vector<FPoly> vars = {FPoly::variable(r, 0), FPoly::variable(r, 1), FPoly::variable(r, 2)};
      o.require(grade_on_module(FIdeal(r, vars), l) + pd == 3, name + ": depth + projdim != n");
    }
    for (const auto& p : points) {
      auto sm = specialize_module(l, p);
      fitting_check(o, sm.module, name + " at " + point_str(p));
      o.require(be_exactness(free_resolution(sm.module, false)), name + ": specialized resolution not exact");
    }
    ++members;
  }
  if (o.ok) o.note = std::to_string(members) + " corpus members, generic and at 2 points each";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "example (uX^2 - 1) at 4 splits as an intersection", example_reproduction},
      {2, "leading-term ideals of specialized generators", groebner_soundness},
      {3, "dim, Ann and height preserved", dim_ann_height},
      {4, "exactness of specialized complexes", exactness},
      {5, "sum, intersection, quotient, colon, product, annihilator", operations},
      {6, "finite colength preserved", colength},
      {7, "projdim, depth and Betti numbers preserved", projdim_depth},
      {8, "Ext and Tor colengths, annihilators and grade", ext_tor},
      {9, "local cohomology annihilators and generalized CM", local_cohomology},
      {10, "standard systems of parameters", standard_sop},
      {11, "Gorenstein property preserved", gorenstein},
      {12, "NCM and singular loci, reduced and normal flags", loci},
      {13, "engine self-checks", engine_self_checks},
  };
  int failed = 0;
  auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %s  %s (%s; %.1fs)\n", c.id, o.ok ? "PASS" : "FAIL", c.title, o.note.c_str(), secs);
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.1fs\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
              total);
  return failed == 0 ? 0 : 1;
}
