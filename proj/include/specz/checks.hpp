#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "specz/loci.hpp"
#include "specz/session.hpp"

namespace specz {

enum class CheckStatus { Pass, Fail, Anomaly, Skipped };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Anomaly: return "ANOMALY";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

struct Counterexample {
  std::uint64_t seed = 0;
  int trial = -1;  // -1: failure before any point was tried
  Point alpha;
  std::vector<std::string> inputs;  // declarations needed to replay
  std::string detail;
  bool on_certificate = false;
};

struct CheckReport {
  std::string theorem;
  std::vector<std::string> subjects;
  CheckStatus status = CheckStatus::Pass;
  int trials = 0;
  std::uint64_t seed = 0;
  long bound = 0;
  std::vector<Point> alphas;
  std::string certificate = "1";
  long elapsed_ms = 0;
  std::optional<Counterexample> counterexample;
  std::string reason;
};

/// Precondition of a theorem check that does not hold for the subjects.
struct SkipCheck {
  std::string reason;
};

inline bool is_precondition_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotHomogeneous:
    case ErrorCode::NotUnmixedDeclared:
    case ErrorCode::NotASOP:
    case ErrorCode::ZeroModule:
    case ErrorCode::UnitIdeal:
    case ErrorCode::DegenerateGrade:
    case ErrorCode::NotZeroDimensional:
    case ErrorCode::ZeroIdeal:
    case ErrorCode::NotAComplex: return true;
    default: return false;
  }
}

namespace detail {

template <class K>
struct Subject {
  Ideal<K> ideal;              // ideal slots: generated by the cleared reduced basis
  std::vector<Poly<K>> given;  // ideal slots: declared generators with contents cleared
  PresentedModule<K> module;
  std::vector<Matrix<K>> maps;
};

enum class OutKind { Int, Flag, List, Ideal, Radical };

template <class K>
struct Out {
  std::string label;
  OutKind kind = OutKind::Int;
  std::vector<long> nums;
  Ideal<K> ideal;
};

template <class K>
class Outs {
 public:
  void num(std::string label, long v) { v_.push_back({std::move(label), OutKind::Int, {v}, {}}); }
  void flag(std::string label, bool v) { v_.push_back({std::move(label), OutKind::Flag, {v ? 1L : 0L}, {}}); }
  void list(std::string label, std::vector<long> v) { v_.push_back({std::move(label), OutKind::List, std::move(v), {}}); }
  void ideal(std::string label, Ideal<K> i) { v_.push_back({std::move(label), OutKind::Ideal, {}, std::move(i)}); }
  void radical(std::string label, Ideal<K> i) {
    v_.push_back({std::move(label), OutKind::Radical, {}, std::move(i)});
  }
  std::vector<Out<K>> take() { return std::move(v_); }

 private:
  std::vector<Out<K>> v_;
};

template <class T>
std::vector<long> longs(const std::vector<T>& xs) {
  return std::vector<long>(xs.begin(), xs.end());
}

/// The quantities a theorem tag asserts to be preserved, computed over one
/// coefficient field.
template <class K>
std::vector<Out<K>> evaluate(const std::string& tag, const std::vector<Subject<K>>& s) {
  Outs<K> o;
  auto r1 = [](const RingPtr& ring) { return PresentedModule<K>::free(ring, 1); };
  if (tag == "height-1.1") {
    o.num("height", height(s[0].ideal));
    o.flag("unmixed", is_unmixed(s[0].ideal));
  } else if (tag == "colon-kr1") {
    const auto& p = s[0].ideal;
    for (std::size_t k = 0; k < s[1].given.size(); ++k) {
      const auto& g = s[1].given[k];
      o.flag("g" + std::to_string(k + 1) + " in P", p.contains(g));
      o.ideal("P : g" + std::to_string(k + 1), colon(p, g));
    }
  } else if (tag == "exact-2.2") {
    auto rep = be_exactness_report(s[0].maps);
    o.flag("exact", rep.exact);
    o.list("ranks", longs(rep.ranks));
    o.list("grades", longs(rep.grades));
  } else if (tag == "ops-2.3") {
    const auto& i = s[0].ideal;
    const auto& j = s[1].ideal;
    o.ideal("I + J", ideal_sum(i, j));
    o.ideal("I cap J", intersect(i, j));
    auto q = quotient_by_ideal(PresentedModule<K>::cyclic(j), i.gens());
    o.num("dim R/(I + J)", module_dimension(q));
    o.ideal("Ann R/(I + J)", annihilator(q));
  } else if (tag == "gens-2.4") {
    o.ideal("ideal of the generators", Ideal<K>(s[0].ideal.ring(), s[0].given));
  } else if (tag == "colon-prod-2.5") {
    o.ideal("I : J", colon(s[0].ideal, s[1].ideal));
    o.ideal("I J", ideal_product(s[0].ideal, s[1].ideal));
  } else if (tag == "ann-dim-2.6") {
    o.ideal("Ann", annihilator(s[0].module));
    o.num("dim", module_dimension(s[0].module));
  } else if (tag == "height-2.7") {
    const auto& a = s[0].ideal;
    const auto& b = s[1].ideal;
    if (!a.contains(b)) throw SkipCheck{"the second ideal is not contained in the first"};
    o.num("grade a", grade_on_ring(a).value);
    o.num("height a/b", dimension_or_minus_one(b) - dimension_or_minus_one(a));
  } else if (tag == "length-2.8") {
    auto len = module_colength(s[0].module);
    if (!len) throw SkipCheck{"the module does not have finite length"};
    o.num("length", *len);
  } else if (tag == "depth-projdim-3.1") {
    auto [pd, depth] = projdim_and_depth(s[0].module);
    o.num("projdim", pd);
    o.num("depth", depth);
    o.list("betti", longs(free_resolution(s[0].module, true).betti()));
  } else if (tag == "cm-3.2") {
    auto rep = classify_cm(s[0].module);
    o.flag("cm", rep.cm);
    o.num("dim", rep.dim);
    o.num("depth", rep.depth);
  } else if (tag == "ext-tor-3.3") {
    const auto& l = s[0].module;
    const auto& m = s[1].module;
    const int n = static_cast<int>(l.ring()->nvars());
    auto exts = ext_modules(l, m, n);
    auto tors = tor_modules(l, m, n);
    for (int i = 0; i <= n; ++i) {
      const auto& e = exts[static_cast<std::size_t>(i)];
      const auto& t = tors[static_cast<std::size_t>(i)];
      std::string k = std::to_string(i);
      o.num("length Ext^" + k, e.colength ? *e.colength : -1);
      o.ideal("Ann Ext^" + k, annihilator(e.module));
      o.num("length Tor_" + k, t.colength ? *t.colength : -1);
      o.ideal("Ann Tor_" + k, annihilator(t.module));
    }
  } else if (tag == "grade-3.4") {
    long g = -1;
    try {
      g = grade_on_module(s[0].ideal, s[1].module);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateGrade) throw;
    }
    o.num("grade(a, L)", g);
    auto ann = annihilator(s[1].module);
    o.num("grade L", ann.is_unit() ? -1 : grade_on_ring(ann).value);
  } else if (tag == "anncoh-3.5") {
    const auto& l = s[0].module;
    const int n = static_cast<int>(l.ring()->nvars());
    auto exts = ext_modules(l, r1(l.ring()), n);
    for (int i = 0; i <= n; ++i)
      o.ideal("Ann Ext^" + std::to_string(n - i), annihilator(exts[static_cast<std::size_t>(n - i)].module));
  } else if (tag == "gcm-3.6") {
    auto rep = classify_cm(s[0].module);
    o.flag("generalized cm", rep.generalized_cm);
    o.flag("cm", rep.cm);
    o.list("ext colengths", rep.ext_colengths);
  } else if (tag == "standard-3.7") {
    o.flag("standard", standard_sop_check(s[0].module, s[1].given));
  } else if (tag == "gorenstein-4.2") {
    o.flag("gorenstein", gorenstein_check(s[0].ideal));
  } else if (tag == "ncm-4.3") {
    o.radical("NCM locus", ncm_locus(s[0].ideal).ideal);
  } else if (tag == "sing-4.4") {
    o.radical("Sing locus", jacobian_singular_locus(s[0].ideal).ideal);
  } else if (tag == "serre-4.5") {
    const auto& a = s[0].ideal;
    require_serre_input(a, 0);
    auto b = ncm_locus(a).ideal;
    auto c = jacobian_singular_locus(a).ideal;
    for (int t = 0; t <= 2; ++t) {
      auto sr = serre_from(a, b, c, t);
      o.flag("S" + std::to_string(t), sr.s);
      o.flag("R" + std::to_string(t), sr.r);
    }
    auto s1 = serre_from(a, b, c, 1);
    auto s2 = serre_from(a, b, c, 2);
    auto r0 = serre_from(a, b, c, 0);
    o.flag("reduced", s1.s && r0.r);
    o.flag("normal", s2.s && s1.r);
    o.flag("regular", serre_from(a, b, c, krull_dim(a)).r);
  } else {
    fail(ErrorCode::UnknownName, "unknown theorem tag '" + tag + "'");
  }
  return o.take();
}

inline std::vector<FPoly> cleared_gens(const std::vector<FPoly>& gens) {
  std::vector<FPoly> out;
  for (const auto& g : gens)
    if (!g.is_zero()) out.push_back(clear_content(g).first);
  return out;
}

/// Module subject over Q(u); ideals become R/I on their cleared basis.
inline FModule module_subject(const Session& s, const std::string& name, Certificate& cert) {
  std::string ideal_name;
  if (s.ideals.count(name)) ideal_name = name;
  else if (auto it = s.module_defs.find(name); it != s.module_defs.end() && it->second.kind == ModuleDef::Kind::Quotient)
    ideal_name = it->second.ref;
  if (!ideal_name.empty()) {
    CertifiedBasis cb = certify_ideal(s.ideal(ideal_name));
    cert.merge(cb.cert);
    return FModule::cyclic(FIdeal(s.ring, cb.cleared));
  }
  FModule m = s.module(name);
  cert.merge(denominator_certificate(m.presentation()));
  return m;
}

inline QIdeal eval_ideal(const std::vector<FPoly>& gens, std::span<const Rational> alpha, const RingPtr& target) {
  std::vector<QPoly> out;
  for (const auto& g : gens) out.push_back(eval_poly(g, alpha, target));
  return QIdeal(target, out);
}

inline std::vector<QPoly> eval_all(const std::vector<FPoly>& gens, std::span<const Rational> alpha,
                                   const RingPtr& target) {
  std::vector<QPoly> out;
  for (const auto& g : gens) out.push_back(eval_poly(g, alpha, target));
  return out;
}

inline Subject<Rational> specialize_subject(const Subject<RatFunc>& g, std::span<const Rational> alpha,
                                            const RingPtr& target) {
  Subject<Rational> q;
  q.ideal = eval_ideal(g.ideal.gens(), alpha, target);
  q.given = eval_all(g.given, alpha, target);
  if (g.module.ring()) q.module = QModule(specialize_matrix(g.module.presentation(), alpha).first);
  for (const auto& m : g.maps) q.maps.push_back(specialize_matrix(m, alpha).first);
  return q;
}

inline std::string num_text(OutKind k, const std::vector<long>& v) {
  if (k == OutKind::Flag) return v[0] ? "true" : "false";
  if (k == OutKind::Int) return std::to_string(v[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string basis_text(const QIdeal& i) {
  std::string s = "(";
  const auto& b = i.basis();
  for (std::size_t k = 0; k < b.size(); ++k) s += (k ? ", " : "") + b[k].str();
  return s + ")";
}

struct GenericSide {
  std::vector<Out<RatFunc>> outs;
  std::vector<std::vector<FPoly>> cleared;  // cleared basis of each ideal-valued output
};

/// Empty when every quantity agrees at alpha; otherwise what differed.
inline std::string compare(const GenericSide& g, const std::vector<Out<Rational>>& q, std::span<const Rational> alpha,
                           const RingPtr& target) {
  if (g.outs.size() != q.size()) return "different number of computed quantities";
  for (std::size_t k = 0; k < q.size(); ++k) {
    const auto& a = g.outs[k];
    const auto& b = q[k];
    if (a.label != b.label) return "quantity '" + b.label + "' does not correspond to '" + a.label + "'";
    if (a.kind == OutKind::Ideal || a.kind == OutKind::Radical) {
      QIdeal expected = eval_ideal(g.cleared[k], alpha, target);
      bool same = a.kind == OutKind::Ideal ? expected == b.ideal : same_radical(expected, b.ideal);
      if (!same)
        return a.label + ": specialized " + basis_text(expected) + ", computed at the point " + basis_text(b.ideal) +
               (a.kind == OutKind::Radical ? " (radicals differ)" : "");
    } else if (a.nums != b.nums) {
      return a.label + ": " + num_text(a.kind, a.nums) + " over Q(u), " + num_text(b.kind, b.nums) + " at the point";
    }
  }
  return {};
}

}  // namespace detail

/// Runs one theorem check: computes the asserted quantities once over Q(u)
/// with a certificate, then at each trial point over Q, and compares.
inline CheckReport run_check(const Session& s, const CheckSpec& c) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.theorem = c.tag;
  rep.subjects = c.subjects;
  rep.seed = c.seed;
  rep.bound = c.bound;
  const TagInfo* info = find_tag(c.tag);
  if (!info) fail(ErrorCode::UnknownName, "unknown theorem tag '" + c.tag + "'");
  if (c.subjects.size() != info->slots.size())
    fail(ErrorCode::ArityMismatch, c.tag + " takes " + std::to_string(info->slots.size()) + " subject(s)");

  auto finish = [&]() {
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
  };
  auto skip = [&](std::string reason) {
    rep.status = CheckStatus::Skipped;
    rep.reason = std::move(reason);
    return finish();
  };
  std::vector<std::string> inputs = {ring_line(s)};
  for (const auto& n : dependencies(s, c.subjects)) inputs.push_back(definition_line(s, n));

  // generic side
  Certificate cert;
  std::vector<detail::Subject<RatFunc>> subjects;
  detail::GenericSide generic;
  try {
    PivotScope scope;
    for (std::size_t k = 0; k < c.subjects.size(); ++k) {
      const std::string& name = c.subjects[k];
      detail::Subject<RatFunc> sub;
      switch (info->slots[k]) {
        case Slot::Ideal: {
          const FIdeal& i = s.ideal(name);
          CertifiedBasis cb = certify_ideal(i);
          cert.merge(cb.cert);
          sub.ideal = FIdeal(s.ring, cb.cleared);
          sub.given = detail::cleared_gens(i.gens());
          break;
        }
        case Slot::Module: sub.module = detail::module_subject(s, name, cert); break;
        case Slot::Complex: {
          if (s.complexes.count(name)) {
            sub.maps = s.complex(name);
          } else {
            auto fc = free_resolution(detail::module_subject(s, name, cert), false);
            if (!be_exactness(fc)) {
              rep.status = CheckStatus::Fail;
              rep.reason = "engine self-check: the resolution of " + name + " fails the exactness criterion";
              rep.counterexample = Counterexample{c.seed, -1, {}, inputs, rep.reason, false};
              return finish();
            }
            sub.maps = fc.maps;
          }
          for (const auto& m : sub.maps) cert.merge(denominator_certificate(m));
          break;
        }
      }
      subjects.push_back(std::move(sub));
    }
    generic.outs = detail::evaluate(c.tag, subjects);
    for (const auto& o : generic.outs) {
      if (o.kind != detail::OutKind::Ideal && o.kind != detail::OutKind::Radical) {
        generic.cleared.emplace_back();
        continue;
      }
      CertifiedBasis cb = certify_ideal(o.ideal);
      cert.merge(cb.cert);
      generic.cleared.push_back(cb.cleared);
    }
    cert.merge(scope.certificate());
  } catch (const SkipCheck& e) {
    return skip(e.reason);
  } catch (const Error& e) {
    if (!is_precondition_error(e.code())) throw;
    return skip(e.what());
  }
  rep.certificate = cert.str(s.ring->params());

  // trial points: explicit ones first, then sampled ones
  std::vector<std::pair<Point, bool>> fixed;
  for (const auto& p : c.points) fixed.emplace_back(s.point(p), false);
  for (const auto& p : c.alphas) {
    require_arity(s.ring, p);
    fixed.emplace_back(p, false);
  }
  int sampled = fixed.empty() || c.trials_given ? c.trials : 0;

  RingPtr target = specialized_ring(s.ring);
  PointSampler sampler(c.seed);
  const int total = static_cast<int>(fixed.size()) + sampled;
  std::optional<Counterexample> first_fail, first_anomaly;
  for (int trial = 0; trial < total; ++trial) {
    Point alpha;
    if (trial < static_cast<int>(fixed.size())) {
      alpha = fixed[static_cast<std::size_t>(trial)].first;
    } else {
      try {
        alpha = sampler.next(cert, s.ring->nparams(), c.bound);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ExhaustedSampling) throw;
        if (first_fail || first_anomaly) break;
        return skip(e.what());
      }
    }
    bool on_cert = cert.vanishes_at(alpha);
    rep.alphas.push_back(alpha);
    ++rep.trials;
    std::string diff;
    try {
      std::vector<detail::Subject<Rational>> special;
      for (const auto& g : subjects) special.push_back(detail::specialize_subject(g, alpha, target));
      diff = detail::compare(generic, detail::evaluate(c.tag, special), alpha, target);
    } catch (const SkipCheck& e) {
      diff = "precondition fails at the point: " + e.reason;
    } catch (const Error& e) {
      diff = std::string("error at the point: ") + e.what();
    }
    if (diff.empty()) continue;
    Counterexample cx{c.seed, trial, alpha, inputs, diff, on_cert};
    auto& slot = on_cert ? first_fail : first_anomaly;
    if (!slot) slot = std::move(cx);
  }
  if (first_fail) {
    rep.status = CheckStatus::Fail;
    rep.counterexample = first_fail;
    rep.reason = "mismatch at a point on the certificate zero set";
  } else if (first_anomaly) {
    rep.status = CheckStatus::Anomaly;
    rep.counterexample = first_anomaly;
    rep.reason = "mismatch at a point off the certificate";
  }
  return finish();
}

inline std::vector<CheckReport> run_session(const Session& s) {
  std::vector<CheckReport> out;
  for (const auto& c : s.checks) out.push_back(run_check(s, c));
  return out;
}

}  // namespace specz
