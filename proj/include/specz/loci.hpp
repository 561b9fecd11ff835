#pragma once

#include <string>
#include <vector>

#include "specz/modules.hpp"

namespace specz {

enum class LocusKind { Sing, NCM };

inline std::string_view to_string(LocusKind k) { return k == LocusKind::Sing ? "Sing" : "NCM"; }

template <class K>
struct LocusLayer {
  int r = 0;                  // height of the layer's ideal
  Ideal<K> j1;                // I + r x r Jacobian minors
  Ideal<K> top;               // Ann Ext^r(R/I, R); radical = height-r minimal primes
  Ideal<K> residual;          // saturate(I, top)
};

template <class K>
struct LocusReport {
  Ideal<K> ideal;
  LocusKind kind = LocusKind::Sing;
  std::vector<LocusLayer<K>> layers;  // Sing only
  std::vector<Ideal<K>> ext_annihilators;  // NCM only: index i holds Ann Ext^{n-i}(R/a, R)
};

template <class K>
Matrix<K> jacobian(const Ideal<K>& i) {
  const RingPtr& ring = i.ring();
  Matrix<K> a(ring, i.gens().size(), ring->nvars());
  for (std::size_t g = 0; g < i.gens().size(); ++g)
    for (std::size_t v = 0; v < ring->nvars(); ++v) a.at(g, v) = i.gens()[g].derivative(v);
  return a;
}

/// Defining ideal J of Sing(R/I): each layer contributes I + (r x r
/// Jacobian minors) and passes the lower-dimensional part saturate(I, top)
/// to the next layer; J is the intersection of the layer ideals.
template <class K>
LocusReport<K> jacobian_singular_locus(const Ideal<K>& input) {
  if (input.is_unit()) fail(ErrorCode::UnitIdeal, "singular locus of the zero ring");
  const RingPtr& ring = input.ring();
  LocusReport<K> rep;
  rep.kind = LocusKind::Sing;
  std::vector<Ideal<K>> parts;
  Ideal<K> cur = input;
  while (!cur.is_unit()) {
    LocusLayer<K> layer;
    if (cur.is_zero()) {
      // R itself is regular
      layer.r = 0;
      layer.j1 = Ideal<K>::unit(ring);
      layer.top = Ideal<K>::zero(ring);
      layer.residual = Ideal<K>::unit(ring);
      rep.layers.push_back(layer);
      parts.push_back(layer.j1);
      break;
    }
    // reduced basis as generators keeps the Jacobian small
    Ideal<K> gens(ring, cur.basis());
    const int n = static_cast<int>(ring->nvars());
    auto exts = ext_modules(PresentedModule<K>::cyclic(gens), PresentedModule<K>::free(ring, 1), n);
    int r = 0;
    while (r <= n && is_zero_module(exts[static_cast<std::size_t>(r)].module)) ++r;
    layer.r = r;
    layer.j1 = ideal_sum(gens, minor_ideal(jacobian(gens), static_cast<std::size_t>(r)));
    layer.top = annihilator(exts[static_cast<std::size_t>(r)].module);
    layer.residual = saturate(gens, layer.top);
    parts.push_back(layer.j1);
    cur = layer.residual;
    rep.layers.push_back(std::move(layer));
  }
  rep.ideal = intersect_all(parts, ring);
  return rep;
}

/// Defining ideal of the non-Cohen-Macaulay locus: a + prod_{0 <= i < j <= d}
/// (a_i + a_j) with a_i = Ann Ext^{n-i}(R/a, R).
template <class K>
LocusReport<K> ncm_locus(const Ideal<K>& a) {
  if (a.is_unit()) fail(ErrorCode::UnitIdeal, "non-CM locus of the zero ring");
  const RingPtr& ring = a.ring();
  const int n = static_cast<int>(ring->nvars());
  const int d = krull_dim(a);
  auto exts = ext_modules(PresentedModule<K>::cyclic(a), PresentedModule<K>::free(ring, 1), n);
  LocusReport<K> rep;
  rep.kind = LocusKind::NCM;
  for (int i = 0; i <= d; ++i) rep.ext_annihilators.push_back(annihilator(exts[static_cast<std::size_t>(n - i)].module));
  Ideal<K> b = Ideal<K>::unit(ring);
  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      auto s = ideal_sum(rep.ext_annihilators[static_cast<std::size_t>(i)],
                         rep.ext_annihilators[static_cast<std::size_t>(j)]);
      if (!s.is_unit()) b = ideal_product(b, s);
    }
  rep.ideal = ideal_sum(a, b);
  return rep;
}

/// Whether a equals its equidimensional hull Ann Ext^r(R/a, R).
template <class K>
bool is_unmixed(const Ideal<K>& a) {
  if (a.is_unit() || a.is_zero()) return true;
  const RingPtr& ring = a.ring();
  int r = height(a);
  auto e = ext_module(PresentedModule<K>::cyclic(a), PresentedModule<K>::free(ring, 1), r);
  return annihilator(e.module) == a;
}

struct SerreResult {
  bool s = false;
  bool r = false;
};

namespace detail {
template <class K>
int quotient_grade(const Ideal<K>& b, const Ideal<K>& a) {
  if (a.contains(b)) return 0;
  return grade_on_module(b, PresentedModule<K>::cyclic(a));
}

template <class K>
SerreResult serre_from(const Ideal<K>& a, const Ideal<K>& b, const Ideal<K>& c, int t) {
  SerreResult out;
  out.s = b.is_unit() || quotient_grade(b, a) >= t;
  if (c.is_unit()) {
    out.r = true;
  } else {
    int h = krull_dim(a) - dimension_or_minus_one(ideal_sum(a, c));
    out.r = h > t;
  }
  return out;
}

template <class K>
void require_serre_input(const Ideal<K>& a, int t) {
  if (t < 0) fail(ErrorCode::InvalidArgument, "Serre index must be nonnegative");
  if (a.is_unit()) fail(ErrorCode::UnitIdeal, "Serre conditions on the zero ring");
  if (!is_unmixed(a)) fail(ErrorCode::NotUnmixedDeclared, "ideal has components of different height");
}
}  // namespace detail

template <class K>
SerreResult serre_check(const Ideal<K>& a, int t) {
  detail::require_serre_input(a, t);
  auto b = ncm_locus(a).ideal;
  auto c = jacobian_singular_locus(a).ideal;
  return detail::serre_from(a, b, c, t);
}

struct RingQuality {
  bool reduced = false;
  bool normal = false;
  bool regular = false;
};

template <class K>
RingQuality ring_quality(const Ideal<K>& a) {
  detail::require_serre_input(a, 0);
  auto b = ncm_locus(a).ideal;
  auto c = jacobian_singular_locus(a).ideal;
  RingQuality q;
  auto s1r0 = detail::serre_from(a, b, c, 0);
  auto s1 = detail::serre_from(a, b, c, 1);
  auto s2r1 = detail::serre_from(a, b, c, 1);
  auto s2 = detail::serre_from(a, b, c, 2);
  q.reduced = s1.s && s1r0.r;
  q.normal = s2.s && s2r1.r;
  q.regular = detail::serre_from(a, b, c, krull_dim(a)).r;
  return q;
}

}  // namespace specz
