#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "specz/matrix.hpp"

namespace specz {

/// L = coker(F1 -> F0) given by its presentation matrix.
template <class K>
class PresentedModule {
 public:
  PresentedModule() = default;
  explicit PresentedModule(Matrix<K> presentation) : pres_(std::move(presentation)) {
    grading_ = infer_grading(pres_);
  }

  /// R/I presented by the generators of I.
  static PresentedModule cyclic(const Ideal<K>& i) { return PresentedModule(Matrix<K>::row(i.ring(), i.gens())); }
  static PresentedModule free(RingPtr ring, std::size_t rank) { return PresentedModule(Matrix<K>(ring, rank, 0)); }

  const Matrix<K>& presentation() const { return pres_; }
  const RingPtr& ring() const { return pres_.ring(); }
  std::size_t rank0() const { return pres_.rows(); }
  bool is_homogeneous() const { return grading_.has_value(); }
  const std::optional<Grading>& grading() const { return grading_; }

  std::string str() const { return "coker " + pres_.str() + " (rank " + std::to_string(rank0()) + ")"; }

 private:
  Matrix<K> pres_;
  std::optional<Grading> grading_;
};

using QModule = PresentedModule<Rational>;
using FModule = PresentedModule<RatFunc>;

/// 0 -> F_l -> ... -> F_0 with maps[j-1] = phi_j : F_j -> F_{j-1}.
template <class K>
struct FreeComplex {
  RingPtr ring;
  std::size_t rank0 = 0;
  std::vector<Matrix<K>> maps;
  bool minimal = false;

  std::size_t length() const { return maps.size(); }
  std::size_t rank(std::size_t i) const {
    if (i == 0) return maps.empty() ? rank0 : maps[0].rows();
    return i <= maps.size() ? maps[i - 1].cols() : 0;
  }
  std::vector<std::size_t> betti() const {
    std::vector<std::size_t> b;
    for (std::size_t i = 0; i <= maps.size(); ++i) b.push_back(rank(i));
    return b;
  }
};

template <class K>
struct ExtTorResult {
  int index = 0;
  PresentedModule<K> module;
  bool finite_length = false;
  std::optional<long> colength;
};

// -- syzygies and column reduction ------------------------------------------

namespace detail {
inline std::vector<int> normalized_shift(std::vector<int> s) {
  if (s.empty()) return s;
  int lo = *std::min_element(s.begin(), s.end());
  for (auto& x : s) x -= lo;
  return s;
}
}  // namespace detail

/// Generators of the kernel of A : R^k -> R^r, as a k x s matrix whose
/// columns form a Groebner basis of the syzygy module.
template <class K>
Matrix<K> syzygies(const Matrix<K>& a) {
  const std::size_t r = a.rows(), k = a.cols();
  const RingPtr& ring = a.ring();
  if (k == 0) return Matrix<K>(ring, 0, 0);
  if (r == 0 || a.is_zero()) return Matrix<K>::identity(ring, k);
  std::vector<int> shift;
  if (auto g = infer_grading(a)) {
    shift = g->row;
    shift.insert(shift.end(), g->col.begin(), g->col.end());
    shift = detail::normalized_shift(std::move(shift));
  }
  TermOrder ord = module_order(ring, true, shift);
  std::vector<Terms<K>> gens;
  gens.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    auto entries = a.column(j);
    entries.resize(r + k, Poly<K>(ring));
    entries[r + j] = Poly<K>::constant(ring, K(1));
    gens.push_back(to_vector(entries, ord));
  }
  std::vector<std::vector<Poly<K>>> cols;
  for (const auto& g : groebner_basis(gens, ord))
    if (g.front().m.comp >= static_cast<int>(r)) cols.push_back(from_vector(g, ring, k, static_cast<int>(r)));
  return Matrix<K>::from_columns(ring, k, cols);
}

/// Drops zero columns and columns lying in the span of the ones kept
/// before them. With a grading, columns are visited by increasing degree,
/// which leaves a minimal generating set.
template <class K>
Matrix<K> reduce_columns(const Matrix<K>& a, const std::vector<int>* row_degrees = nullptr) {
  Matrix<K> b = a.drop_zero_columns();
  std::vector<std::size_t> order(b.cols());
  std::iota(order.begin(), order.end(), 0);
  if (auto g = infer_grading(b, row_degrees)) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return g->col[x] < g->col[y]; });
  } else {
    auto deg = [&](std::size_t j) {
      int d = 0;
      for (std::size_t i = 0; i < b.rows(); ++i) d = std::max(d, b.at(i, j).is_zero() ? 0 : b.at(i, j).degree());
      return d;
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return deg(x) < deg(y); });
  }
  TermOrder ord = module_order(b.ring(), false);
  std::vector<Terms<K>> gb;
  std::vector<std::size_t> keep;
  for (std::size_t j : order) {
    auto v = to_vector(b.column(j), ord);
    if (!gb.empty() && reduce(v, gb, ord).empty()) continue;
    keep.push_back(j);
    gb.push_back(std::move(v));
    gb = groebner_basis(gb, ord);
  }
  return b.select_columns(keep);
}

/// Removes generators of coker(a) killed by a constant entry: for a unit
/// a[i][j], row i and column j are deleted and the rest updated by
/// a[r][c] - a[r][j] a[i][c] / a[i][j]. Returns the new presentation.
template <class K>
Matrix<K> eliminate_units(Matrix<K> a) {
  for (;;) {
    std::size_t pi = a.rows(), pj = a.cols();
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto& e = a.at(i, j);
        if (e.is_zero() || !e.is_constant()) continue;
        std::size_t fill = 0;
        for (std::size_t r = 0; r < a.rows(); ++r) fill += !a.at(r, j).is_zero();
        if (fill < best) {
          best = fill;
          pi = i;
          pj = j;
        }
      }
    if (pi == a.rows()) return a;
    K unit = a.at(pi, pj).lead_coefficient();
    note_pivot(unit);
    K inv = K(1) / unit;
    Matrix<K> b(a.ring(), a.rows() - 1, a.cols() - 1);
    for (std::size_t r = 0, rr = 0; r < a.rows(); ++r) {
      if (r == pi) continue;
      const auto& arj = a.at(r, pj);
      for (std::size_t c = 0, cc = 0; c < a.cols(); ++c) {
        if (c == pj) continue;
        auto v = a.at(r, c);
        if (!arj.is_zero() && !a.at(pi, c).is_zero()) v -= (arj * a.at(pi, c)).scaled(inv);
        b.at(rr, cc++) = std::move(v);
      }
      ++rr;
    }
    a = std::move(b);
  }
}

/// Smaller presentation of the same module: unit elimination, then
/// redundant relations dropped.
template <class K>
Matrix<K> prune_presentation(const Matrix<K>& a) {
  return reduce_columns(eliminate_units(a));
}

template <class K>
PresentedModule<K> prune(const PresentedModule<K>& m) {
  return PresentedModule<K>(prune_presentation(m.presentation()));
}

// -- module-level invariants --------------------------------------------------

/// Leading monomials of a TOP Groebner basis of the relations.
template <class K>
std::vector<Monomial> relation_leads(const Matrix<K>& pres) {
  TermOrder ord = module_order(pres.ring(), false);
  std::vector<Monomial> lead;
  for (const auto& g : column_basis(pres, ord)) lead.push_back(g.front().m);
  return lead;
}

/// Krull dimension of the module (max over components of the leading
/// module's dimension); -1 for the zero module.
template <class K>
int module_dimension(const PresentedModule<K>& m) {
  auto lead = relation_leads(m.presentation());
  int d = -1;
  for (std::size_t c = 0; c < m.rank0(); ++c)
    d = std::max(d, independent_set_dimension(lead, m.ring()->nvars(), static_cast<int>(c)));
  return d;
}

/// Vector-space dimension over the coefficient field; nullopt when infinite.
template <class K>
std::optional<long> module_colength(const PresentedModule<K>& m) {
  auto lead = relation_leads(m.presentation());
  long total = 0;
  for (std::size_t c = 0; c < m.rank0(); ++c) {
    long k = count_standard_monomials(lead, m.ring()->nvars(), static_cast<int>(c));
    if (k < 0) return std::nullopt;
    total += k;
  }
  return total;
}

template <class K>
bool is_zero_module(const PresentedModule<K>& m) {
  return module_dimension(m) < 0;
}

/// Ann L as the intersection of the module colons (Im phi : e_j).
template <class K>
Ideal<K> annihilator(const PresentedModule<K>& m) {
  const RingPtr& ring = m.ring();
  std::vector<Ideal<K>> parts;
  for (std::size_t j = 0; j < m.rank0(); ++j) {
    Matrix<K> e(ring, m.rank0(), 1);
    e.at(j, 0) = Poly<K>::constant(ring, K(1));
    Matrix<K> z = syzygies(hcat(e, m.presentation()));
    std::vector<Poly<K>> gens;
    for (std::size_t c = 0; c < z.cols(); ++c) gens.push_back(z.at(0, c));
    parts.emplace_back(ring, gens);
  }
  return intersect_all(parts, ring);
}

/// M / (J M) for an ideal J.
template <class K>
PresentedModule<K> quotient_by_ideal(const PresentedModule<K>& m, const std::vector<Poly<K>>& ideal_gens) {
  Matrix<K> rel = m.presentation();
  const std::size_t r = m.rank0();
  Matrix<K> extra(m.ring(), r, r * ideal_gens.size());
  for (std::size_t k = 0; k < ideal_gens.size(); ++k)
    for (std::size_t i = 0; i < r; ++i) extra.at(i, k * r + i) = ideal_gens[k];
  return PresentedModule<K>(hcat(rel, extra));
}

// -- resolutions ----------------------------------------------------------------

/// Free resolution of L, stopping when the kernel vanishes or after
/// `max_length` maps (default n + 1).
template <class K>
FreeComplex<K> free_resolution(const PresentedModule<K>& l, bool minimal, int max_length = -1) {
  if (minimal && !l.is_homogeneous()) fail(ErrorCode::NotHomogeneous, "minimal resolution needs a homogeneous module");
  const RingPtr& ring = l.ring();
  const int cap = max_length < 0 ? static_cast<int>(ring->nvars()) + 1 : max_length;
  FreeComplex<K> fc;
  fc.ring = ring;
  fc.minimal = minimal;
  Matrix<K> phi = prune_presentation(l.presentation());
  fc.rank0 = phi.rows();
  auto grading = infer_grading(phi);
  while (phi.cols() > 0 && static_cast<int>(fc.maps.size()) < cap) {
    fc.maps.push_back(phi);
    Matrix<K> next = syzygies(phi);
    const std::vector<int>* hint = grading ? &grading->col : nullptr;
    phi = reduce_columns(next, hint);
    grading = hint ? infer_grading(phi, hint) : infer_grading(phi);
  }
  return fc;
}

// -- homology -------------------------------------------------------------------

/// ker(d_out) / im(d_in) inside coker(n_source), with d_out landing in
/// coker(n_target). A null d_out means the whole module.
template <class K>
PresentedModule<K> homology(const Matrix<K>* d_out, const Matrix<K>* n_target, const Matrix<K>& d_in,
                            const Matrix<K>& n_source) {
  const RingPtr& ring = n_source.ring();
  const std::size_t s = n_source.rows();
  Matrix<K> kgens;
  if (d_out == nullptr) {
    kgens = Matrix<K>::identity(ring, s);
  } else {
    Matrix<K> z = syzygies(hcat(*d_out, *n_target));
    kgens = reduce_columns(z.select_rows(0, d_out->cols()));
  }
  if (kgens.cols() == 0) return PresentedModule<K>::free(ring, 0);
  Matrix<K> b = hcat(d_in, n_source);
  Matrix<K> z = syzygies(hcat(kgens, b));
  return PresentedModule<K>(prune_presentation(z.select_rows(0, kgens.cols())));
}

template <class K>
ExtTorResult<K> make_result(int index, PresentedModule<K> m) {
  ExtTorResult<K> r;
  r.index = index;
  r.colength = module_colength(m);
  r.finite_length = r.colength.has_value();
  r.module = std::move(m);
  return r;
}

/// Ext^i(L, M) for i = 0..imax from one resolution of L.
template <class K>
std::vector<ExtTorResult<K>> ext_modules(const PresentedModule<K>& l, const PresentedModule<K>& m, int imax) {
  require_same_ring(l.ring(), m.ring());
  const RingPtr& ring = l.ring();
  FreeComplex<K> f = free_resolution(l, false, imax + 1);
  const Matrix<K>& psi = m.presentation();
  const std::size_t g0 = m.rank0();
  std::vector<ExtTorResult<K>> out;
  for (int i = 0; i <= imax; ++i) {
    const std::size_t ri = f.rank(static_cast<std::size_t>(i));
    if (ri == 0 || g0 == 0) {
      out.push_back(make_result(i, PresentedModule<K>::free(ring, 0)));
      continue;
    }
    Matrix<K> n_source = block_diagonal(psi, ri);
    std::optional<Matrix<K>> d_out, n_target;
    if (static_cast<std::size_t>(i) < f.length()) {
      const auto& phi = f.maps[static_cast<std::size_t>(i)];
      d_out = kron_identity(phi.transpose(), g0);
      n_target = block_diagonal(psi, phi.cols());
    }
    Matrix<K> d_in(ring, ri * g0, 0);
    if (i > 0) d_in = kron_identity(f.maps[static_cast<std::size_t>(i - 1)].transpose(), g0);
    auto h = homology(d_out ? &*d_out : nullptr, n_target ? &*n_target : nullptr, d_in, n_source);
    out.push_back(make_result(i, std::move(h)));
  }
  return out;
}

template <class K>
ExtTorResult<K> ext_module(const PresentedModule<K>& l, const PresentedModule<K>& m, int i) {
  if (i < 0) fail(ErrorCode::InvalidArgument, "negative Ext index");
  return ext_modules(l, m, i).back();
}

/// Tor_i(L, M) for i = 0..imax.
template <class K>
std::vector<ExtTorResult<K>> tor_modules(const PresentedModule<K>& l, const PresentedModule<K>& m, int imax) {
  require_same_ring(l.ring(), m.ring());
  const RingPtr& ring = l.ring();
  FreeComplex<K> f = free_resolution(l, false, imax + 1);
  const Matrix<K>& psi = m.presentation();
  const std::size_t g0 = m.rank0();
  std::vector<ExtTorResult<K>> out;
  for (int i = 0; i <= imax; ++i) {
    const std::size_t ri = f.rank(static_cast<std::size_t>(i));
    if (ri == 0 || g0 == 0) {
      out.push_back(make_result(i, PresentedModule<K>::free(ring, 0)));
      continue;
    }
    Matrix<K> n_source = block_diagonal(psi, ri);
    std::optional<Matrix<K>> d_out, n_target;
    if (i > 0) {
      const auto& phi = f.maps[static_cast<std::size_t>(i - 1)];
      d_out = kron_identity(phi, g0);
      n_target = block_diagonal(psi, phi.rows());
    }
    Matrix<K> d_in(ring, ri * g0, 0);
    if (static_cast<std::size_t>(i) < f.length()) d_in = kron_identity(f.maps[static_cast<std::size_t>(i)], g0);
    auto h = homology(d_out ? &*d_out : nullptr, n_target ? &*n_target : nullptr, d_in, n_source);
    out.push_back(make_result(i, std::move(h)));
  }
  return out;
}

template <class K>
ExtTorResult<K> tor_module(const PresentedModule<K>& l, const PresentedModule<K>& m, int i) {
  if (i < 0) fail(ErrorCode::InvalidArgument, "negative Tor index");
  return tor_modules(l, m, i).back();
}

// -- ranks and minors -----------------------------------------------------------

namespace detail {
/// Fraction-free elimination; returns the rank and, for square input, the
/// determinant in `det`.
template <class K>
int bareiss(Matrix<K> m, Poly<K>* det = nullptr) {
  const RingPtr ring = m.ring();
  const std::size_t rows = m.rows(), cols = m.cols();
  Poly<K> prev = Poly<K>::constant(ring, K(1));
  std::size_t r = 0;
  bool negate = false;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m.at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
      negate = !negate;
    }
    note_pivot(m.at(r, c).lead_coefficient());
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m.at(i, j) = divide_exact(m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j), prev);
      m.at(i, c) = Poly<K>(ring);
    }
    prev = m.at(r, c);
    ++r;
  }
  if (det) {
    if (rows != cols || r < rows) *det = Poly<K>(ring);
    else *det = negate ? -m.at(rows - 1, cols - 1) : m.at(rows - 1, cols - 1);
  }
  return static_cast<int>(r);
}

inline void next_subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  if (k > n) return;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}
}  // namespace detail

template <class K>
int matrix_rank(const Matrix<K>& a) {
  return detail::bareiss(a);
}

template <class K>
Poly<K> determinant(const Matrix<K>& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::ArityMismatch, "determinant of a non-square matrix");
  if (a.rows() == 0) return Poly<K>::constant(a.ring(), K(1));
  Poly<K> d;
  detail::bareiss(a, &d);
  return d;
}

/// Ideal of t x t minors; I_0 = (1).
template <class K>
Ideal<K> minor_ideal(const Matrix<K>& a, std::size_t t) {
  const RingPtr& ring = a.ring();
  if (t == 0) return Ideal<K>::unit(ring);
  std::vector<std::vector<std::size_t>> rs, cs;
  detail::next_subsets(a.rows(), t, rs);
  detail::next_subsets(a.cols(), t, cs);
  std::vector<Poly<K>> gens;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      Matrix<K> sub(ring, t, t);
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) sub.at(i, j) = a.at(r[i], c[j]);
      auto d = determinant(sub);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
  return Ideal<K>(ring, std::move(gens));
}

template <class K>
std::pair<int, Ideal<K>> matrix_rank_and_minor_ideal(const Matrix<K>& a) {
  int r = matrix_rank(a);
  return {r, minor_ideal(a, static_cast<std::size_t>(r))};
}

// -- grade, depth, exactness ----------------------------------------------------

struct Grade {
  int value = 0;
  bool zero_ideal = false;
};

/// Smallest i with Ext^i(R/I, R) != 0.
template <class K>
Grade grade_on_ring(const Ideal<K>& i) {
  if (i.is_zero()) return {0, true};
  if (i.is_unit()) fail(ErrorCode::UnitIdeal, "grade of the unit ideal");
  const RingPtr& ring = i.ring();
  auto l = PresentedModule<K>::cyclic(i);
  auto r = PresentedModule<K>::free(ring, 1);
  const int n = static_cast<int>(ring->nvars());
  auto exts = ext_modules(l, r, n);
  for (int k = 0; k <= n; ++k)
    if (!is_zero_module(exts[static_cast<std::size_t>(k)].module)) return {k, false};
  fail(ErrorCode::InvalidArgument, "no nonvanishing Ext up to the number of variables");
}

/// Smallest i with Ext^i(R/a, L) != 0. Throws DegenerateGrade when aL = L
/// or aL = 0.
template <class K>
int grade_on_module(const Ideal<K>& a, const PresentedModule<K>& l) {
  require_same_ring(a.ring(), l.ring());
  if (a.is_unit()) fail(ErrorCode::UnitIdeal, "grade with respect to the unit ideal");
  if (is_zero_module(quotient_by_ideal(l, a.gens()))) fail(ErrorCode::DegenerateGrade, "aL = L");
  if (annihilator(l).contains(a)) fail(ErrorCode::DegenerateGrade, "a annihilates L");
  const int n = static_cast<int>(l.ring()->nvars());
  auto exts = ext_modules(PresentedModule<K>::cyclic(a), l, n);
  for (int k = 0; k <= n; ++k)
    if (!is_zero_module(exts[static_cast<std::size_t>(k)].module)) return k;
  fail(ErrorCode::InvalidArgument, "no nonvanishing Ext up to the number of variables");
}

template <class K>
std::pair<int, int> projdim_and_depth(const PresentedModule<K>& l) {
  if (!l.is_homogeneous()) fail(ErrorCode::NotHomogeneous, "projdim/depth need a homogeneous module");
  if (is_zero_module(l)) fail(ErrorCode::ZeroModule, "projdim/depth of the zero module");
  auto fc = free_resolution(l, true);
  int pd = static_cast<int>(fc.length());
  return {pd, static_cast<int>(l.ring()->nvars()) - pd};
}

/// Checks phi_j phi_{j+1} = 0; throws NotAComplex otherwise.
template <class K>
void require_complex(const std::vector<Matrix<K>>& maps) {
  for (std::size_t j = 0; j + 1 < maps.size(); ++j) {
    if (maps[j].cols() != maps[j + 1].rows()) fail(ErrorCode::ArityMismatch, "incompatible ranks in complex");
    if (!(maps[j] * maps[j + 1]).is_zero())
      fail(ErrorCode::NotAComplex, "phi_" + std::to_string(j + 1) + " * phi_" + std::to_string(j + 2) + " != 0");
  }
}

struct ExactnessReport {
  bool exact = false;
  std::vector<int> ranks;   // rank phi_j
  std::vector<int> grades;  // grade I(phi_j); -1 stands for the unit ideal
};

template <class K>
ExactnessReport be_exactness_report(const std::vector<Matrix<K>>& maps) {
  require_complex(maps);
  ExactnessReport rep;
  rep.exact = true;
  for (const auto& phi : maps) {
    auto [r, ideal] = matrix_rank_and_minor_ideal(phi);
    rep.ranks.push_back(r);
    rep.grades.push_back(0);
    if (ideal.is_unit()) rep.grades.back() = -1;
    else if (!ideal.is_zero()) rep.grades.back() = grade_on_ring(ideal).value;
  }
  for (std::size_t j = 1; j <= maps.size(); ++j) {
    int next = j < maps.size() ? rep.ranks[j] : 0;
    if (rep.ranks[j - 1] + next != static_cast<int>(maps[j - 1].cols())) rep.exact = false;
    int g = rep.grades[j - 1];
    if (g != -1 && g < static_cast<int>(j)) rep.exact = false;
  }
  return rep;
}

template <class K>
bool be_exactness(const FreeComplex<K>& fc) {
  return be_exactness_report(fc.maps).exact;
}

// -- Cohen-Macaulay type predicates -----------------------------------------------

struct CMReport {
  int dim = 0;
  int depth = 0;
  int projdim = 0;
  bool cm = false;
  bool generalized_cm = false;
  std::vector<long> ext_colengths;  // -1 when infinite
};

template <class K>
CMReport classify_cm(const PresentedModule<K>& l) {
  auto [pd, depth] = projdim_and_depth(l);
  CMReport rep;
  rep.projdim = pd;
  rep.depth = depth;
  rep.dim = module_dimension(l);
  rep.cm = depth == rep.dim;
  rep.generalized_cm = true;
  const int n = static_cast<int>(l.ring()->nvars());
  if (rep.dim > 0) {
    auto exts = ext_modules(l, PresentedModule<K>::free(l.ring(), 1), n);
    for (int i = 0; i < rep.dim; ++i) {
      const auto& e = exts[static_cast<std::size_t>(n - i)];
      rep.ext_colengths.push_back(e.colength ? *e.colength : -1);
      if (!e.finite_length) rep.generalized_cm = false;
    }
  }
  return rep;
}

template <class K>
bool gorenstein_check(const Ideal<K>& a) {
  if (!a.is_homogeneous()) fail(ErrorCode::NotHomogeneous, "Gorenstein check needs a homogeneous ideal");
  if (a.is_unit()) fail(ErrorCode::UnitIdeal, "Gorenstein check of the zero ring");
  auto quotient = PresentedModule<K>::cyclic(a);
  int r = grade_on_ring(a).value;
  if (!classify_cm(quotient).cm) return false;
  auto e = ext_module(quotient, PresentedModule<K>::free(a.ring(), 1), r);
  if (e.module.rank0() != 1) return false;
  return annihilator(e.module) == a;
}

template <class K>
bool standard_sop_check(const PresentedModule<K>& l, const std::vector<Poly<K>>& a) {
  if (!l.is_homogeneous()) fail(ErrorCode::NotHomogeneous, "standardness needs a homogeneous module");
  for (const auto& f : a)
    if (!f.is_homogeneous() || f.is_zero()) fail(ErrorCode::NotHomogeneous, "sop elements must be homogeneous");
  const int d = module_dimension(l);
  if (static_cast<int>(a.size()) != d || module_dimension(quotient_by_ideal(l, a)) > 0)
    fail(ErrorCode::NotASOP, "the given elements are not a system of parameters");
  const RingPtr& ring = l.ring();
  const int n = static_cast<int>(ring->nvars());
  Ideal<K> full(ring, a);
  auto r1 = PresentedModule<K>::free(ring, 1);
  for (int j = 0; j < d; ++j) {
    std::vector<Poly<K>> first(a.begin(), a.begin() + j);
    auto lj = quotient_by_ideal(l, first);
    auto exts = ext_modules(lj, r1, n);
    for (int i = 0; i + j < d; ++i) {
      const auto& e = exts[static_cast<std::size_t>(n - i)];
      if (is_zero_module(e.module)) continue;
      if (!annihilator(e.module).contains(full)) return false;
    }
  }
  return true;
}

}  // namespace specz
