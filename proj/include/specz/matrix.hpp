#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specz/ideal.hpp"

namespace specz {

/// Dense matrix of polynomials over one ring. Columns are the images of
/// the source basis, so a matrix with r rows and c columns is a map
/// R^c -> R^r.
template <class K>
class Matrix {
 public:
  using P = Poly<K>;

  Matrix() = default;
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, P(ring_)) {}

  static Matrix identity(RingPtr ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = P::constant(ring, K(1));
    return m;
  }

  static Matrix from_rows(RingPtr ring, const std::vector<std::vector<P>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(ring, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) fail(ErrorCode::ArityMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) {
        require_same_ring(ring, rows[i][j].ring());
        m.at(i, j) = rows[i][j];
      }
    }
    return m;
  }

  static Matrix from_columns(RingPtr ring, std::size_t rows, const std::vector<std::vector<P>>& cols) {
    Matrix m(ring, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    return m;
  }

  /// 1 x k matrix of the generators.
  static Matrix row(RingPtr ring, const std::vector<P>& entries) {
    Matrix m(ring, 1, entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j) m.at(0, j) = entries[j];
    return m;
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  P& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const P& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<P> column(std::size_t j) const {
    std::vector<P> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
  }

  bool is_zero() const {
    for (const auto& p : data_)
      if (!p.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.cols_ != b.rows_) fail(ErrorCode::ArityMismatch, "matrix product dimension mismatch");
    Matrix c(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const P& x = a.at(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b.at(k, j).is_zero()) c.at(i, j) += x * b.at(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::ArityMismatch, "matrix sum dimension mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// [A | B].
  friend Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) fail(ErrorCode::ArityMismatch, "hcat row mismatch");
    Matrix c(a.ring_ ? a.ring_ : b.ring_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, a.cols_ + j) = b.at(i, j);
    }
    return c;
  }

  Matrix select_rows(std::size_t first, std::size_t count) const {
    Matrix m(ring_, count, cols_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(first + i, j);
    return m;
  }

  Matrix select_columns(const std::vector<std::size_t>& idx) const {
    Matrix m(ring_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m.at(i, j) = at(i, idx[j]);
    return m;
  }

  Matrix drop_zero_columns() const {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < cols_; ++j) {
      bool nz = false;
      for (std::size_t i = 0; i < rows_ && !nz; ++i) nz = !at(i, j).is_zero();
      if (nz) keep.push_back(j);
    }
    return select_columns(keep);
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).str();
      s += "]";
    }
    return s + "]";
  }

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<P> data_;
};

using QMatrix = Matrix<Rational>;
using FMatrix = Matrix<RatFunc>;

/// phi (x) I_g: block (p', p) = phi[p'][p] * I_g.
template <class K>
Matrix<K> kron_identity(const Matrix<K>& phi, std::size_t g) {
  Matrix<K> m(phi.ring(), phi.rows() * g, phi.cols() * g);
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j)
      if (!phi.at(i, j).is_zero())
        for (std::size_t q = 0; q < g; ++q) m.at(i * g + q, j * g + q) = phi.at(i, j);
  return m;
}

/// I_count (x) psi (block diagonal).
template <class K>
Matrix<K> block_diagonal(const Matrix<K>& psi, std::size_t count) {
  Matrix<K> m(psi.ring(), psi.rows() * count, psi.cols() * count);
  for (std::size_t b = 0; b < count; ++b)
    for (std::size_t i = 0; i < psi.rows(); ++i)
      for (std::size_t j = 0; j < psi.cols(); ++j) m.at(b * psi.rows() + i, b * psi.cols() + j) = psi.at(i, j);
  return m;
}

/// Row and column degrees making every nonzero entry (i, j) homogeneous of
/// degree col[j] - row[i].
struct Grading {
  std::vector<int> row;
  std::vector<int> col;
};

/// Finds a grading (fixing `row_hint` when given), or nullopt when the
/// matrix is not homogeneous for any choice of degrees.
template <class K>
std::optional<Grading> infer_grading(const Matrix<K>& a, const std::vector<int>* row_hint = nullptr) {
  const std::size_t r = a.rows(), c = a.cols();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!a.at(i, j).is_homogeneous()) return std::nullopt;
  std::vector<std::optional<int>> rd(r), cd(c);
  if (row_hint) {
    if (row_hint->size() != r) fail(ErrorCode::ArityMismatch, "row degree count mismatch");
    for (std::size_t i = 0; i < r; ++i) rd[i] = (*row_hint)[i];
  }
  // propagate along the bipartite graph of nonzero entries
  auto seed_and_walk = [&](std::size_t start_row) -> bool {
    std::vector<std::pair<bool, std::size_t>> stack{{true, start_row}};
    while (!stack.empty()) {
      auto [is_row, k] = stack.back();
      stack.pop_back();
      if (is_row) {
        for (std::size_t j = 0; j < c; ++j) {
          const auto& e = a.at(k, j);
          if (e.is_zero()) continue;
          int want = *rd[k] + e.degree();
          if (cd[j] && *cd[j] != want) return false;
          if (!cd[j]) {
            cd[j] = want;
            stack.push_back({false, j});
          }
        }
      } else {
        for (std::size_t i = 0; i < r; ++i) {
          const auto& e = a.at(i, k);
          if (e.is_zero()) continue;
          int want = *cd[k] - e.degree();
          if (rd[i] && *rd[i] != want) return false;
          if (!rd[i]) {
            rd[i] = want;
            stack.push_back({true, i});
          }
        }
      }
    }
    return true;
  };
  for (std::size_t i = 0; i < r; ++i)
    if (rd[i] && !seed_and_walk(i)) return std::nullopt;
  for (std::size_t i = 0; i < r; ++i)
    if (!rd[i]) {
      rd[i] = 0;
      if (!seed_and_walk(i)) return std::nullopt;
    }
  Grading g;
  for (auto& x : rd) g.row.push_back(*x);
  for (auto& x : cd) g.col.push_back(x.value_or(0));
  return g;
}

// -- conversion to the Groebner engine's module vectors -------------------

template <class K>
Terms<K> to_vector(const std::vector<Poly<K>>& entries, const TermOrder& ord, int offset = 0) {
  Terms<K> t;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (const auto& term : entries[i].terms()) {
      Monomial m = term.m;
      m.comp = static_cast<int32_t>(i) + offset;
      t.push_back({m, term.c});
    }
  return terms_normalize(std::move(t), ord);
}

template <class K>
std::vector<Poly<K>> from_vector(const Terms<K>& v, const RingPtr& ring, std::size_t rank, int offset = 0) {
  std::vector<Terms<K>> parts(rank);
  for (const auto& term : v) {
    int c = term.m.comp - offset;
    if (c < 0 || static_cast<std::size_t>(c) >= rank) continue;
    Monomial m = term.m;
    m.comp = 0;
    parts[static_cast<std::size_t>(c)].push_back({m, term.c});
  }
  std::vector<Poly<K>> out;
  out.reserve(rank);
  for (auto& p : parts) out.emplace_back(ring, std::move(p));
  return out;
}

/// Term order for a free module over `ring` (TOP unless `pot`).
inline TermOrder module_order(const RingPtr& ring, bool pot, std::vector<int> shift = {}) {
  return TermOrder{ring->order(), pot, std::move(shift)};
}

/// Reduced Groebner basis of the column span of `a`, TOP order.
template <class K>
std::vector<Terms<K>> column_basis(const Matrix<K>& a, const TermOrder& ord) {
  std::vector<Terms<K>> gens;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    auto v = to_vector(a.column(j), ord);
    if (!v.empty()) gens.push_back(std::move(v));
  }
  return groebner_basis(gens, ord);
}

/// Whether the column vector lies in the column span of `a`.
template <class K>
bool in_column_span(const std::vector<Poly<K>>& v, const Matrix<K>& a) {
  TermOrder ord = module_order(a.ring(), false);
  auto gb = column_basis(a, ord);
  return reduce(to_vector(v, ord), gb, ord).empty();
}

}  // namespace specz
