#ifndef NCC_EXACTLA_HPP
#define NCC_EXACTLA_HPP

// Dense exact linear algebra over a Field: matrices, reduced row-echelon form,
// subspaces with RREF as canonical representative, kernels, images, quotients and
// homology dimensions.

#include <algorithm>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ncc/errors.hpp"
#include "ncc/field.hpp"

namespace ncc {

template <Field K>
using Vec = std::vector<typename K::element>;

template <Field K>
class Matrix {
 public:
  using element = typename K::element;

  Matrix(K field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const K& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Row-major integer literal; every row must have `cols` entries.
  static Matrix from_rows(const K& field, std::size_t cols,
                          const std::vector<std::vector<long long>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("from_rows: ragged row " + std::to_string(i));
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }
  static Matrix from_rows(const K& field, const std::vector<std::vector<long long>>& rows) {
    return from_rows(field, rows.empty() ? 0 : rows.front().size(), rows);
  }

  /// Rows given as field vectors.
  static Matrix from_vectors(const K& field, std::size_t cols, const std::vector<Vec<K>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("from_vectors: ragged row " + std::to_string(i));
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  /// Single column.
  static Matrix column(const K& field, std::span<const element> v) {
    Matrix m(field, v.size(), 1);
    std::copy(v.begin(), v.end(), m.data_.begin());
    return m;
  }

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vec<K> column_vector(std::size_t c) const {
    Vec<K> v(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const element& x) { return field_.is_zero(x); });
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix scaled(const element& s) const {
    Matrix out(*this);
    for (auto& x : out.data_) x = field_.mul(x, s);
    return out;
  }

  /// this * v
  Vec<K> apply(std::span<const element> v) const {
    if (v.size() != cols_) throw DimensionMismatch("apply: vector length " + std::to_string(v.size()) +
                                                   " vs " + std::to_string(cols_) + " columns");
    Vec<K> out(rows_, field_.zero());
    for (std::size_t c = 0; c < cols_; ++c) {
      if (field_.is_zero(v[c])) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const element& a = (*this)(r, c);
        if (!field_.is_zero(a)) field_.fma(out[r], a, v[c]);
      }
    }
    return out;
  }

  /// Copy `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
    check_field(block);
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) throw DimensionMismatch("set_block out of range");
    for (std::size_t r = 0; r < block.rows_; ++r)
      for (std::size_t c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) = block(r, c);
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    Matrix out(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
  }

  static Matrix vstack(const Matrix& top, const Matrix& bottom) {
    top.check_field(bottom);
    if (top.cols_ != bottom.cols_) throw DimensionMismatch("vstack: column counts differ");
    Matrix out(top.field_, top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(), out.data_.begin() + top.data_.size());
    return out;
  }

  /// Kronecker product a (x) b.
  static Matrix kron(const Matrix& a, const Matrix& b) {
    a.check_field(b);
    const K& k = a.field_;
    Matrix out(k, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        const element& x = a(i, j);
        if (k.is_zero(x)) continue;
        for (std::size_t p = 0; p < b.rows_; ++p)
          for (std::size_t q = 0; q < b.cols_; ++q) out(i * b.rows_ + p, j * b.cols_ + q) = k.mul(x, b(p, q));
      }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_field(b);
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("product of " + a.shape() + " and " + b.shape());
    const K& k = a.field_;
    Matrix out(k, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const element& x = a(i, l);
        if (k.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const element& y = b(l, j);
          if (!k.is_zero(y)) k.fma(out(i, j), x, y);
        }
      }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) { return combine(a, b, false); }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return combine(a, b, true); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    return true;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << field_.to_string((*this)(r, c));
      os << "]";
    }
    os << "]";
    return os.str();
  }

  void check_field(const Matrix& other) const {
    if (!(field_ == other.field_)) throw FieldMismatch(field_.name(), other.field_.name());
  }

 private:
  static Matrix combine(const Matrix& a, const Matrix& b, bool subtract) {
    a.check_field(b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionMismatch("sum of " + a.shape() + " and " + b.shape());
    Matrix out(a);
    for (std::size_t i = 0; i < out.data_.size(); ++i)
      out.data_[i] = subtract ? a.field_.sub(out.data_[i], b.data_[i]) : a.field_.add(out.data_[i], b.data_[i]);
    return out;
  }

  K field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<element> data_;
};

template <Field K>
struct Rref {
  Matrix<K> reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Pivot rows are the first `rank` rows of `reduced`.
template <Field K>
Rref<K> rref(Matrix<K> m) {
  const K& k = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && k.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != lead) std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(lead).begin());
    auto pivot_row = m.row(lead);
    const auto inv = k.inv(pivot_row[c]);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!k.is_zero(pivot_row[j])) pivot_row[j] = k.mul(pivot_row[j], inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || k.is_zero(m(r, c))) continue;
      const auto factor = k.neg(m(r, c));
      auto target = m.row(r);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!k.is_zero(pivot_row[j])) k.fma(target[j], factor, pivot_row[j]);
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), pivots.size(), std::move(pivots)};
}

template <Field K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).rank;
}

/// A linear subspace of k^n, stored by the RREF of a basis.
template <Field K>
class Subspace {
 public:
  using element = typename K::element;

  /// Span of the rows of `generators`.
  static Subspace span(const Matrix<K>& generators) {
    auto r = rref(generators);
    return Subspace(r.reduced.block(0, 0, r.rank, generators.cols()), std::move(r.pivots));
  }
  static Subspace span(const K& field, std::size_t ambient, const std::vector<Vec<K>>& vectors) {
    return span(Matrix<K>::from_vectors(field, ambient, vectors));
  }
  static Subspace zero(const K& field, std::size_t ambient) {
    return Subspace(Matrix<K>(field, 0, ambient), {});
  }
  static Subspace full(const K& field, std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(Matrix<K>::identity(field, ambient), std::move(piv));
  }

  const K& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<K>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Vec<K> basis_vector(std::size_t i) const { return Vec<K>(basis_.row(i).begin(), basis_.row(i).end()); }

  /// Non-pivot columns in increasing order; these index the complement coordinates.
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < ambient_dim(); ++c) {
      if (p < pivots_.size() && pivots_[p] == c) {
        ++p;
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

  /// Reduce v against the basis: zero out pivot coordinates.
  Vec<K> reduce(std::span<const element> v) const {
    if (v.size() != ambient_dim()) throw DimensionMismatch("reduce: wrong vector length");
    const K& k = field();
    Vec<K> out(v.begin(), v.end());
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const auto coef = out[pivots_[r]];
      if (k.is_zero(coef)) continue;
      const auto neg = k.neg(coef);
      auto brow = basis_.row(r);
      for (std::size_t j = pivots_[r]; j < ambient_dim(); ++j)
        if (!k.is_zero(brow[j])) k.fma(out[j], neg, brow[j]);
    }
    return out;
  }

  bool contains(std::span<const element> v) const {
    auto red = reduce(v);
    return std::all_of(red.begin(), red.end(), [&](const element& x) { return field().is_zero(x); });
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("contains: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Matrix<K> basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}, a subspace of k^cols.
template <Field K>
Subspace<K> kernel_basis(const Matrix<K>& m) {
  const K& k = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec<K>> vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<K> v(m.cols(), k.zero());
    v[f] = k.one();
    for (std::size_t row = 0; row < r.rank; ++row) v[r.pivots[row]] = k.neg(r.reduced(row, f));
    vectors.push_back(std::move(v));
  }
  return Subspace<K>::span(k, m.cols(), vectors);
}

/// Column space of m, a subspace of k^rows.
template <Field K>
Subspace<K> image_basis(const Matrix<K>& m) {
  return Subspace<K>::span(m.transpose());
}

template <Field K>
Subspace<K> subspace_sum(const Subspace<K>& u, const Subspace<K>& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspace_sum: ambient mismatch");
  return Subspace<K>::span(Matrix<K>::vstack(u.basis(), v.basis()));
}

/// Intersection as the common kernel of both annihilators.
template <Field K>
Subspace<K> subspace_intersect(const Subspace<K>& u, const Subspace<K>& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspace_intersect: ambient mismatch");
  auto ann_u = kernel_basis(u.basis()).basis();
  auto ann_v = kernel_basis(v.basis()).basis();
  return kernel_basis(Matrix<K>::vstack(ann_u, ann_v));
}

/// Coordinates on k^n / w. The complement coordinates are the free (non-pivot)
/// columns of w's RREF; `projection` has kernel exactly w and `section` is the
/// coordinate inclusion of those columns, so projection * section = identity.
template <Field K>
struct Quotient {
  Matrix<K> projection;
  Matrix<K> section;
  std::vector<std::size_t> complement;
};

template <Field K>
Quotient<K> quotient_data(std::size_t ambient_dim, const Subspace<K>& w) {
  if (w.ambient_dim() != ambient_dim) throw DimensionMismatch("quotient_map: ambient mismatch");
  const K& k = w.field();
  auto free = w.free_columns();
  std::vector<std::size_t> slot(ambient_dim, ambient_dim);
  for (std::size_t c = 0; c < free.size(); ++c) slot[free[c]] = c;
  Matrix<K> q(k, free.size(), ambient_dim);
  Matrix<K> s(k, ambient_dim, free.size());
  for (std::size_t c = 0; c < free.size(); ++c) {
    q(c, free[c]) = k.one();
    s(free[c], c) = k.one();
  }
  for (std::size_t r = 0; r < w.dim(); ++r) {
    auto brow = w.basis().row(r);
    for (std::size_t c = 0; c < free.size(); ++c)
      if (!k.is_zero(brow[free[c]])) q(c, w.pivots()[r]) = k.neg(brow[free[c]]);
  }
  return {std::move(q), std::move(s), std::move(free)};
}

template <Field K>
Matrix<K> quotient_map(std::size_t ambient_dim, const Subspace<K>& w) {
  return quotient_data(ambient_dim, w).projection;
}

/// dim ker(d_out) - rank(d_in), after checking d_out * d_in = 0.
template <Field K>
std::size_t homology_dim(const Matrix<K>& d_in, const Matrix<K>& d_out, std::size_t degree = 0) {
  if (d_in.rows() != d_out.cols())
    throw DimensionMismatch("homology_dim: d_in has " + std::to_string(d_in.rows()) + " rows, d_out has " +
                            std::to_string(d_out.cols()) + " columns");
  if (!(d_out * d_in).is_zero()) throw NotAComplex(degree);
  return d_out.cols() - rank(d_out) - rank(d_in);
}

}  // namespace ncc

#endif  // NCC_EXACTLA_HPP
