#ifndef NCC_ALGEBRA_HPP
#define NCC_ALGEBRA_HPP

// Finite-dimensional unital associative algebras given by structure constants,
// together with two-sided ideals, quotients and algebra homomorphisms.
//
// Algebras are immutable and shared through AlgebraPtr; ideals and homomorphisms
// refer to their algebras by pointer. Two algebras are "the same" when they are
// the same object or structurally equal (field, table, unit).

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncc/exactla.hpp"

namespace ncc {

template <Field K>
class Algebra;

template <Field K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

/// b_i * b_j contains coeff * b_k.
template <Field K>
struct StructureConstant {
  std::size_t i, j, k;
  typename K::element coeff;
};

template <Field K>
class Algebra {
 public:
  using element = typename K::element;

  /// Validating factory. `table[i * dim + j]` is the coordinate vector of b_i b_j.
  static AlgebraPtr<K> make(K field, std::size_t dim, std::vector<Vec<K>> table, Vec<K> unit,
                            std::vector<std::string> labels = {}) {
    if (table.size() != dim * dim)
      throw DimensionMismatch("structure table has " + std::to_string(table.size()) + " products, expected " +
                              std::to_string(dim * dim));
    for (std::size_t n = 0; n < table.size(); ++n)
      if (table[n].size() != dim)
        throw DimensionMismatch("product b" + std::to_string(n / dim) + "*b" + std::to_string(n % dim) +
                                " has wrong length");
    if (unit.size() != dim) throw DimensionMismatch("unit vector has wrong length");
    if (!labels.empty() && labels.size() != dim) throw DimensionMismatch("label count differs from dim");
    auto a = std::shared_ptr<Algebra>(new Algebra(std::move(field), dim, std::move(table), std::move(unit),
                                                  std::move(labels)));
    a->validate();
    return a;
  }

  static AlgebraPtr<K> make(const K& field, std::size_t dim, const std::vector<StructureConstant<K>>& triples,
                            Vec<K> unit, std::vector<std::string> labels = {}) {
    std::vector<Vec<K>> table(dim * dim, Vec<K>(dim, field.zero()));
    for (const auto& t : triples) {
      if (t.i >= dim || t.j >= dim || t.k >= dim)
        throw DimensionMismatch("structure constant index out of range: [" + std::to_string(t.i) + ", " +
                                std::to_string(t.j) + ", " + std::to_string(t.k) + "]");
      auto& slot = table[t.i * dim + t.j][t.k];
      slot = field.add(slot, t.coeff);
    }
    return make(field, dim, std::move(table), std::move(unit), std::move(labels));
  }

  /// The zero algebra: dim 0, where 1 = 0.
  static AlgebraPtr<K> zero(const K& field) { return make(field, 0, std::vector<Vec<K>>{}, Vec<K>{}); }

  const K& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vec<K>& unit() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const { return labels_.empty() ? "b" + std::to_string(i) : labels_[i]; }

  const Vec<K>& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  Vec<K> basis_vector(std::size_t i) const {
    Vec<K> v(dim_, field_.zero());
    v[i] = field_.one();
    return v;
  }

  Vec<K> zero_vector() const { return Vec<K>(dim_, field_.zero()); }

  Vec<K> multiply(std::span<const element> x, std::span<const element> y) const {
    check_length(x);
    check_length(y);
    Vec<K> out(dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (field_.is_zero(y[j])) continue;
        auto xy = field_.mul(x[i], y[j]);
        const auto& p = basis_product(i, j);
        for (std::size_t k = 0; k < dim_; ++k)
          if (!field_.is_zero(p[k])) field_.fma(out[k], xy, p[k]);
      }
    }
    return out;
  }

  /// Matrix of y -> x y.
  Matrix<K> left_multiplication(std::span<const element> x) const {
    check_length(x);
    Matrix<K> m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        const auto& p = basis_product(i, j);
        for (std::size_t k = 0; k < dim_; ++k)
          if (!field_.is_zero(p[k])) field_.fma(m(k, j), x[i], p[k]);
      }
    }
    return m;
  }

  /// Matrix of y -> y x.
  Matrix<K> right_multiplication(std::span<const element> x) const {
    check_length(x);
    Matrix<K> m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (field_.is_zero(x[j])) continue;
      for (std::size_t i = 0; i < dim_; ++i) {
        const auto& p = basis_product(i, j);
        for (std::size_t k = 0; k < dim_; ++k)
          if (!field_.is_zero(p[k])) field_.fma(m(k, i), x[j], p[k]);
      }
    }
    return m;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    if (!(a.field_ == b.field_) || a.dim_ != b.dim_) return false;
    auto eq = [&](const Vec<K>& u, const Vec<K>& v) {
      for (std::size_t i = 0; i < u.size(); ++i)
        if (!a.field_.equal(u[i], v[i])) return false;
      return true;
    };
    if (!eq(a.unit_, b.unit_)) return false;
    for (std::size_t n = 0; n < a.table_.size(); ++n)
      if (!eq(a.table_[n], b.table_[n])) return false;
    return true;
  }

 private:
  Algebra(K field, std::size_t dim, std::vector<Vec<K>> table, Vec<K> unit, std::vector<std::string> labels)
      : field_(std::move(field)),
        dim_(dim),
        table_(std::move(table)),
        unit_(std::move(unit)),
        labels_(std::move(labels)) {}

  void check_length(std::span<const element> x) const {
    if (x.size() != dim_) throw DimensionMismatch("element has length " + std::to_string(x.size()) +
                                                  ", algebra has dim " + std::to_string(dim_));
  }

  void validate() const {
    auto same = [&](const Vec<K>& u, const Vec<K>& v) {
      for (std::size_t k = 0; k < dim_; ++k)
        if (!field_.equal(u[k], v[k])) return false;
      return true;
    };
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) {
          auto lhs = multiply(basis_product(i, j), basis_vector(k));
          auto rhs = multiply(basis_vector(i), basis_product(j, k));
          if (!same(lhs, rhs))
            throw AxiomViolation("associativity", "(" + label(i) + "*" + label(j) + ")*" + label(k) + " != " +
                                                      label(i) + "*(" + label(j) + "*" + label(k) + ") for basis indices (" +
                                                      std::to_string(i) + ", " + std::to_string(j) + ", " +
                                                      std::to_string(k) + ")");
        }
    for (std::size_t i = 0; i < dim_; ++i) {
      auto bi = basis_vector(i);
      if (!same(multiply(unit_, bi), bi))
        throw AxiomViolation("left unit law", "1*" + label(i) + " != " + label(i) + " (basis index " +
                                                  std::to_string(i) + ")");
      if (!same(multiply(bi, unit_), bi))
        throw AxiomViolation("right unit law", label(i) + "*1 != " + label(i) + " (basis index " +
                                                   std::to_string(i) + ")");
    }
  }

  K field_;
  std::size_t dim_;
  std::vector<Vec<K>> table_;
  Vec<K> unit_;
  std::vector<std::string> labels_;
};

template <Field K>
AlgebraPtr<K> make_algebra(const K& field, std::size_t dim, const std::vector<StructureConstant<K>>& triples,
                           Vec<K> unit, std::vector<std::string> labels = {}) {
  return Algebra<K>::make(field, dim, triples, std::move(unit), std::move(labels));
}

template <Field K>
bool same_algebra(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b) {
  return a == b || (a && b && *a == *b);
}

/// Two-sided ideal of an algebra, validated on construction.
template <Field K>
class Ideal {
 public:
  Ideal(AlgebraPtr<K> algebra, Subspace<K> space) : algebra_(std::move(algebra)), space_(std::move(space)) {
    if (space_.ambient_dim() != algebra_->dim()) throw DimensionMismatch("ideal ambient differs from algebra dim");
    for (std::size_t r = 0; r < space_.dim(); ++r) {
      auto v = space_.basis_vector(r);
      for (std::size_t i = 0; i < algebra_->dim(); ++i) {
        auto bi = algebra_->basis_vector(i);
        if (!space_.contains(algebra_->multiply(bi, v)))
          throw AxiomViolation("ideal closure", "left product by " + algebra_->label(i) + " leaves the subspace");
        if (!space_.contains(algebra_->multiply(v, bi)))
          throw AxiomViolation("ideal closure", "right product by " + algebra_->label(i) + " leaves the subspace");
      }
    }
  }

  static Ideal zero(const AlgebraPtr<K>& a) { return Ideal(a, Subspace<K>::zero(a->field(), a->dim())); }
  static Ideal whole(const AlgebraPtr<K>& a) { return Ideal(a, Subspace<K>::full(a->field(), a->dim())); }

  const AlgebraPtr<K>& algebra() const { return algebra_; }
  const Subspace<K>& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return same_algebra(a.algebra_, b.algebra_) && a.space_ == b.space_;
  }

 private:
  AlgebraPtr<K> algebra_;
  Subspace<K> space_;
};

/// Smallest two-sided ideal containing `generators`.
template <Field K>
Ideal<K> ideal_closure(const AlgebraPtr<K>& a, const std::vector<Vec<K>>& generators) {
  auto span = Subspace<K>::span(a->field(), a->dim(), generators);
  for (;;) {
    std::vector<Vec<K>> grown;
    for (std::size_t r = 0; r < span.dim(); ++r) {
      auto v = span.basis_vector(r);
      grown.push_back(v);
      for (std::size_t i = 0; i < a->dim(); ++i) {
        auto bi = a->basis_vector(i);
        grown.push_back(a->multiply(bi, v));
        grown.push_back(a->multiply(v, bi));
      }
    }
    auto next = Subspace<K>::span(a->field(), a->dim(), grown);
    if (next.dim() == span.dim()) break;
    span = std::move(next);
  }
  return Ideal<K>(a, std::move(span));
}

template <Field K>
Ideal<K> ideal_sum(const Ideal<K>& i1, const Ideal<K>& i2) {
  if (!same_algebra(i1.algebra(), i2.algebra())) throw DimensionMismatch("ideal_sum: ideals of different algebras");
  return Ideal<K>(i1.algebra(), subspace_sum(i1.space(), i2.space()));
}

template <Field K>
Subspace<K> ideal_intersection(const std::vector<Ideal<K>>& ideals) {
  if (ideals.empty()) throw DimensionMismatch("ideal_intersection of an empty list");
  auto acc = ideals.front().space();
  for (std::size_t n = 1; n < ideals.size(); ++n) {
    if (!same_algebra(ideals.front().algebra(), ideals[n].algebra()))
      throw DimensionMismatch("ideal_intersection: ideals of different algebras");
    acc = subspace_intersect(acc, ideals[n].space());
  }
  return acc;
}

/// Outcome of checking that a linear map is a unital algebra homomorphism.
struct HomReport {
  bool ok = true;
  std::string axiom;    // "unit" or "multiplicativity" when !ok
  std::string witness;  // basis pair or description
};

template <Field K>
HomReport check_hom(const Algebra<K>& domain, const Algebra<K>& codomain, const Matrix<K>& m) {
  if (m.rows() != codomain.dim() || m.cols() != domain.dim())
    throw DimensionMismatch("homomorphism matrix is " + m.shape() + ", expected " + std::to_string(codomain.dim()) +
                            "x" + std::to_string(domain.dim()));
  // Elements of both fields are kept canonical, so vector == is field equality.
  if (!(m.apply(domain.unit()) == codomain.unit())) return {false, "unit", "f(1) != 1"};
  for (std::size_t i = 0; i < domain.dim(); ++i) {
    auto fi = m.column_vector(i);
    for (std::size_t j = 0; j < domain.dim(); ++j) {
      auto lhs = m.apply(domain.basis_product(i, j));
      auto rhs = codomain.multiply(fi, m.column_vector(j));
      if (!(lhs == rhs))
        return {false, "multiplicativity",
                "f(" + domain.label(i) + "*" + domain.label(j) + ") != f(" + domain.label(i) + ")*f(" +
                    domain.label(j) + ") for basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")"};
    }
  }
  return {};
}

template <Field K>
class AlgebraHom {
 public:
  /// Validates multiplicativity and unitality; throws AxiomViolation with a witness.
  static AlgebraHom make(AlgebraPtr<K> domain, AlgebraPtr<K> codomain, Matrix<K> matrix) {
    auto report = check_hom(*domain, *codomain, matrix);
    if (!report.ok) throw AxiomViolation("homomorphism " + report.axiom, report.witness);
    return AlgebraHom(std::move(domain), std::move(codomain), std::move(matrix));
  }

  /// For maps that hold by construction (canonical projections, composites of
  /// checked homomorphisms). Callers re-check where the spec requires it.
  static AlgebraHom trusted(AlgebraPtr<K> domain, AlgebraPtr<K> codomain, Matrix<K> matrix) {
    return AlgebraHom(std::move(domain), std::move(codomain), std::move(matrix));
  }

  static AlgebraHom identity(const AlgebraPtr<K>& a) {
    return AlgebraHom(a, a, Matrix<K>::identity(a->field(), a->dim()));
  }

  const AlgebraPtr<K>& domain() const { return domain_; }
  const AlgebraPtr<K>& codomain() const { return codomain_; }
  const Matrix<K>& matrix() const { return matrix_; }

  Vec<K> operator()(std::span<const typename K::element> x) const { return matrix_.apply(x); }

 private:
  AlgebraHom(AlgebraPtr<K> domain, AlgebraPtr<K> codomain, Matrix<K> matrix)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {}

  AlgebraPtr<K> domain_;
  AlgebraPtr<K> codomain_;
  Matrix<K> matrix_;
};

template <Field K>
HomReport hom_check(const AlgebraHom<K>& f) {
  return check_hom(*f.domain(), *f.codomain(), f.matrix());
}

/// f o g, re-verified.
template <Field K>
AlgebraHom<K> hom_compose(const AlgebraHom<K>& f, const AlgebraHom<K>& g) {
  if (!same_algebra(g.codomain(), f.domain()))
    throw DimensionMismatch("hom_compose: codomain of the inner map is not the domain of the outer map");
  return AlgebraHom<K>::make(g.domain(), f.codomain(), f.matrix() * g.matrix());
}

template <Field K>
struct QuotientAlgebra {
  AlgebraPtr<K> algebra;
  AlgebraHom<K> projection;
  Matrix<K> section;  // coordinate lift A/J -> A, projection * section = id
};

/// A/J on the complement coordinates of J's RREF.
template <Field K>
QuotientAlgebra<K> quotient(const AlgebraPtr<K>& a, const Ideal<K>& j) {
  if (!same_algebra(a, j.algebra())) throw DimensionMismatch("quotient: ideal of a different algebra");
  const K& k = a->field();
  auto qd = quotient_data(a->dim(), j.space());
  const std::size_t n = qd.complement.size();
  std::vector<Vec<K>> table;
  table.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table.push_back(qd.projection.apply(a->basis_product(qd.complement[x], qd.complement[y])));
  std::vector<std::string> labels;
  if (!a->labels().empty())
    for (auto c : qd.complement) labels.push_back(a->labels()[c]);
  auto q = Algebra<K>::make(k, n, std::move(table), qd.projection.apply(a->unit()), std::move(labels));
  auto proj = AlgebraHom<K>::make(a, q, qd.projection);
  return {q, std::move(proj), std::move(qd.section)};
}

/// Direct product A_1 x ... x A_n with block coordinates (unit = (1, ..., 1)).
template <Field K>
AlgebraPtr<K> direct_sum(const K& field, const std::vector<AlgebraPtr<K>>& parts) {
  std::size_t dim = 0;
  for (const auto& p : parts) dim += p->dim();
  std::vector<Vec<K>> table(dim * dim, Vec<K>(dim, field.zero()));
  Vec<K> unit(dim, field.zero());
  std::vector<std::string> labels;
  std::size_t off = 0;
  for (std::size_t n = 0; n < parts.size(); ++n) {
    const auto& p = *parts[n];
    if (!(p.field() == field)) throw FieldMismatch(field.name(), p.field().name());
    for (std::size_t i = 0; i < p.dim(); ++i) {
      unit[off + i] = p.unit()[i];
      labels.push_back(p.label(i) + "@" + std::to_string(n + 1));
      for (std::size_t j = 0; j < p.dim(); ++j)
        for (std::size_t k = 0; k < p.dim(); ++k) table[(off + i) * dim + off + j][off + k] = p.basis_product(i, j)[k];
    }
    off += p.dim();
  }
  return Algebra<K>::make(field, dim, std::move(table), std::move(unit), std::move(labels));
}

}  // namespace ncc

#endif  // NCC_ALGEBRA_HPP
