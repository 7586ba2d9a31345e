#ifndef NCC_CATALOG_HPP
#define NCC_CATALOG_HPP

// Small named algebras and coverings used by tests, the acceptance suite and the
// sample problem files.

#include <string>
#include <vector>

#include "ncc/covering.hpp"

namespace ncc::catalog {

/// k^n with orthogonal idempotents e_i e_j = delta_ij e_i.
template <Field K>
AlgebraPtr<K> split(const K& k, std::size_t n) {
  std::vector<StructureConstant<K>> sc;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    sc.push_back({i, i, i, k.one()});
    labels.push_back("e" + std::to_string(i + 1));
  }
  return make_algebra(k, n, sc, Vec<K>(n, k.one()), labels);
}

/// M_n(k) on matrix units e_ab (row-major), e_ab e_cd = delta_bc e_ad.
template <Field K>
AlgebraPtr<K> matrix_algebra(const K& k, std::size_t n) {
  std::vector<StructureConstant<K>> sc;
  std::vector<std::string> labels;
  Vec<K> unit(n * n, k.zero());
  for (std::size_t a = 0; a < n; ++a) {
    unit[a * n + a] = k.one();
    for (std::size_t b = 0; b < n; ++b) {
      labels.push_back("e" + std::to_string(a + 1) + std::to_string(b + 1));
      for (std::size_t d = 0; d < n; ++d) sc.push_back({a * n + b, b * n + d, a * n + d, k.one()});
    }
  }
  return make_algebra(k, n * n, sc, unit, labels);
}

/// M_2(k) (+) k: matrix units e11, e12, e21, e22 and the central idempotent f.
template <Field K>
AlgebraPtr<K> m2_plus_k(const K& k) {
  return direct_sum(k, {matrix_algebra(k, 2), split(k, 1)});
}

/// Upper-triangular 2x2 matrices on e11, e12, e22.
template <Field K>
AlgebraPtr<K> upper_triangular(const K& k) {
  auto one = k.one();
  std::vector<StructureConstant<K>> sc = {{0, 0, 0, one}, {0, 1, 1, one}, {1, 2, 1, one}, {2, 2, 2, one}};
  return make_algebra(k, 3, sc, Vec<K>{one, k.zero(), one}, {"e11", "e12", "e22"});
}

/// k[x]/(x^n) on 1, x, ..., x^{n-1}.
template <Field K>
AlgebraPtr<K> truncated_polynomial(const K& k, std::size_t n) {
  std::vector<StructureConstant<K>> sc;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
    for (std::size_t j = 0; i + j < n; ++j) sc.push_back({i, j, i + j, k.one()});
  }
  Vec<K> unit(n, k.zero());
  if (n) unit[0] = k.one();
  return make_algebra(k, n, sc, unit, labels);
}

/// k[x_1..x_m]/(x_1..x_m)^2 on 1, x_1, ..., x_m.
template <Field K>
AlgebraPtr<K> square_zero(const K& k, std::size_t m) {
  std::vector<StructureConstant<K>> sc = {{0, 0, 0, k.one()}};
  std::vector<std::string> labels = {"1"};
  for (std::size_t i = 1; i <= m; ++i) {
    sc.push_back({0, i, i, k.one()});
    sc.push_back({i, 0, i, k.one()});
    labels.push_back("x" + std::to_string(i));
  }
  Vec<K> unit(m + 1, k.zero());
  unit[0] = k.one();
  return make_algebra(k, m + 1, sc, unit, labels);
}

template <Field K>
Vec<K> basis(const AlgebraPtr<K>& a, std::size_t i) {
  return a->basis_vector(i);
}

/// E1: A = k^3, I_1 = <e3>, I_2 = <e1>.
template <Field K>
Covering<K> e1(const K& k) {
  auto a = split(k, 3);
  return Covering<K>(a, {ideal_closure(a, {a->basis_vector(2)}), ideal_closure(a, {a->basis_vector(0)})});
}

/// E4: A = M_2 (+) k, I_1 = M_2 (+) 0, I_2 = 0 (+) k.
template <Field K>
Covering<K> e4(const K& k) {
  auto a = m2_plus_k(k);
  return Covering<K>(a, {ideal_closure(a, {a->basis_vector(0)}), ideal_closure(a, {a->basis_vector(4)})});
}

/// A = k[x,y]/(x,y)^2 covered by the three "lines" <x>, <y>, <x+y>.
template <Field K>
Covering<K> three_lines(const K& k) {
  auto a = square_zero(k, 2);
  Vec<K> diag{k.zero(), k.one(), k.one()};
  return Covering<K>(a, {ideal_closure(a, {a->basis_vector(1)}), ideal_closure(a, {a->basis_vector(2)}),
                         ideal_closure(a, {diag})});
}

/// A single zero ideal: the trivial covering of A.
template <Field K>
Covering<K> trivial(const AlgebraPtr<K>& a) {
  return Covering<K>(a, {Ideal<K>::zero(a)});
}

}  // namespace ncc::catalog

#endif  // NCC_CATALOG_HPP
