#pragma once

// Hand-rolled random instances for property tests. Everything is driven by a
// seeded std::mt19937_64 so failures reproduce.

#include <random>
#include <vector>

#include "ncc/catalog.hpp"
#include "ncc/oracle.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline long long small_int(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

template <ncc::Field K>
ncc::Matrix<K> matrix(const K& k, Rng& rng, std::size_t rows, std::size_t cols, long long bound = 3) {
  ncc::Matrix<K> m(k, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (small_int(rng, 0, 2)) m(r, c) = k.from_int(small_int(rng, -bound, bound));
  return m;
}

template <ncc::Field K>
ncc::Vec<K> vector(const K& k, Rng& rng, std::size_t n, long long bound = 2) {
  ncc::Vec<K> v(n, k.zero());
  for (auto& x : v)
    if (small_int(rng, 0, 1)) x = k.from_int(small_int(rng, -bound, bound));
  return v;
}

/// Direct sum of small pieces with total dimension <= max_dim (at least 1).
template <ncc::Field K>
ncc::AlgebraPtr<K> algebra(const K& k, Rng& rng, std::size_t max_dim = 6) {
  namespace cat = ncc::catalog;
  std::vector<ncc::AlgebraPtr<K>> parts;
  std::size_t used = 0;
  while (used < max_dim) {
    ncc::AlgebraPtr<K> piece;
    switch (small_int(rng, 0, 5)) {
      case 0: piece = cat::split(k, 1); break;
      case 1: piece = cat::truncated_polynomial(k, static_cast<std::size_t>(small_int(rng, 2, 3))); break;
      case 2: piece = cat::upper_triangular(k); break;
      case 3: piece = cat::square_zero(k, 2); break;
      case 4: piece = cat::matrix_algebra(k, 2); break;
      default: piece = cat::split(k, 2); break;
    }
    if (used + piece->dim() > max_dim) {
      if (used) break;
      continue;
    }
    parts.push_back(piece);
    used += piece->dim();
    if (small_int(rng, 0, 2) == 0) break;
  }
  return parts.size() == 1 ? parts.front() : ncc::direct_sum(k, parts);
}

template <ncc::Field K>
ncc::Ideal<K> ideal(const ncc::AlgebraPtr<K>& a, Rng& rng) {
  const K& k = a->field();
  std::vector<ncc::Vec<K>> gens;
  auto count = small_int(rng, 0, 2);
  for (long long g = 0; g < count; ++g) {
    if (small_int(rng, 0, 1)) gens.push_back(a->basis_vector(static_cast<std::size_t>(small_int(rng, 0, a->dim() - 1))));
    else gens.push_back(vector(k, rng, a->dim()));
  }
  return ncc::ideal_closure(a, gens);
}

/// N <= max_n random ideals; not necessarily a covering in the strict sense.
template <ncc::Field K>
ncc::Covering<K> covering(const K& k, Rng& rng, std::size_t max_dim = 6, std::size_t max_n = 3) {
  auto a = algebra(k, rng, max_dim);
  std::vector<ncc::Ideal<K>> ideals;
  auto n = static_cast<std::size_t>(small_int(rng, 1, static_cast<long long>(max_n)));
  for (std::size_t i = 0; i < n; ++i) ideals.push_back(ideal(a, rng));
  return ncc::Covering<K>(a, ideals);
}

/// Random downward-closed family over N indices from a few random faces.
inline ncc::CoverDescription cover(Rng& rng, std::size_t N) {
  std::vector<ncc::IndexMask> faces;
  auto count = small_int(rng, 0, static_cast<long long>(N) + 1);
  for (long long f = 0; f < count; ++f) {
    auto m = static_cast<ncc::IndexMask>(small_int(rng, 1, (1LL << N) - 1));
    if (ncc::mask_size(m) <= 4 || small_int(rng, 0, 3) == 0) faces.push_back(m);
  }
  return ncc::cover_from_faces(N, faces);
}

}  // namespace gen
