#ifndef NCC_ORACLE_HPP
#define NCC_ORACLE_HPP

// Combinatorial covers and their nerves. A cover of N opens is described by the
// set of index tuples whose opens have nonempty common intersection; its
// constant sheaf is the functor with R(zeta) = k on those tuples and 0 elsewhere.
// The nerve cohomology is computed with the simplicial coboundary, independent of
// the Cech builder.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "ncc/cech.hpp"

namespace ncc {

struct CoverDescription {
  std::size_t N = 0;
  std::set<IndexMask> overlaps;  // nonempty tuples with nonempty intersection

  /// Throws InputError unless every singleton is present and the family is closed
  /// under taking nonempty subtuples.
  void validate() const {
    if (N < 1 || N > 16) throw InputError("cover", "N must be between 1 and 16");
    for (std::size_t i = 0; i < N; ++i)
      if (!overlaps.count(IndexMask{1} << i))
        throw InputError("cover", "singleton {" + std::to_string(i + 1) + "} missing");
    for (auto m : overlaps) {
      if (m == 0) throw InputError("cover", "empty tuple listed");
      if (m >> N) throw InputError("cover", "tuple " + format_tuple(m) + " uses an index above N");
      for (auto i : tuple_indices(m)) {
        IndexMask sub = m & ~(IndexMask{1} << i);
        if (sub && !overlaps.count(sub))
          throw InputError("cover", format_tuple(m) + " listed but " + format_tuple(sub) + " is not");
      }
    }
  }

  bool contains(IndexMask m) const { return m == 0 || overlaps.count(m) > 0; }

  std::size_t max_simplex_dim() const {
    std::size_t d = 0;
    for (auto m : overlaps) d = std::max(d, mask_size(m) - 1);
    return d;
  }
};

/// Downward closure of the given tuples together with all singletons.
inline CoverDescription cover_from_faces(std::size_t N, const std::vector<IndexMask>& faces) {
  CoverDescription c{N, {}};
  for (std::size_t i = 0; i < N; ++i) c.overlaps.insert(IndexMask{1} << i);
  for (auto f : faces)
    for (IndexMask s = f; s; s = (s - 1) & f) c.overlaps.insert(s);
  c.validate();
  return c;
}

template <Field K>
PosetFunctor<K> functor_from_cover(const K& k, const CoverDescription& cover) {
  cover.validate();
  auto line = make_algebra(k, 1, std::vector<StructureConstant<K>>{{0, 0, 0, k.one()}}, Vec<K>{k.one()}, {"1"});
  auto zero = Algebra<K>::zero(k);
  std::vector<AlgebraPtr<K>> rings;
  for (IndexMask z = 0; z < (IndexMask{1} << cover.N); ++z) rings.push_back(cover.contains(z) ? line : zero);
  std::map<typename PosetFunctor<K>::RestrictionKey, Matrix<K>> res;
  for (IndexMask z = 0; z < rings.size(); ++z)
    for (std::size_t i = 0; i < cover.N; ++i) {
      const IndexMask t = z | (IndexMask{1} << i);
      if (t == z) continue;
      Matrix<K> m(k, rings[t]->dim(), rings[z]->dim());
      if (m.rows() == 1 && m.cols() == 1) m(0, 0) = k.one();
      res.emplace(std::make_pair(z, i), std::move(m));
    }
  return PosetFunctor<K>::make(cover.N, std::move(rings), res);
}

/// Simplicial cohomology of the nerve with coefficients in k, degrees 0..top
/// simplex dimension. (delta f)(s) = sum_k (-1)^k f(s without its k-th vertex).
template <Field K>
std::vector<std::size_t> nerve_cohomology(const K& k, const CoverDescription& cover) {
  cover.validate();
  const std::size_t top = cover.max_simplex_dim();
  std::vector<std::vector<IndexMask>> simplices(top + 2);
  for (auto m : cover.overlaps) simplices[mask_size(m) - 1].push_back(m);
  std::vector<Matrix<K>> delta;  // delta[p] : C^p -> C^{p+1}
  for (std::size_t p = 0; p <= top; ++p) {
    const auto& lo = simplices[p];
    const auto& hi = simplices[p + 1];
    Matrix<K> m(k, hi.size(), lo.size());
    for (std::size_t r = 0; r < hi.size(); ++r) {
      auto verts = tuple_indices(hi[r]);
      for (std::size_t v = 0; v < verts.size(); ++v) {
        IndexMask face = hi[r] & ~(IndexMask{1} << verts[v]);
        auto col = static_cast<std::size_t>(std::find(lo.begin(), lo.end(), face) - lo.begin());
        m(r, col) = v % 2 ? k.neg(k.one()) : k.one();
      }
    }
    delta.push_back(std::move(m));
  }
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p <= top; ++p) {
    auto incoming = p == 0 ? Matrix<K>(k, simplices[0].size(), 0) : delta[p - 1];
    out.push_back(homology_dim(incoming, delta[p], p));
  }
  return out;
}

}  // namespace ncc

#endif  // NCC_ORACLE_HPP
