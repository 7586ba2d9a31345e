#ifndef NCC_COVERING_HPP
#define NCC_COVERING_HPP

// Coverings of an algebra A by two-sided ideals I_1..I_N, with the patches
// A_i = A/I_i, the overlaps A_ij = A/(I_i + I_j), the extension B = (+)_i A_i and
// the completeness check of the sequence 0 -> A -> B -> B'.
//
// Indices are 0-based in code; reports and problem files use 1..N.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ncc/algebra.hpp"

namespace ncc {

/// Bit set of covering indices; bit i set means index i (0-based) is present.
using IndexMask = std::uint32_t;

inline std::size_t mask_size(IndexMask m) { return static_cast<std::size_t>(__builtin_popcount(m)); }

template <Field K>
class Covering {
 public:
  Covering(AlgebraPtr<K> algebra, std::vector<Ideal<K>> ideals)
      : algebra_(std::move(algebra)), ideals_(std::move(ideals)) {
    if (ideals_.empty()) throw DimensionMismatch("a covering needs at least one ideal");
    if (ideals_.size() > 20) throw DimensionMismatch("at most 20 ideals are supported");
    for (const auto& i : ideals_)
      if (!same_algebra(i.algebra(), algebra_)) throw DimensionMismatch("covering ideal of a different algebra");

    std::vector<AlgebraPtr<K>> parts;
    for (const auto& i : ideals_) {
      patches_.push_back(quotient(algebra_, i));
      offsets_.push_back(b_dim_);
      b_dim_ += patches_.back().algebra->dim();
      parts.push_back(patches_.back().algebra);
    }
    b_algebra_ = direct_sum(algebra_->field(), parts);

    const std::size_t n = ideals_.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto q = quotient(algebra_, ideal_sum(ideals_[i], ideals_[j]));
        auto from_i = AlgebraHom<K>::make(patches_[i].algebra, q.algebra, q.projection.matrix() * patches_[i].section);
        auto from_j = AlgebraHom<K>::make(patches_[j].algebra, q.algebra, q.projection.matrix() * patches_[j].section);
        if (!(from_i.matrix() * patches_[i].projection.matrix() == from_j.matrix() * patches_[j].projection.matrix()))
          throw AxiomViolation("overlap square", "pi^i_ij pi_i != pi^j_ij pi_j for pair (" + std::to_string(i + 1) +
                                                     ", " + std::to_string(j + 1) + ")");
        overlaps_.emplace(std::make_pair(i, j), Overlap{q.algebra, std::move(from_i), std::move(from_j)});
      }
  }

  const AlgebraPtr<K>& algebra() const { return algebra_; }
  const K& field() const { return algebra_->field(); }
  std::size_t size() const { return ideals_.size(); }
  const std::vector<Ideal<K>>& ideals() const { return ideals_; }
  const Ideal<K>& ideal(std::size_t i) const { return ideals_.at(i); }

  /// A_i with pi_i and the coordinate section.
  const QuotientAlgebra<K>& patch(std::size_t i) const { return patches_.at(i); }

  /// A_ij for i < j.
  const AlgebraPtr<K>& overlap(std::size_t i, std::size_t j) const { return overlaps_.at(ordered(i, j)).algebra; }

  /// pi^from_ij : A_from -> A_ij, where `from` is i or j.
  const AlgebraHom<K>& overlap_projection(std::size_t i, std::size_t j, std::size_t from) const {
    const auto& o = overlaps_.at(ordered(i, j));
    if (from == std::min(i, j)) return o.from_low;
    if (from == std::max(i, j)) return o.from_high;
    throw DimensionMismatch("overlap_projection: source index is not part of the pair");
  }

  /// Sum of the ideals whose indices are in `mask` (the zero ideal for the empty mask).
  Ideal<K> ideal_sum_of(IndexMask mask) const {
    auto acc = Ideal<K>::zero(algebra_);
    for (std::size_t i = 0; i < size(); ++i)
      if (mask & (IndexMask{1} << i)) acc = ideal_sum(acc, ideals_[i]);
    return acc;
  }

  /// B = (+)_i A_i as an algebra, in block coordinates.
  const AlgebraPtr<K>& extension() const { return b_algebra_; }
  std::size_t extension_dim() const { return b_dim_; }
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  std::size_t patch_dim(std::size_t i) const { return patches_.at(i).algebra->dim(); }

  /// Index of the patch owning B-coordinate `b`.
  std::size_t summand_of(std::size_t b) const {
    if (b >= b_dim_) throw DimensionMismatch("B coordinate out of range");
    for (std::size_t i = size(); i-- > 0;)
      if (b >= offsets_[i] && patch_dim(i) > 0) return i;
    throw DimensionMismatch("B coordinate out of range");
  }

  /// pi : A -> B, the stacked projections.
  Matrix<K> pi_matrix() const {
    Matrix<K> m(field(), b_dim_, algebra_->dim());
    for (std::size_t i = 0; i < size(); ++i) m.set_block(offsets_[i], 0, patches_[i].projection.matrix());
    return m;
  }

  /// pi_i(1) embedded in B.
  Vec<K> patch_unit(std::size_t i) const {
    Vec<K> v(b_dim_, field().zero());
    const auto& u = patches_.at(i).algebra->unit();
    std::copy(u.begin(), u.end(), v.begin() + static_cast<std::ptrdiff_t>(offsets_[i]));
    return v;
  }

 private:
  struct Overlap {
    AlgebraPtr<K> algebra;
    AlgebraHom<K> from_low;
    AlgebraHom<K> from_high;
  };

  static std::pair<std::size_t, std::size_t> ordered(std::size_t i, std::size_t j) {
    if (i == j) throw DimensionMismatch("overlap of an index with itself is its patch");
    return {std::min(i, j), std::max(i, j)};
  }

  AlgebraPtr<K> algebra_;
  std::vector<Ideal<K>> ideals_;
  std::vector<QuotientAlgebra<K>> patches_;
  std::vector<std::size_t> offsets_;
  std::size_t b_dim_ = 0;
  AlgebraPtr<K> b_algebra_;
  std::map<std::pair<std::size_t, std::size_t>, Overlap> overlaps_;
};

template <Field K>
bool is_covering(const Covering<K>& c) {
  return ideal_intersection(c.ideals()).dim() == 0;
}

/// tau : B -> B' with B' = (+)_{i<j} A_ij; row block (i,j) is pi^i_ij on the
/// i-block minus pi^j_ij on the j-block.
template <Field K>
Matrix<K> build_tau(const Covering<K>& c) {
  std::size_t rows = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) rows += c.overlap(i, j)->dim();
  Matrix<K> tau(c.field(), rows, c.extension_dim());
  std::size_t r = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      tau.set_block(r, c.offset(i), c.overlap_projection(i, j, i).matrix());
      tau.set_block(r, c.offset(j), c.overlap_projection(i, j, j).matrix().scaled(c.field().neg(c.field().one())));
      r += c.overlap(i, j)->dim();
    }
  return tau;
}

struct CompletenessReport {
  bool is_covering = false;
  std::size_t intersection_dim = 0;
  bool exact_at_A = false;
  bool exact_at_B = false;
  std::size_t ker_tau_dim = 0;
  std::size_t im_pi_dim = 0;
  bool complete = false;
};

template <Field K>
CompletenessReport completeness_check(const Covering<K>& c) {
  CompletenessReport r;
  r.intersection_dim = ideal_intersection(c.ideals()).dim();
  r.is_covering = r.intersection_dim == 0;
  auto pi = c.pi_matrix();
  auto im_pi = image_basis(pi);
  auto ker_tau = kernel_basis(build_tau(c));
  r.im_pi_dim = im_pi.dim();
  r.ker_tau_dim = ker_tau.dim();
  r.exact_at_A = im_pi.dim() == c.algebra()->dim();
  r.exact_at_B = im_pi == ker_tau;
  r.complete = r.is_covering && r.exact_at_A && r.exact_at_B;
  return r;
}

}  // namespace ncc

#endif  // NCC_COVERING_HPP
