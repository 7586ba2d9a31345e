#ifndef NCC_AMITSUR_HPP
#define NCC_AMITSUR_HPP

// Balanced tensor powers B^{(x)_A n} of the covering extension A -> B, the Sweedler
// coring B (x)_A B, and the Amitsur complex
//
//   C^0 = B -> C^1 = B (x)_A B -> C^2 = B (x)_A B (x)_A B -> ...
//   d(b_0 (x) ... (x) b_n) = sum_{i=0}^{n+1} (-1)^i (insert 1_B at slot i).
//
// Tensor powers are built left-associated, T_{n+1} = T_n (x)_A B. Every coordinate
// of T_n is the image of a pure tensor of B-basis vectors (its "word"), because
// quotient coordinates are the free columns of the relation space's RREF. The
// relation space splits by summand tuple, so each level is reduced block by block;
// the result is bit-identical to reducing the whole relation space at once.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncc/covering.hpp"

namespace ncc {

/// A-bimodule on k^dim given by the action matrices of the basis of A.
template <Field K>
class Bimodule {
 public:
  static Bimodule make(AlgebraPtr<K> algebra, std::size_t dim, std::vector<Matrix<K>> left,
                       std::vector<Matrix<K>> right, std::string provenance) {
    Bimodule m(std::move(algebra), dim, std::move(left), std::move(right), std::move(provenance));
    if (auto failure = m.check(); !failure.empty()) throw AxiomViolation("bimodule", failure);
    return m;
  }

  static Bimodule trusted(AlgebraPtr<K> algebra, std::size_t dim, std::vector<Matrix<K>> left,
                          std::vector<Matrix<K>> right, std::string provenance) {
    return Bimodule(std::move(algebra), dim, std::move(left), std::move(right), std::move(provenance));
  }

  const AlgebraPtr<K>& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const Matrix<K>& left(std::size_t a) const { return left_.at(a); }
  const Matrix<K>& right(std::size_t a) const { return right_.at(a); }
  const std::string& provenance() const { return provenance_; }

  Matrix<K> left_action(std::span<const typename K::element> a) const { return combine(left_, a); }
  Matrix<K> right_action(std::span<const typename K::element> a) const { return combine(right_, a); }

  /// Empty string when unital, associative and the two actions commute;
  /// otherwise a description of the first failure.
  std::string check() const {
    const auto& A = *algebra_;
    const auto id = Matrix<K>::identity(A.field(), dim_);
    if (!(left_action(A.unit()) == id)) return "left action of 1 is not the identity";
    if (!(right_action(A.unit()) == id)) return "right action of 1 is not the identity";
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t j = 0; j < A.dim(); ++j) {
        const auto& p = A.basis_product(i, j);
        if (!(left_action(p) == left_[i] * left_[j]))
          return "(b" + std::to_string(i) + "b" + std::to_string(j) + ").m != b" + std::to_string(i) + ".(b" +
                 std::to_string(j) + ".m)";
        if (!(right_action(p) == right_[j] * right_[i]))
          return "m.(b" + std::to_string(i) + "b" + std::to_string(j) + ") != (m.b" + std::to_string(i) + ").b" +
                 std::to_string(j);
        if (!(left_[i] * right_[j] == right_[j] * left_[i]))
          return "left action of b" + std::to_string(i) + " does not commute with right action of b" +
                 std::to_string(j);
      }
    return {};
  }

 private:
  Bimodule(AlgebraPtr<K> algebra, std::size_t dim, std::vector<Matrix<K>> left, std::vector<Matrix<K>> right,
           std::string provenance)
      : algebra_(std::move(algebra)),
        dim_(dim),
        left_(std::move(left)),
        right_(std::move(right)),
        provenance_(std::move(provenance)) {
    if (left_.size() != algebra_->dim() || right_.size() != algebra_->dim())
      throw DimensionMismatch("bimodule needs one action matrix per basis element of A");
    for (std::size_t a = 0; a < left_.size(); ++a)
      if (left_[a].rows() != dim_ || left_[a].cols() != dim_ || right_[a].rows() != dim_ || right_[a].cols() != dim_)
        throw DimensionMismatch("bimodule action matrix has wrong shape");
  }

  Matrix<K> combine(const std::vector<Matrix<K>>& mats, std::span<const typename K::element> a) const {
    const K& k = algebra_->field();
    Matrix<K> out(k, dim_, dim_);
    for (std::size_t i = 0; i < mats.size(); ++i)
      if (!k.is_zero(a[i])) out = out + mats[i].scaled(a[i]);
    return out;
  }

  AlgebraPtr<K> algebra_;
  std::size_t dim_;
  std::vector<Matrix<K>> left_;
  std::vector<Matrix<K>> right_;
  std::string provenance_;
};

/// B = (+)_i A_i with a . x . a' = pi(a) x pi(a').
template <Field K>
Bimodule<K> extension_bimodule(const Covering<K>& c) {
  const auto& A = *c.algebra();
  const auto& B = *c.extension();
  auto pi = c.pi_matrix();
  std::vector<Matrix<K>> left, right;
  for (std::size_t a = 0; a < A.dim(); ++a) {
    auto image = pi.column_vector(a);
    left.push_back(B.left_multiplication(image));
    right.push_back(B.right_multiplication(image));
  }
  return Bimodule<K>::make(c.algebra(), B.dim(), std::move(left), std::move(right), "B");
}

template <Field K>
struct TensorProduct {
  Bimodule<K> module;
  Matrix<K> projection;  // m (x)_k n -> m (x)_A n, raw index x * dim(n) + y
  Matrix<K> section;
};

/// m (x)_A n as the quotient of m (x)_k n by the balancing relations
/// (x.a) (x) y - x (x) (a.y), with the inherited outer actions.
template <Field K>
TensorProduct<K> tensor_over_A(const Bimodule<K>& m, const Bimodule<K>& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw DimensionMismatch("tensor_over_A: different base algebras");
  const auto& A = *m.algebra();
  const K& k = A.field();
  const std::size_t dm = m.dim(), dn = n.dim(), raw = dm * dn;
  std::vector<Vec<K>> relations;
  for (std::size_t a = 0; a < A.dim(); ++a) {
    const auto& ra = m.right(a);
    const auto& la = n.left(a);
    for (std::size_t x = 0; x < dm; ++x)
      for (std::size_t y = 0; y < dn; ++y) {
        Vec<K> v(raw, k.zero());
        for (std::size_t x2 = 0; x2 < dm; ++x2) v[x2 * dn + y] = k.add(v[x2 * dn + y], ra(x2, x));
        for (std::size_t y2 = 0; y2 < dn; ++y2) v[x * dn + y2] = k.sub(v[x * dn + y2], la(y2, y));
        relations.push_back(std::move(v));
      }
  }
  auto w = Subspace<K>::span(k, raw, relations);
  auto qd = quotient_data(raw, w);
  const auto id_m = Matrix<K>::identity(k, dm);
  const auto id_n = Matrix<K>::identity(k, dn);
  std::vector<Matrix<K>> left, right;
  for (std::size_t a = 0; a < A.dim(); ++a) {
    left.push_back(qd.projection * Matrix<K>::kron(m.left(a), id_n) * qd.section);
    right.push_back(qd.projection * Matrix<K>::kron(id_m, n.right(a)) * qd.section);
  }
  auto module = Bimodule<K>::trusted(m.algebra(), qd.complement.size(), std::move(left), std::move(right),
                                     "(" + m.provenance() + ")(x)_A(" + n.provenance() + ")");
  return {std::move(module), std::move(qd.projection), std::move(qd.section)};
}

/// Number of n-tuples over a k-element set that use every element.
inline double surjection_count(std::size_t n, std::size_t k) {
  // inclusion-exclusion; double keeps huge counts from wrapping (they only feed the size guard)
  double total = 0, binom = 1;
  for (std::size_t j = 0; j <= k; ++j) {
    double term = binom;
    for (std::size_t t = 0; t < n; ++t) term *= static_cast<double>(k - j);
    total += (j % 2 ? -term : term);
    binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
  }
  return total;
}

/// dim B^{(x)_A n} = sum over index tuples of dim A / (I_{i_1} + ... + I_{i_n}).
template <Field K>
double block_formula_dim(const Covering<K>& c, std::size_t n) {
  if (n == 0) return static_cast<double>(c.algebra()->dim());
  const std::size_t N = c.size();
  if (N > 16) throw DimensionMismatch("block formula limited to at most 16 ideals");
  double total = 0;
  for (IndexMask s = 1; s < (IndexMask{1} << N); ++s) {
    auto q = c.algebra()->dim() - c.ideal_sum_of(s).dim();
    if (q == 0) continue;
    total += surjection_count(n, mask_size(s)) * static_cast<double>(q);
  }
  return total;
}

/// The tower B, B (x)_A B, ..., B^{(x)_A max_level} in balanced coordinates.
template <Field K>
class TensorTower {
 public:
  using element = typename K::element;
  using SparseVec = std::vector<std::pair<std::size_t, element>>;
  using Word = std::vector<std::uint32_t>;

  /// Throws SizeCapExceeded (degree = level - 1, the Amitsur degree) when the
  /// block-formula dimension of a level exceeds `dim_cap`.
  TensorTower(const Covering<K>& c, std::size_t max_level, std::size_t dim_cap = 20000)
      : covering_(c), field_(c.field()) {
    if (max_level < 1) throw DimensionMismatch("tensor tower needs at least one level");
    for (std::size_t n = 1; n <= max_level; ++n) {
      auto predicted = block_formula_dim(c, n);
      if (predicted > static_cast<double>(dim_cap))
        throw SizeCapExceeded(n - 1, static_cast<std::size_t>(predicted), dim_cap);
    }
    const auto& A = *c.algebra();
    const auto& B = *c.extension();
    auto pi = c.pi_matrix();
    for (std::size_t a = 0; a < A.dim(); ++a) pi_columns_.push_back(pi.column_vector(a));
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::vector<Matrix<K>> l, r;
      const auto& Ai = *c.patch(i).algebra;
      for (std::size_t a = 0; a < A.dim(); ++a) {
        auto image = c.patch(i).projection.matrix().column_vector(a);
        l.push_back(Ai.left_multiplication(image));
        r.push_back(Ai.right_multiplication(image));
      }
      patch_left_.push_back(std::move(l));
      patch_right_.push_back(std::move(r));
    }
    Level first;
    first.dim = B.dim();
    for (std::size_t b = 0; b < B.dim(); ++b) {
      first.words.push_back({static_cast<std::uint32_t>(b)});
      first.raw.emplace_back(0, b);
    }
    levels_.push_back(std::move(first));
    while (levels_.size() < max_level) grow();
  }

  const Covering<K>& covering() const { return covering_; }
  const K& field() const { return field_; }
  std::size_t max_level() const { return levels_.size(); }
  std::size_t base_dim() const { return covering_.extension_dim(); }

  /// dim B^{(x)_A n}, n >= 1.
  std::size_t dim(std::size_t n) const { return level(n).dim; }

  /// The pure tensor of B-basis vectors whose image is coordinate c of level n.
  const Word& word(std::size_t n, std::size_t c) const { return level(n).words.at(c); }

  /// Summand index of each factor of word(n, c).
  std::vector<std::size_t> tuple(std::size_t n, std::size_t c) const {
    std::vector<std::size_t> t;
    for (auto b : word(n, c)) t.push_back(covering_.summand_of(b));
    return t;
  }

  /// Image in level n = factors.size() of the pure tensor v_1 (x) ... (x) v_n of B-vectors.
  Vec<K> project(const std::vector<Vec<K>>& factors) const {
    if (factors.empty() || factors.size() > levels_.size())
      throw DimensionMismatch("project: tensor length " + std::to_string(factors.size()) + " outside the tower");
    const K& k = field_;
    const std::size_t db = base_dim();
    for (const auto& f : factors)
      if (f.size() != db) throw DimensionMismatch("project: factor is not a B-vector");
    Vec<K> cur = factors[0];
    for (std::size_t n = 1; n < factors.size(); ++n) {
      const auto& lvl = levels_[n];
      Vec<K> next(lvl.dim, k.zero());
      for (std::size_t t = 0; t < cur.size(); ++t) {
        if (k.is_zero(cur[t])) continue;
        for (std::size_t b = 0; b < db; ++b) {
          if (k.is_zero(factors[n][b])) continue;
          auto coef = k.mul(cur[t], factors[n][b]);
          for (const auto& [target, w] : lvl.proj[t * db + b]) k.fma(next[target], coef, w);
        }
      }
      cur = std::move(next);
    }
    return cur;
  }

  /// Image of a pure tensor of B-basis vectors.
  Vec<K> project_word(const Word& w) const {
    std::vector<Vec<K>> factors;
    for (auto b : w) factors.push_back(unit_vector(b));
    return project(factors);
  }

  /// Level n -> level n+1, inserting 1_B before factor `slot` (slot = n appends).
  Matrix<K> insertion(std::size_t n, std::size_t slot) const {
    if (slot > n) throw DimensionMismatch("insertion slot out of range");
    const auto& one = covering_.extension()->unit();
    return word_operator(n, n + 1, [&](const Word& w) {
      std::vector<Vec<K>> f;
      for (std::size_t s = 0; s <= w.size(); ++s) {
        if (s == slot) f.push_back(one);
        if (s < w.size()) f.push_back(unit_vector(w[s]));
      }
      return f;
    });
  }

  /// Level n -> level n-1, multiplying factors `slot` and `slot + 1` in B.
  Matrix<K> multiplication(std::size_t n, std::size_t slot) const {
    if (n < 2 || slot + 1 >= n) throw DimensionMismatch("multiplication slot out of range");
    const auto& B = *covering_.extension();
    return word_operator(n, n - 1, [&](const Word& w) {
      std::vector<Vec<K>> f;
      for (std::size_t s = 0; s < w.size(); ++s) {
        if (s == slot) {
          f.push_back(B.basis_product(w[s], w[s + 1]));
          ++s;
        } else {
          f.push_back(unit_vector(w[s]));
        }
      }
      return f;
    });
  }

  /// Action matrices of basis element a of A on level n.
  Matrix<K> left_action(std::size_t n, std::size_t a) const {
    const auto& B = *covering_.extension();
    return word_operator(n, n, [&](const Word& w) {
      std::vector<Vec<K>> f;
      for (std::size_t s = 0; s < w.size(); ++s)
        f.push_back(s == 0 ? B.multiply(pi_columns_.at(a), unit_vector(w[s])) : unit_vector(w[s]));
      return f;
    });
  }
  Matrix<K> right_action(std::size_t n, std::size_t a) const {
    const auto& B = *covering_.extension();
    return word_operator(n, n, [&](const Word& w) {
      std::vector<Vec<K>> f;
      for (std::size_t s = 0; s < w.size(); ++s)
        f.push_back(s + 1 == w.size() ? B.multiply(unit_vector(w[s]), pi_columns_.at(a)) : unit_vector(w[s]));
      return f;
    });
  }

  Bimodule<K> bimodule(std::size_t n) const {
    std::vector<Matrix<K>> l, r;
    for (std::size_t a = 0; a < covering_.algebra()->dim(); ++a) {
      l.push_back(left_action(n, a));
      r.push_back(right_action(n, a));
    }
    return Bimodule<K>::trusted(covering_.algebra(), dim(n), std::move(l), std::move(r),
                                "B^(x)" + std::to_string(n));
  }

  /// Projection (level n-1) (x)_k B -> level n as a dense matrix; raw index t * dim(B) + b.
  Matrix<K> projection_matrix(std::size_t n) const {
    if (n < 2) throw DimensionMismatch("projection_matrix: level must be at least 2");
    const auto& lvl = level(n);
    Matrix<K> q(field_, lvl.dim, lvl.proj.size());
    for (std::size_t raw = 0; raw < lvl.proj.size(); ++raw)
      for (const auto& [c, w] : lvl.proj[raw]) q(c, raw) = w;
    return q;
  }

  /// Matrix level `from` -> level `to` of a map given on words as a pure tensor of B-vectors.
  template <class Fn>
  Matrix<K> word_operator(std::size_t from, std::size_t to, Fn&& fn) const {
    Matrix<K> m(field_, dim(to), dim(from));
    for (std::size_t c = 0; c < dim(from); ++c) {
      auto factors = fn(word(from, c));
      if (factors.size() != to) throw DimensionMismatch("word operator produced a tensor of the wrong length");
      auto image = project(factors);
      for (std::size_t r = 0; r < image.size(); ++r) m(r, c) = image[r];
    }
    return m;
  }

  Vec<K> unit_vector(std::size_t b) const {
    Vec<K> v(base_dim(), field_.zero());
    v.at(b) = field_.one();
    return v;
  }

 private:
  struct Level {
    std::size_t dim = 0;
    std::vector<Word> words;
    std::vector<std::pair<std::size_t, std::size_t>> raw;  // (coordinate of previous level, B index)
    std::vector<SparseVec> proj;                           // raw index -> combination of coordinates
  };

  const Level& level(std::size_t n) const {
    if (n < 1 || n > levels_.size()) throw DimensionMismatch("tensor level " + std::to_string(n) + " not built");
    return levels_[n - 1];
  }

  /// (coordinate t of the top level) . a as a sparse vector on the same level.
  SparseVec right_act(std::size_t t, std::size_t a) const {
    const K& k = field_;
    const auto& top = levels_.back();
    const std::size_t b = top.raw[t].second;
    const std::size_t i = covering_.summand_of(b);
    const std::size_t off = covering_.offset(i);
    const auto& r = patch_right_[i][a];
    SparseVec out;
    if (levels_.size() == 1) {
      for (std::size_t y = 0; y < r.rows(); ++y)
        if (!k.is_zero(r(y, b - off))) out.emplace_back(off + y, r(y, b - off));
      return out;
    }
    std::map<std::size_t, element> acc;
    const std::size_t u = top.raw[t].first;
    const std::size_t db = base_dim();
    for (std::size_t y = 0; y < r.rows(); ++y) {
      const auto& coef = r(y, b - off);
      if (k.is_zero(coef)) continue;
      for (const auto& [c, w] : top.proj[u * db + off + y]) {
        auto it = acc.try_emplace(c, k.zero()).first;
        k.fma(it->second, coef, w);
      }
    }
    for (auto& [c, w] : acc)
      if (!k.is_zero(w)) out.emplace_back(c, w);
    return out;
  }

  void grow() {
    const K& k = field_;
    const auto& prev = levels_.back();
    const std::size_t db = base_dim();
    const std::size_t adim = covering_.algebra()->dim();

    std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
    for (std::size_t t = 0; t < prev.dim; ++t) {
      std::vector<std::size_t> tup;
      for (auto b : prev.words[t]) tup.push_back(covering_.summand_of(b));
      groups[tup].push_back(t);
    }

    struct Fresh {
      std::size_t raw_index;
      std::size_t t, b;
    };
    std::vector<Fresh> fresh;
    // per raw index: its expansion in free raw columns, renumbered once the new coordinates are ordered
    struct Pending {
      std::vector<std::pair<std::size_t, element>> free_coeffs;  // raw index of free column, coefficient
    };
    std::vector<Pending> pending(prev.dim * db);

    for (const auto& [tup, members] : groups) {
      for (std::size_t j = 0; j < covering_.size(); ++j) {
        const std::size_t dj = covering_.patch_dim(j);
        if (dj == 0) continue;
        const std::size_t off = covering_.offset(j);
        const std::size_t local_dim = members.size() * dj;
        std::map<std::size_t, std::size_t> local_of;  // previous-level coordinate -> position in members
        for (std::size_t p = 0; p < members.size(); ++p) local_of[members[p]] = p;

        std::vector<Vec<K>> rel;
        for (std::size_t p = 0; p < members.size(); ++p)
          for (std::size_t a = 0; a < adim; ++a) {
            auto ta = right_act(members[p], a);
            const auto& la = patch_left_[j][a];
            for (std::size_t y = 0; y < dj; ++y) {
              Vec<K> v(local_dim, k.zero());
              for (const auto& [t2, w] : ta) {
                auto& slot = v[local_of.at(t2) * dj + y];
                slot = k.add(slot, w);
              }
              for (std::size_t y2 = 0; y2 < dj; ++y2)
                if (!k.is_zero(la(y2, y))) {
                  auto& slot = v[p * dj + y2];
                  slot = k.sub(slot, la(y2, y));
                }
              rel.push_back(std::move(v));
            }
          }
        auto w = Subspace<K>::span(k, local_dim, rel);
        auto global = [&](std::size_t local) { return members[local / dj] * db + off + local % dj; };
        for (auto f : w.free_columns()) {
          fresh.push_back({global(f), members[f / dj], off + f % dj});
          pending[global(f)].free_coeffs.emplace_back(global(f), k.one());
        }
        auto free = w.free_columns();
        for (std::size_t r = 0; r < w.dim(); ++r) {
          auto& pd = pending[global(w.pivots()[r])];
          for (auto f : free)
            if (!k.is_zero(w.basis()(r, f))) pd.free_coeffs.emplace_back(global(f), k.neg(w.basis()(r, f)));
        }
      }
    }

    std::sort(fresh.begin(), fresh.end(), [](const Fresh& x, const Fresh& y) { return x.raw_index < y.raw_index; });
    std::vector<std::size_t> coord_of(prev.dim * db, SIZE_MAX);
    Level next;
    next.dim = fresh.size();
    for (std::size_t c = 0; c < fresh.size(); ++c) {
      coord_of[fresh[c].raw_index] = c;
      auto w = prev.words[fresh[c].t];
      w.push_back(static_cast<std::uint32_t>(fresh[c].b));
      next.words.push_back(std::move(w));
      next.raw.emplace_back(fresh[c].t, fresh[c].b);
    }
    next.proj.resize(prev.dim * db);
    for (std::size_t raw = 0; raw < pending.size(); ++raw) {
      for (const auto& [free_raw, coef] : pending[raw].free_coeffs) next.proj[raw].emplace_back(coord_of[free_raw], coef);
      std::sort(next.proj[raw].begin(), next.proj[raw].end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    levels_.push_back(std::move(next));
  }

  Covering<K> covering_;
  K field_;
  std::vector<Vec<K>> pi_columns_;
  std::vector<std::vector<Matrix<K>>> patch_left_, patch_right_;
  std::vector<Level> levels_;
};

/// The Sweedler coring C = B (x)_A B of A -> B, with C (x)_B C identified with
/// B (x)_A B (x)_A B via (x (x) y) (x)_B (x' (x) y') -> x (x) y x' (x) y'.
template <Field K>
struct SweedlerCoring {
  std::size_t dim = 0;
  Matrix<K> coproduct;  // x (x) y -> x (x) 1 (x) y
  Matrix<K> counit;     // x (x) y -> x y
  std::vector<std::vector<Vec<K>>> e;  // e[i][j] = pi_i(1) (x) pi_j(1)
};

/// Needs a tower with at least three levels.
template <Field K>
SweedlerCoring<K> build_coring(const TensorTower<K>& tower) {
  if (tower.max_level() < 3) throw DimensionMismatch("build_coring needs tensor levels up to 3");
  const auto& c = tower.covering();
  SweedlerCoring<K> out{tower.dim(2), tower.insertion(2, 1), tower.multiplication(2, 0), {}};
  out.e.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) out.e[i].push_back(tower.project({c.patch_unit(i), c.patch_unit(j)}));
  return out;
}

struct CoringReport {
  bool coassociative = false;
  bool left_counit = false;
  bool right_counit = false;
  bool coproduct_on_e = false;  // Delta e_ij = sum_k e_ik (x)_B e_kj
  bool counit_on_e = false;     // eps(e_ij) = delta_ij pi_i(1)
  bool ok() const { return coassociative && left_counit && right_counit && coproduct_on_e && counit_on_e; }
};

/// Needs a tower with at least four levels for coassociativity.
template <Field K>
CoringReport check_coring(const TensorTower<K>& tower, const SweedlerCoring<K>& coring) {
  if (tower.max_level() < 4) throw DimensionMismatch("check_coring needs tensor levels up to 4");
  const auto& c = tower.covering();
  const K& k = tower.field();
  CoringReport r;
  // (Delta (x) id) Delta and (id (x) Delta) Delta both land in B^(x)4.
  r.coassociative = tower.insertion(3, 1) * coring.coproduct == tower.insertion(3, 2) * coring.coproduct;
  const auto id = Matrix<K>::identity(k, coring.dim);
  r.left_counit = tower.multiplication(3, 0) * coring.coproduct == id;
  r.right_counit = tower.multiplication(3, 1) * coring.coproduct == id;
  r.coproduct_on_e = true;
  r.counit_on_e = true;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      Vec<K> expected(tower.dim(3), k.zero());
      for (std::size_t m = 0; m < c.size(); ++m) {
        auto term = tower.project({c.patch_unit(i), c.patch_unit(m), c.patch_unit(j)});
        for (std::size_t x = 0; x < term.size(); ++x) expected[x] = k.add(expected[x], term[x]);
      }
      if (!(coring.coproduct.apply(coring.e[i][j]) == expected)) r.coproduct_on_e = false;
      auto eps = coring.counit.apply(coring.e[i][j]);
      auto want = i == j ? c.patch_unit(i) : Vec<K>(c.extension_dim(), k.zero());
      if (!(eps == want)) r.counit_on_e = false;
    }
  return r;
}

template <Field K>
struct AmitsurComplex {
  std::size_t n_max = 0;
  std::vector<std::size_t> dims;           // dims[n] = dim C^n for n = 0..n_max+1
  std::vector<Matrix<K>> differentials;    // d_n : C^n -> C^{n+1} for n = 0..n_max
  Matrix<K> augmentation;                  // pi : A -> C^0
};

/// Uses tower levels 1..n_max+2 (C^n = level n+1).
template <Field K>
AmitsurComplex<K> build_amitsur(const TensorTower<K>& tower, std::size_t n_max) {
  if (n_max < 1) throw DimensionMismatch("build_amitsur: n_max must be at least 1");
  if (tower.max_level() < n_max + 2)
    throw DimensionMismatch("build_amitsur: tower has " + std::to_string(tower.max_level()) + " levels, needs " +
                            std::to_string(n_max + 2));
  const K& k = tower.field();
  AmitsurComplex<K> cx{n_max, {}, {}, tower.covering().pi_matrix()};
  for (std::size_t n = 0; n <= n_max + 1; ++n) cx.dims.push_back(tower.dim(n + 1));
  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::size_t level = n + 1;
    Matrix<K> d(k, tower.dim(level + 1), tower.dim(level));
    for (std::size_t slot = 0; slot <= level; ++slot) {
      auto ins = tower.insertion(level, slot);
      d = slot % 2 ? d - ins : d + ins;
    }
    cx.differentials.push_back(std::move(d));
  }
  if (!(cx.differentials[0] * cx.augmentation).is_zero()) throw NotAComplex(0);
  for (std::size_t n = 0; n + 1 < cx.differentials.size(); ++n)
    if (!(cx.differentials[n + 1] * cx.differentials[n]).is_zero()) throw NotAComplex(n + 1);
  return cx;
}

/// Homology dimensions at C^0..C^{n_max}. With `augmented`, the incoming map at C^0
/// is pi : A -> B, so degree 0 reports ker d_0 / im pi; without it, ker d_0.
template <Field K>
std::vector<std::size_t> amitsur_homology(const AmitsurComplex<K>& cx, bool augmented) {
  const K& k = cx.augmentation.field();
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= cx.n_max; ++n) {
    if (n == 0) {
      auto incoming = augmented ? cx.augmentation : Matrix<K>(k, cx.dims[0], 0);
      out.push_back(homology_dim(incoming, cx.differentials[0], 0));
    } else {
      out.push_back(homology_dim(cx.differentials[n - 1], cx.differentials[n], n));
    }
  }
  return out;
}

/// dim ker(pi : A -> B); zero exactly when the ideals form a covering.
template <Field K>
std::size_t augmentation_kernel_dim(const AmitsurComplex<K>& cx) {
  return cx.augmentation.cols() - rank(cx.augmentation);
}

}  // namespace ncc

#endif  // NCC_AMITSUR_HPP
