#ifndef NCC_CECH_HPP
#define NCC_CECH_HPP

// Rings over increasing index tuples (poset functors), the Cech complex (S^n, d')
// and its cohomology, ringed structures on an algebra, and the comparison map phi
// from the Amitsur complex.
//
// An increasing tuple zeta = (i_1 < ... < i_k) over 0..N-1 is stored as the bit
// set IndexMask; blocks of S^n are ordered lexicographically by tuple. For x on
// zeta and an index i not in zeta,
//
//   (d' x)_{zeta + i} = (-1)^pos r(x),   pos = #{j in zeta : j < i},
//
// i.e. pos is the 0-based position of i inside zeta + i.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ncc/amitsur.hpp"

namespace ncc {

inline std::vector<std::size_t> tuple_indices(IndexMask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m >> i; ++i)
    if (m & (IndexMask{1} << i)) out.push_back(i);
  return out;
}

/// "{1,3}" (1-based).
inline std::string format_tuple(IndexMask m) {
  std::string s = "{";
  bool first = true;
  for (auto i : tuple_indices(m)) {
    s += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

/// 0-based position of index i in the tuple zeta + i.
inline std::size_t insertion_position(IndexMask zeta, std::size_t i) {
  return mask_size(zeta & ((IndexMask{1} << i) - 1));
}

/// Increasing tuples of length n over 0..N-1, in lexicographic order.
inline std::vector<IndexMask> tuples_of_size(std::size_t N, std::size_t n) {
  std::vector<IndexMask> out;
  if (n > N) return out;
  std::vector<std::size_t> idx(n);
  for (std::size_t k = 0; k < n; ++k) idx[k] = k;
  for (;;) {
    IndexMask m = 0;
    for (auto i : idx) m |= IndexMask{1} << i;
    out.push_back(m);
    std::size_t k = n;
    while (k > 0 && idx[k - 1] == N - n + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t t = k; t < n; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

/// Signs of the two ways of extending zeta to theta = zeta + {i, j} one index at a
/// time; the entries cancel for every pair.
inline std::pair<int, int> two_path_signs(IndexMask zeta, IndexMask theta) {
  auto extra = tuple_indices(theta & ~zeta);
  if ((zeta & ~theta) || extra.size() != 2) throw DimensionMismatch("two_path_signs: theta must be zeta plus two indices");
  auto sign = [](std::size_t e) { return e % 2 ? -1 : 1; };
  const std::size_t i = extra[0], j = extra[1];
  const IndexMask bi = IndexMask{1} << i, bj = IndexMask{1} << j;
  int via_i = sign(insertion_position(zeta, i) + insertion_position(zeta | bi, j));
  int via_j = sign(insertion_position(zeta, j) + insertion_position(zeta | bj, i));
  return {via_i, via_j};
}

struct FunctorReport {
  bool ok = true;
  std::size_t squares_checked = 0;
  std::string witness;
};

/// Rings R(zeta) for every increasing tuple over 0..N-1 and restriction
/// homomorphisms R(zeta) -> R(zeta + i). Longer restrictions are composites.
template <Field K>
class PosetFunctor {
 public:
  using RestrictionKey = std::pair<IndexMask, std::size_t>;

  /// `rings` is indexed by mask (size 2^N); `restrictions` must hold a matrix for every
  /// (zeta, i) with i not in zeta. Throws AxiomViolation when a restriction is not a
  /// homomorphism or a square fails to commute.
  static PosetFunctor make(std::size_t N, std::vector<AlgebraPtr<K>> rings,
                           const std::map<RestrictionKey, Matrix<K>>& restrictions) {
    if (N < 1 || N > 16) throw DimensionMismatch("poset functor needs 1 <= N <= 16");
    if (rings.size() != (std::size_t{1} << N)) throw DimensionMismatch("poset functor needs one ring per tuple");
    std::map<RestrictionKey, AlgebraHom<K>> homs;
    for (IndexMask z = 0; z < rings.size(); ++z)
      for (std::size_t i = 0; i < N; ++i) {
        if (z & (IndexMask{1} << i)) continue;
        auto it = restrictions.find({z, i});
        if (it == restrictions.end())
          throw DimensionMismatch("missing restriction " + format_tuple(z) + " -> " +
                                  format_tuple(z | (IndexMask{1} << i)));
        auto report = check_hom(*rings[z], *rings[z | (IndexMask{1} << i)], it->second);
        if (!report.ok)
          throw AxiomViolation("restriction " + format_tuple(z) + " -> " + format_tuple(z | (IndexMask{1} << i)) +
                                   " is not a homomorphism (" + report.axiom + ")",
                               report.witness);
        homs.emplace(RestrictionKey{z, i},
                     AlgebraHom<K>::trusted(rings[z], rings[z | (IndexMask{1} << i)], it->second));
      }
    PosetFunctor f(N, std::move(rings), std::move(homs));
    auto report = f.validate();
    if (!report.ok) throw AxiomViolation("functoriality", report.witness);
    return f;
  }

  std::size_t size() const { return N_; }
  const K& field() const { return rings_.front()->field(); }
  const AlgebraPtr<K>& ring(IndexMask zeta) const { return rings_.at(zeta); }

  /// r : R(zeta) -> R(zeta + i).
  const AlgebraHom<K>& restriction(IndexMask zeta, std::size_t i) const { return restrictions_.at({zeta, i}); }

  /// Composite restriction R(from) -> R(to) for from a subset of to, inserting the
  /// missing indices in increasing order.
  Matrix<K> restriction_matrix(IndexMask from, IndexMask to) const {
    if (from & ~to) throw DimensionMismatch("restriction_matrix: " + format_tuple(from) + " is not inside " +
                                            format_tuple(to));
    auto m = Matrix<K>::identity(field(), rings_.at(from)->dim());
    IndexMask cur = from;
    for (auto i : tuple_indices(to & ~from)) {
      m = restrictions_.at({cur, i}).matrix() * m;
      cur |= IndexMask{1} << i;
    }
    return m;
  }

  /// Every square R(zeta) -> R(zeta+i) -> R(zeta+i+j) vs R(zeta) -> R(zeta+j) -> R(zeta+i+j)
  /// commutes. This implies that all composite paths agree.
  FunctorReport validate() const {
    FunctorReport r;
    for (IndexMask z = 0; z < rings_.size(); ++z)
      for (std::size_t i = 0; i < N_; ++i)
        for (std::size_t j = i + 1; j < N_; ++j) {
          const IndexMask bi = IndexMask{1} << i, bj = IndexMask{1} << j;
          if ((z & bi) || (z & bj)) continue;
          ++r.squares_checked;
          auto via_i = restrictions_.at({z | bi, j}).matrix() * restrictions_.at({z, i}).matrix();
          auto via_j = restrictions_.at({z | bj, i}).matrix() * restrictions_.at({z, j}).matrix();
          if (!(via_i == via_j) && r.ok) {
            r.ok = false;
            r.witness = "paths " + format_tuple(z) + " -> " + format_tuple(z | bi) + " -> " +
                        format_tuple(z | bi | bj) + " and via " + format_tuple(z | bj) + " differ";
          }
        }
    return r;
  }

 private:
  PosetFunctor(std::size_t N, std::vector<AlgebraPtr<K>> rings, std::map<RestrictionKey, AlgebraHom<K>> restrictions)
      : N_(N), rings_(std::move(rings)), restrictions_(std::move(restrictions)) {}

  std::size_t N_;
  std::vector<AlgebraPtr<K>> rings_;
  std::map<RestrictionKey, AlgebraHom<K>> restrictions_;
};

/// R(zeta) = R for all zeta, every restriction the identity.
template <Field K>
PosetFunctor<K> constant_functor(std::size_t N, const AlgebraPtr<K>& ring) {
  if (N < 1) throw DimensionMismatch("constant_functor needs N >= 1");
  std::vector<AlgebraPtr<K>> rings(std::size_t{1} << N, ring);
  std::map<typename PosetFunctor<K>::RestrictionKey, Matrix<K>> res;
  const auto id = Matrix<K>::identity(ring->field(), ring->dim());
  for (IndexMask z = 0; z < rings.size(); ++z)
    for (std::size_t i = 0; i < N; ++i)
      if (!(z & (IndexMask{1} << i))) res.emplace(std::make_pair(z, i), id);
  return PosetFunctor<K>::make(N, std::move(rings), res);
}

/// A ringed structure on A: for an ideal J a ring Phi(J) and a homomorphism
/// Phi_J : A/J -> Phi(J); for J1 inside J2 the transition Phi(pi) : Phi(J1) -> Phi(J2)
/// must make Phi(pi) Phi_J1 = Phi_J2 pi commute.
template <Field K>
class RingedStructure {
 public:
  struct Entry {
    Ideal<K> ideal;
    QuotientAlgebra<K> quotient;  // A/J with its projection
    AlgebraPtr<K> ring;           // Phi(J)
    AlgebraHom<K> structure_map;  // Phi_J : A/J -> Phi(J)
  };
  using Assign = std::function<Entry(const Ideal<K>&)>;
  using Transition = std::function<Matrix<K>(const Entry& from, const Entry& to)>;

  RingedStructure(AlgebraPtr<K> base, Assign assign, Transition transition)
      : base_(std::move(base)), assign_(std::move(assign)), transition_(std::move(transition)) {}

  const AlgebraPtr<K>& base() const { return base_; }
  Entry at(const Ideal<K>& j) const { return assign_(j); }
  Matrix<K> transition(const Entry& from, const Entry& to) const { return transition_(from, to); }

  /// Phi(pi) Phi_J1 == Phi_J2 pi for J1 inside J2, with pi : A/J1 -> A/J2.
  bool natural(const Entry& from, const Entry& to) const {
    auto pi = to.quotient.projection.matrix() * from.quotient.section;
    return transition(from, to) * from.structure_map.matrix() == to.structure_map.matrix() * pi;
  }

 private:
  AlgebraPtr<K> base_;
  Assign assign_;
  Transition transition_;
};

/// Phi(J) = A/J, Phi_J = identity, Phi(pi) = pi.
template <Field K>
RingedStructure<K> default_ringed(const AlgebraPtr<K>& a) {
  using Entry = typename RingedStructure<K>::Entry;
  return RingedStructure<K>(
      a,
      [a](const Ideal<K>& j) {
        auto q = quotient(a, j);
        auto ring = q.algebra;
        return Entry{j, q, ring, AlgebraHom<K>::identity(ring)};
      },
      [](const Entry& from, const Entry& to) {
        return to.quotient.projection.matrix() * from.quotient.section;
      });
}

/// R(zeta) = Phi(I_zeta) with I_zeta the sum of the ideals in zeta, restrictions the
/// transitions of the ringed structure. Naturality is checked for every restriction.
template <Field K>
PosetFunctor<K> functor_from_ringed_covering(const Covering<K>& c, const RingedStructure<K>& rs) {
  if (!same_algebra(c.algebra(), rs.base())) throw DimensionMismatch("ringed structure over a different algebra");
  const std::size_t N = c.size();
  std::vector<typename RingedStructure<K>::Entry> entries;
  for (IndexMask z = 0; z < (IndexMask{1} << N); ++z) entries.push_back(rs.at(c.ideal_sum_of(z)));
  std::vector<AlgebraPtr<K>> rings;
  for (const auto& e : entries) rings.push_back(e.ring);
  std::map<typename PosetFunctor<K>::RestrictionKey, Matrix<K>> res;
  for (IndexMask z = 0; z < entries.size(); ++z)
    for (std::size_t i = 0; i < N; ++i) {
      const IndexMask bi = IndexMask{1} << i;
      if (z & bi) continue;
      if (!rs.natural(entries[z], entries[z | bi]))
        throw AxiomViolation("naturality", "square for I" + format_tuple(z) + " inside I" + format_tuple(z | bi) +
                                               " does not commute");
      res.emplace(std::make_pair(z, i), rs.transition(entries[z], entries[z | bi]));
    }
  return PosetFunctor<K>::make(N, std::move(rings), res);
}

/// Phi_{I_i} : A_i -> R({i}) for each index, retargeted onto the covering's patches.
template <Field K>
std::vector<AlgebraHom<K>> ringed_choice(const Covering<K>& c, const RingedStructure<K>& rs,
                                         const PosetFunctor<K>& f) {
  std::vector<AlgebraHom<K>> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto e = rs.at(c.ideal(i));
    out.push_back(AlgebraHom<K>::make(c.patch(i).algebra, f.ring(IndexMask{1} << i), e.structure_map.matrix()));
  }
  return out;
}

struct CechBlock {
  IndexMask tuple;
  std::size_t offset;
  std::size_t dim;
};

template <Field K>
struct CechComplex {
  std::size_t N = 0;
  std::vector<std::vector<CechBlock>> blocks;  // blocks[n] for n = 0..N
  std::vector<std::size_t> dims;               // dims[n] = dim S^n
  std::vector<Matrix<K>> differentials;        // d'_n : S^n -> S^{n+1}, n = 0..N-1

  const CechBlock& block(IndexMask zeta) const {
    for (const auto& b : blocks.at(mask_size(zeta)))
      if (b.tuple == zeta) return b;
    throw DimensionMismatch("no block for tuple " + format_tuple(zeta));
  }

  /// d'_n, or the zero map into the empty space S^{N+1}.
  Matrix<K> differential(std::size_t n, const K& k) const {
    if (n < differentials.size()) return differentials[n];
    return Matrix<K>(k, 0, n < dims.size() ? dims[n] : 0);
  }
};

template <Field K>
CechComplex<K> build_cech(const PosetFunctor<K>& f) {
  const std::size_t N = f.size();
  const K& k = f.field();
  CechComplex<K> cx;
  cx.N = N;
  for (std::size_t n = 0; n <= N; ++n) {
    std::vector<CechBlock> bl;
    std::size_t off = 0;
    for (auto z : tuples_of_size(N, n)) {
      bl.push_back({z, off, f.ring(z)->dim()});
      off += f.ring(z)->dim();
    }
    cx.blocks.push_back(std::move(bl));
    cx.dims.push_back(off);
  }
  for (std::size_t n = 0; n < N; ++n) {
    Matrix<K> d(k, cx.dims[n + 1], cx.dims[n]);
    for (const auto& src : cx.blocks[n])
      for (std::size_t i = 0; i < N; ++i) {
        const IndexMask bi = IndexMask{1} << i;
        if (src.tuple & bi) continue;
        const auto& dst = cx.block(src.tuple | bi);
        auto r = f.restriction(src.tuple, i).matrix();
        if (insertion_position(src.tuple, i) % 2) r = r.scaled(k.neg(k.one()));
        d.set_block(dst.offset, src.offset, r);
      }
    cx.differentials.push_back(std::move(d));
  }
  for (std::size_t n = 0; n + 1 < cx.differentials.size(); ++n)
    if (!(cx.differentials[n + 1] * cx.differentials[n]).is_zero()) throw NotAComplex(n + 1);
  return cx;
}

/// H^n = homology at S^{n+1} with S^0 = R(empty) left out, for n = 0 up to the last
/// degree whose cochain space S^{n+1} is nonzero. H^0 is always reported.
template <Field K>
std::vector<std::size_t> cech_cohomology(const CechComplex<K>& cx, const K& k) {
  std::size_t top = 1;
  for (std::size_t m = 1; m < cx.dims.size(); ++m)
    if (cx.dims[m] > 0) top = m;
  std::vector<std::size_t> out;
  for (std::size_t m = 1; m <= top; ++m) {
    auto incoming = m == 1 ? Matrix<K>(k, cx.dims[1], 0) : cx.differential(m - 1, k);
    out.push_back(homology_dim(incoming, cx.differential(m, k), m));
  }
  return out;
}

template <Field K>
std::vector<std::size_t> cech_cohomology(const CechComplex<K>& cx) {
  if (cx.differentials.empty()) throw DimensionMismatch("cech_cohomology: complex has no differentials");
  return cech_cohomology(cx, cx.differentials.front().field());
}

/// How phi treats tensors whose summand indices are distinct but not increasing.
enum class UnsortedPolicy {
  Vanish,           // phi = 0 off increasing tuples
  AlternatingSort,  // sort the indices, multiply by the sign of the sorting permutation
};

/// An element of the patch A_index.
template <Field K>
struct SummandElement {
  std::size_t index;
  Vec<K> coords;
};

/// Split a B-vector into its patch component; throws unless it lies in one patch.
template <Field K>
SummandElement<K> as_summand_element(const Covering<K>& c, std::span<const typename K::element> b) {
  if (b.size() != c.extension_dim()) throw DimensionMismatch("not a B-vector");
  const K& k = c.field();
  std::optional<std::size_t> owner;
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (k.is_zero(b[x])) continue;
    auto s = c.summand_of(x);
    if (owner && *owner != s) throw DimensionMismatch("element not decomposed by summands: support meets patches " +
                                                      std::to_string(*owner + 1) + " and " + std::to_string(s + 1));
    owner = s;
  }
  const std::size_t i = owner.value_or(0);
  auto first = b.begin() + static_cast<std::ptrdiff_t>(c.offset(i));
  return {i, Vec<K>(first, first + static_cast<std::ptrdiff_t>(c.patch_dim(i)))};
}

/// phi(y_1 (x) ... (x) y_n) in S^n: for increasing indices zeta the product
/// r(Phi_{i_1}(y_1)) ... r(Phi_{i_n}(y_n)) in R(zeta); zero when an index repeats.
template <Field K>
Vec<K> phi(const PosetFunctor<K>& f, const std::vector<AlgebraHom<K>>& choice, const CechComplex<K>& cx,
           const std::vector<SummandElement<K>>& factors, UnsortedPolicy policy = UnsortedPolicy::Vanish) {
  const K& k = f.field();
  const std::size_t n = factors.size();
  if (n == 0) throw DimensionMismatch("phi needs at least one factor");
  if (n >= cx.dims.size()) return {};  // more factors than indices: some index repeats
  Vec<K> out(cx.dims[n], k.zero());
  IndexMask zeta = 0;
  for (const auto& y : factors) {
    if (y.index >= f.size()) throw DimensionMismatch("phi: summand index out of range");
    if (y.coords.size() != choice.at(y.index).domain()->dim()) throw DimensionMismatch("phi: factor has wrong length");
    if (zeta & (IndexMask{1} << y.index)) return out;
    zeta |= IndexMask{1} << y.index;
  }
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (factors[a].index > factors[b].index) ++inversions;
  if (inversions && policy == UnsortedPolicy::Vanish) return out;
  const auto& target = *f.ring(zeta);
  Vec<K> prod = target.unit();
  for (const auto& y : factors) {
    auto local = choice[y.index](y.coords);
    prod = target.multiply(prod, f.restriction_matrix(IndexMask{1} << y.index, zeta).apply(local));
  }
  if (inversions % 2)
    for (auto& x : prod) x = k.neg(x);
  const auto& blk = cx.block(zeta);
  std::copy(prod.begin(), prod.end(), out.begin() + static_cast<std::ptrdiff_t>(blk.offset));
  return out;
}

/// A vector of B^{(x)_A n} as a combination of the pure tensors behind its coordinates.
template <Field K>
std::vector<std::pair<typename K::element, typename TensorTower<K>::Word>> decompose_tensor(
    const TensorTower<K>& tower, std::size_t n, std::span<const typename K::element> v) {
  if (v.size() != tower.dim(n)) throw DimensionMismatch("decompose_tensor: wrong vector length");
  std::vector<std::pair<typename K::element, typename TensorTower<K>::Word>> out;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!tower.field().is_zero(v[c])) out.emplace_back(v[c], tower.word(n, c));
  return out;
}

template <Field K>
std::vector<SummandElement<K>> word_factors(const TensorTower<K>& tower, const typename TensorTower<K>::Word& w) {
  std::vector<SummandElement<K>> out;
  for (auto b : w) out.push_back(as_summand_element(tower.covering(), tower.unit_vector(b)));
  return out;
}

/// phi on B^{(x)_A n} -> S^n as a matrix, evaluated on coordinate words.
template <Field K>
Matrix<K> phi_matrix(const PosetFunctor<K>& f, const std::vector<AlgebraHom<K>>& choice, const TensorTower<K>& tower,
                     const CechComplex<K>& cx, std::size_t n, UnsortedPolicy policy = UnsortedPolicy::Vanish) {
  const std::size_t rows = n < cx.dims.size() ? cx.dims[n] : 0;
  Matrix<K> m(f.field(), rows, tower.dim(n));
  if (rows == 0) return m;
  for (std::size_t c = 0; c < tower.dim(n); ++c) {
    auto v = phi(f, choice, cx, word_factors(tower, tower.word(n, c)), policy);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = v[r];
  }
  return m;
}

struct ChainMapDegree {
  std::size_t degree = 0;  // Amitsur degree m: checks d' phi = phi d on C^m = B^{(x)(m+1)}
  bool pass = true;
  std::string counterexample;
};

struct ChainMapReport {
  std::vector<ChainMapDegree> degrees;
  bool well_defined = true;
  std::size_t relations_checked = 0;
  std::string well_defined_witness;
  bool pass() const {
    return well_defined && std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.pass; });
  }
};

namespace detail {

template <Field K>
std::string describe_word(const TensorTower<K>& tower, const typename TensorTower<K>::Word& w) {
  const auto& B = *tower.covering().extension();
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " (x) " : "") + B.label(w[i]);
  return s;
}

}  // namespace detail

/// phi vanishes on the balancing relations (y . a) (x) y' - y (x) (a . y') at every
/// slot, over all B-basis words of each length 2..max_len whose count stays below
/// `word_cap`.
template <Field K>
void check_phi_well_defined(const PosetFunctor<K>& f, const std::vector<AlgebraHom<K>>& choice,
                            const TensorTower<K>& tower, const CechComplex<K>& cx, std::size_t max_len,
                            ChainMapReport& report, UnsortedPolicy policy, std::size_t word_cap = 50000) {
  const auto& c = tower.covering();
  const std::size_t db = c.extension_dim();
  const std::size_t adim = c.algebra()->dim();
  for (std::size_t n = 2; n <= max_len; ++n) {
    double count = 1;
    for (std::size_t t = 0; t < n; ++t) count *= static_cast<double>(db);
    if (count > static_cast<double>(word_cap) || db == 0) break;
    std::vector<std::uint32_t> w(n, 0);
    for (;;) {
      auto factors = word_factors(tower, w);
      for (std::size_t s = 0; s + 1 < n; ++s)
        for (std::size_t a = 0; a < adim; ++a) {
          auto left = factors, right = factors;
          const auto& pl = c.patch(left[s].index);
          const auto& pr = c.patch(right[s + 1].index);
          auto al = pl.projection.matrix().column_vector(a);
          auto ar = pr.projection.matrix().column_vector(a);
          left[s].coords = pl.algebra->multiply(left[s].coords, al);
          right[s + 1].coords = pr.algebra->multiply(ar, right[s + 1].coords);
          auto u = phi(f, choice, cx, left, policy);
          auto v = phi(f, choice, cx, right, policy);
          ++report.relations_checked;
          if (!(u == v) && report.well_defined) {
            report.well_defined = false;
            report.well_defined_witness = "relation at slot " + std::to_string(s) + " with a = " +
                                          c.algebra()->label(a) + " on " + detail::describe_word(tower, w);
          }
        }
      std::size_t pos = n;
      while (pos > 0 && w[pos - 1] + 1 == db) w[--pos] = 0;
      if (pos == 0) break;
      ++w[pos - 1];
    }
  }
}

/// d' o phi == phi o d on C^m for m = 0..n_max-1, comparing the images of every
/// coordinate pure tensor of C^m; also checks phi on the balancing relations.
template <Field K>
ChainMapReport verify_chain_map(const PosetFunctor<K>& f, const std::vector<AlgebraHom<K>>& choice,
                                const TensorTower<K>& tower, const AmitsurComplex<K>& amitsur,
                                const CechComplex<K>& cech, std::size_t n_max,
                                UnsortedPolicy policy = UnsortedPolicy::Vanish) {
  if (choice.size() != f.size()) throw DimensionMismatch("verify_chain_map: one choice map per index required");
  if (tower.covering().size() != f.size()) throw DimensionMismatch("verify_chain_map: covering and functor sizes differ");
  if (n_max > amitsur.n_max) throw DimensionMismatch("verify_chain_map: Amitsur complex too short");
  const K& k = f.field();
  ChainMapReport report;
  for (std::size_t m = 0; m < n_max; ++m) {
    const std::size_t level = m + 1;
    auto phi_here = phi_matrix(f, choice, tower, cech, level, policy);
    auto phi_next = phi_matrix(f, choice, tower, cech, level + 1, policy);
    auto lhs = cech.differential(level, k) * phi_here;
    auto rhs = phi_next * amitsur.differentials[m];
    ChainMapDegree deg{m, lhs == rhs, {}};
    if (!deg.pass) {
      for (std::size_t c = 0; c < lhs.cols() && deg.counterexample.empty(); ++c)
        for (std::size_t r = 0; r < lhs.rows(); ++r)
          if (!k.equal(lhs(r, c), rhs(r, c))) {
            deg.counterexample = detail::describe_word(tower, tower.word(level, c));
            break;
          }
    }
    report.degrees.push_back(std::move(deg));
  }
  check_phi_well_defined(f, choice, tower, cech, std::min<std::size_t>(n_max + 1, tower.max_level()), report, policy);
  return report;
}

}  // namespace ncc

#endif  // NCC_CECH_HPP
