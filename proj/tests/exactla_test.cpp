#include <gtest/gtest.h>

#include "generators.hpp"
#include "ncc/exactla.hpp"

using namespace ncc;

TEST(Field, RationalArithmetic) {
  RationalField q;
  auto a = q.from_string("3/4"), b = q.from_string("-1/6");
  EXPECT_EQ(q.to_string(q.add(a, b)), "7/12");
  EXPECT_EQ(q.to_string(q.mul(a, b)), "-1/8");
  EXPECT_EQ(q.to_string(q.div(a, b)), "-9/2");
  EXPECT_TRUE(q.equal(q.mul(a, q.inv(a)), q.one()));
  EXPECT_THROW(q.inv(q.zero()), DivisionByZero);
  EXPECT_THROW(q.from_string("1/0"), DivisionByZero);
  EXPECT_THROW(q.from_string("x"), Error);
}

TEST(Field, PrimeArithmetic) {
  PrimeField f(5);
  EXPECT_EQ(f.from_string("1/2"), 3u);
  EXPECT_EQ(f.from_string("-1"), 4u);
  EXPECT_EQ(f.from_int(-7), 3u);
  for (std::uint32_t a = 1; a < 5; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_THROW(f.inv(0), DivisionByZero);
  EXPECT_THROW(f.from_string("1/5"), Error);
  EXPECT_THROW(PrimeField(6), Error);
  EXPECT_THROW(PrimeField(1), Error);
  EXPECT_EQ(PrimeField(2147483647).characteristic(), 2147483647u);
}

TEST(Field, LargePrimeDoesNotOverflow) {
  PrimeField f(2147483629);
  auto a = f.from_int(2147483628);
  EXPECT_EQ(f.mul(a, a), 1u);
  EXPECT_EQ(f.add(a, a), 2147483627u);
}

TEST(Matrix, MixedFieldsRejected) {
  Matrix<PrimeField> a(PrimeField(5), 2, 2), b(PrimeField(7), 2, 2);
  EXPECT_THROW(a + b, FieldMismatch);
  EXPECT_THROW(a * b, FieldMismatch);
}

TEST(Matrix, ShapeErrors) {
  RationalField q;
  Matrix<RationalField> a(q, 2, 3), b(q, 2, 3);
  EXPECT_THROW(a * b, DimensionMismatch);
  EXPECT_NO_THROW(a + b);
}

TEST(Rref, KnownReduction) {
  RationalField q;
  auto m = Matrix<RationalField>::from_rows(q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  auto r = rref(m);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.reduced, Matrix<RationalField>::from_rows(q, {{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
}

TEST(Subspace, KernelImageAndQuotient) {
  RationalField q;
  auto m = Matrix<RationalField>::from_rows(q, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  auto ker = kernel_basis(m);
  EXPECT_EQ(ker.dim(), 2u);
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    auto v = m.apply(ker.basis_vector(i));
    for (auto& x : v) EXPECT_TRUE(q.is_zero(x));
  }
  auto qd = quotient_data(4, ker);
  EXPECT_EQ(qd.projection.rows(), 2u);
  EXPECT_EQ(qd.projection * qd.section, Matrix<RationalField>::identity(q, 2));
  EXPECT_TRUE((qd.projection * ker.basis().transpose()).is_zero());
}

TEST(Subspace, ZeroAndFullEdgeCases) {
  RationalField q;
  auto z = Subspace<RationalField>::zero(q, 3);
  auto f = Subspace<RationalField>::full(q, 3);
  EXPECT_EQ(quotient_data(3, z).projection, Matrix<RationalField>::identity(q, 3));
  EXPECT_EQ(quotient_data(3, f).projection.rows(), 0u);
  EXPECT_TRUE(f.contains(z));
  EXPECT_FALSE(z.contains(f));
  EXPECT_EQ(subspace_intersect(z, f), z);
  EXPECT_EQ(subspace_sum(z, f), f);
}

TEST(Homology, DetectsNonComplex) {
  RationalField q;
  auto id = Matrix<RationalField>::identity(q, 2);
  EXPECT_THROW(homology_dim(id, id, 1), NotAComplex);
  Matrix<RationalField> zero_in(q, 2, 0), zero_out(q, 0, 2);
  EXPECT_EQ(homology_dim(zero_in, zero_out), 2u);
}

template <typename K>
void linear_algebra_properties(const K& k, std::uint64_t seed) {
  gen::Rng rng(seed);
  for (int trial = 0; trial < 60; ++trial) {
    auto rows = static_cast<std::size_t>(gen::small_int(rng, 0, 6));
    auto cols = static_cast<std::size_t>(gen::small_int(rng, 0, 6));
    auto m = gen::matrix(k, rng, rows, cols);
    const auto r = rank(m);
    EXPECT_EQ(r, rank(m.transpose()));
    EXPECT_EQ(kernel_basis(m).dim() + r, cols);
    EXPECT_EQ(image_basis(m).dim(), r);

    auto u = Subspace<K>::span(gen::matrix(k, rng, static_cast<std::size_t>(gen::small_int(rng, 0, 4)), 5));
    auto v = Subspace<K>::span(gen::matrix(k, rng, static_cast<std::size_t>(gen::small_int(rng, 0, 4)), 5));
    EXPECT_EQ(subspace_sum(u, v).dim() + subspace_intersect(u, v).dim(), u.dim() + v.dim());
    EXPECT_TRUE(subspace_sum(u, v).contains(u));
    EXPECT_TRUE(u.contains(subspace_intersect(u, v)));

    // the quotient depends only on the subspace, not on its spanning set
    auto extra = gen::matrix(k, rng, 2, u.dim());
    auto respan = Subspace<K>::span(Matrix<K>::vstack(u.basis(), extra * u.basis()));
    EXPECT_EQ(respan, u);
    EXPECT_EQ(quotient_data(5, respan).projection, quotient_data(5, u).projection);
  }
}

TEST(Properties, RationalLinearAlgebra) { linear_algebra_properties(RationalField{}, 11); }
TEST(Properties, F5LinearAlgebra) { linear_algebra_properties(PrimeField(5), 12); }
TEST(Properties, F2LinearAlgebra) { linear_algebra_properties(PrimeField(2), 13); }
