#include <gtest/gtest.h>

#include "generators.hpp"

using namespace ncc;
namespace cat = ncc::catalog;

TEST(Algebra, MatrixUnitsMultiply) {
  RationalField q;
  auto m2 = cat::matrix_algebra(q, 2);
  // e12 * e21 = e11, e21 * e12 = e22
  EXPECT_EQ(m2->multiply(m2->basis_vector(1), m2->basis_vector(2)), m2->basis_vector(0));
  EXPECT_EQ(m2->multiply(m2->basis_vector(2), m2->basis_vector(1)), m2->basis_vector(3));
  EXPECT_EQ(m2->multiply(m2->basis_vector(1), m2->basis_vector(1)), m2->zero_vector());
}

TEST(Algebra, RejectsNonAssociative) {
  RationalField q;
  std::vector<StructureConstant<RationalField>> sc = {{0, 0, 0, q.one()}, {1, 1, 1, q.one()}, {0, 1, 0, q.one()}};
  try {
    make_algebra(q, 2, sc, Vec<RationalField>{q.one(), q.one()}, {"a", "b"});
    FAIL() << "expected AxiomViolation";
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "associativity");
    EXPECT_NE(e.witness().find("(0, 1, 0)"), std::string::npos);
  }
}

TEST(Algebra, RejectsWrongUnit) {
  RationalField q;
  std::vector<StructureConstant<RationalField>> sc = {{0, 0, 0, q.one()}, {1, 1, 1, q.one()}};
  EXPECT_THROW(make_algebra(q, 2, sc, Vec<RationalField>{q.one(), q.zero()}), AxiomViolation);
  EXPECT_THROW(make_algebra(q, 2, sc, Vec<RationalField>{q.one()}), DimensionMismatch);
  sc.push_back({2, 0, 0, q.one()});
  EXPECT_THROW(make_algebra(q, 2, sc, Vec<RationalField>{q.one(), q.one()}), DimensionMismatch);
}

TEST(Algebra, ZeroAlgebra) {
  RationalField q;
  auto z = Algebra<RationalField>::zero(q);
  EXPECT_EQ(z->dim(), 0u);
  EXPECT_TRUE(z->unit().empty());
}

TEST(Ideal, ClosureOfMatrixUnitIsEverything) {
  RationalField q;
  auto m2 = cat::matrix_algebra(q, 2);
  EXPECT_EQ(ideal_closure(m2, {m2->basis_vector(1)}).dim(), 4u);
  EXPECT_EQ(ideal_closure(m2, {}).dim(), 0u);
}

TEST(Ideal, UpperTriangularIdeals) {
  RationalField q;
  auto t = cat::upper_triangular(q);
  auto j = ideal_closure(t, {t->basis_vector(1)});  // strictly upper part
  EXPECT_EQ(j.dim(), 1u);
  auto quo = quotient(t, j);
  EXPECT_EQ(quo.algebra->dim(), 2u);
  EXPECT_TRUE(hom_check(quo.projection).ok);
  EXPECT_EQ(ideal_closure(t, {t->basis_vector(0)}).dim(), 2u);  // e11, e12
}

TEST(Ideal, RejectsNonIdealSubspace) {
  RationalField q;
  auto m2 = cat::matrix_algebra(q, 2);
  EXPECT_THROW(Ideal<RationalField>(m2, Subspace<RationalField>::span(q, 4, {m2->basis_vector(0)})), AxiomViolation);
}

TEST(Quotient, KeepsLabelsAndDims) {
  RationalField q;
  auto a = cat::split(q, 3);
  auto quo = quotient(a, ideal_closure(a, {a->basis_vector(2)}));
  EXPECT_EQ(quo.algebra->dim(), 2u);
  EXPECT_EQ(quo.algebra->label(0), "e1");
  EXPECT_EQ(quo.algebra->label(1), "e2");
  auto whole = quotient(a, Ideal<RationalField>::whole(a));
  EXPECT_EQ(whole.algebra->dim(), 0u);
  EXPECT_TRUE(hom_check(whole.projection).ok);
}

TEST(Hom, WitnessForNonUnital) {
  RationalField q;
  auto a = cat::split(q, 2);
  auto bad = Matrix<RationalField>::from_rows(q, {{1, 0}, {0, 0}});
  auto r = check_hom(*a, *a, bad);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.axiom, "unit");
  EXPECT_THROW(AlgebraHom<RationalField>::make(a, a, bad), AxiomViolation);
}

TEST(Hom, WitnessForNonMultiplicative) {
  RationalField q;
  auto a = cat::truncated_polynomial(q, 3);
  // 1 -> 1, x -> x, x^2 -> 0 is linear and unital but not multiplicative
  auto bad = Matrix<RationalField>::from_rows(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  auto r = check_hom(*a, *a, bad);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.axiom, "multiplicativity");
}

TEST(Hom, ComposeChecksDomains) {
  RationalField q;
  auto a = cat::split(q, 3);
  auto i1 = ideal_closure(a, {a->basis_vector(2)});
  auto i2 = ideal_closure(a, {a->basis_vector(1), a->basis_vector(2)});
  auto q1 = quotient(a, i1);
  auto q2 = quotient(a, i2);
  auto step = AlgebraHom<RationalField>::make(q1.algebra, q2.algebra, q2.projection.matrix() * q1.section);
  auto composite = hom_compose(step, q1.projection);
  EXPECT_EQ(composite.matrix(), q2.projection.matrix());
  EXPECT_THROW(hom_compose(q1.projection, q2.projection), DimensionMismatch);
}

TEST(DirectSum, BlockUnit) {
  RationalField q;
  auto s = direct_sum(q, {cat::matrix_algebra(q, 2), cat::split(q, 1)});
  EXPECT_EQ(s->dim(), 5u);
  EXPECT_EQ(s->unit(), (Vec<RationalField>{q.one(), q.zero(), q.zero(), q.one(), q.one()}));
}

template <typename K>
void ideal_properties(const K& k, std::uint64_t seed) {
  gen::Rng rng(seed);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = gen::algebra(k, rng);
    auto i = gen::ideal(a, rng);
    auto j = gen::ideal(a, rng);
    // closure is idempotent and the result is two-sided
    std::vector<Vec<K>> basis;
    for (std::size_t r = 0; r < i.dim(); ++r) basis.push_back(i.space().basis_vector(r));
    EXPECT_EQ(ideal_closure(a, basis), i);
    EXPECT_NO_THROW(Ideal<K>(a, ideal_intersection(std::vector<Ideal<K>>{i, j})));
    auto s = ideal_sum(i, j);
    EXPECT_TRUE(s.space().contains(i.space()));
    EXPECT_TRUE(s.space().contains(j.space()));
    // quotient projection is a surjective unital homomorphism with kernel I
    auto quo = quotient(a, i);
    EXPECT_TRUE(hom_check(quo.projection).ok);
    EXPECT_EQ(quo.algebra->dim() + i.dim(), a->dim());
    EXPECT_EQ(kernel_basis(quo.projection.matrix()), i.space());
    EXPECT_EQ(quo.projection.matrix() * quo.section, Matrix<K>::identity(k, quo.algebra->dim()));
  }
}

TEST(Properties, RationalIdeals) { ideal_properties(RationalField{}, 21); }
TEST(Properties, F5Ideals) { ideal_properties(PrimeField(5), 22); }
