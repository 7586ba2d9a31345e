#include <gtest/gtest.h>

#include "generators.hpp"

using namespace ncc;
namespace cat = ncc::catalog;

namespace {

template <typename K>
std::size_t pairwise_sum(const Covering<K>& c) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) total += i == j ? c.patch_dim(i) : c.overlap(i, j)->dim();
  return total;
}

template <typename K>
bool all_zero(const std::vector<std::size_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::size_t x) { return x == 0; });
}

}  // namespace

TEST(Surjections, SmallValues) {
  EXPECT_EQ(surjection_count(3, 2), 6.0);
  EXPECT_EQ(surjection_count(4, 2), 14.0);
  EXPECT_EQ(surjection_count(3, 3), 6.0);
  EXPECT_EQ(surjection_count(2, 3), 0.0);
  EXPECT_EQ(surjection_count(5, 1), 1.0);
}

TEST(Tensor, E1Dimensions) {
  RationalField q;
  auto c = cat::e1(q);
  TensorTower<RationalField> t(c, 5);
  const std::vector<std::size_t> expected = {4, 6, 10, 18, 34};
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(t.dim(n), expected[n - 1]);
    EXPECT_EQ(static_cast<double>(t.dim(n)), block_formula_dim(c, n));
  }
  EXPECT_EQ(t.dim(2), pairwise_sum(c));
}

TEST(Tensor, GenericQuotientAgreesWithTower) {
  RationalField q;
  for (auto c : {cat::e1(q), cat::three_lines(q)}) {
    auto b = extension_bimodule(c);
    EXPECT_EQ(b.check(), "");
    auto bb = tensor_over_A(b, b);
    TensorTower<RationalField> t(c, 3);
    EXPECT_EQ(bb.module.dim(), t.dim(2));
    EXPECT_EQ(bb.projection, t.projection_matrix(2));
    EXPECT_EQ(bb.module.check(), "");
    auto bbb = tensor_over_A(bb.module, b);
    EXPECT_EQ(bbb.module.dim(), t.dim(3));
  }
}

TEST(Tensor, BimoduleRejectsBadAction) {
  RationalField q;
  auto a = cat::split(q, 2);
  auto id = Matrix<RationalField>::identity(q, 1);
  // both basis idempotents acting as the identity violate e1 e2 = 0
  EXPECT_THROW(Bimodule<RationalField>::make(a, 1, {id, id}, {id, id}, "bad"), AxiomViolation);
}

TEST(Tensor, CapIsEnforced) {
  RationalField q;
  EXPECT_THROW(TensorTower<RationalField>(cat::e1(q), 5, 20), SizeCapExceeded);
  try {
    TensorTower<RationalField>(cat::e1(q), 5, 20);
  } catch (const SizeCapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("degree 4"), std::string::npos);
  }
}

TEST(Coring, LawsOnExamples) {
  RationalField q;
  for (auto c : {cat::e1(q), cat::e4(q), cat::three_lines(q)}) {
    TensorTower<RationalField> t(c, 4);
    auto r = check_coring(t, build_coring(t));
    EXPECT_TRUE(r.coassociative);
    EXPECT_TRUE(r.left_counit);
    EXPECT_TRUE(r.right_counit);
    EXPECT_TRUE(r.coproduct_on_e);
    EXPECT_TRUE(r.counit_on_e);
  }
}

TEST(Coring, NeedsEnoughLevels) {
  RationalField q;
  TensorTower<RationalField> t(cat::e1(q), 3);
  auto coring = build_coring(t);
  EXPECT_THROW(check_coring(t, coring), DimensionMismatch);
}

TEST(Amitsur, CompleteCoveringsAreAcyclic) {
  RationalField q;
  for (auto c : {cat::e1(q), cat::e4(q)}) {
    TensorTower<RationalField> t(c, 5);
    auto cx = build_amitsur(t, 3);
    auto h = amitsur_homology(cx, true);
    EXPECT_EQ(h.size(), 4u);
    EXPECT_TRUE(all_zero<RationalField>(h));
    EXPECT_EQ(augmentation_kernel_dim(cx), 0u);
  }
}

TEST(Amitsur, UnaugmentedDegreeZeroIsA) {
  RationalField q;
  TensorTower<RationalField> t(cat::e1(q), 4);
  auto h = amitsur_homology(build_amitsur(t, 2), false);
  EXPECT_EQ(h, (std::vector<std::size_t>{3, 0, 0}));
}

TEST(Amitsur, IncompleteCoveringHasDegreeZeroDefect) {
  RationalField q;
  TensorTower<RationalField> t(cat::three_lines(q), 4);
  auto h = amitsur_homology(build_amitsur(t, 2), true);
  EXPECT_EQ(h[0], 1u);
}

TEST(Amitsur, ArgumentChecks) {
  RationalField q;
  TensorTower<RationalField> t(cat::e1(q), 3);
  EXPECT_THROW(build_amitsur(t, 0), DimensionMismatch);
  EXPECT_THROW(build_amitsur(t, 2), DimensionMismatch);
}

template <typename K>
void amitsur_properties(const K& k, std::uint64_t seed) {
  gen::Rng rng(seed);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = gen::covering(k, rng);
    TensorTower<K> t(c, 4, 5000);
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(static_cast<double>(t.dim(n)), block_formula_dim(c, n));
    EXPECT_EQ(t.dim(2), pairwise_sum(c));
    EXPECT_EQ(tensor_over_A(extension_bimodule(c), extension_bimodule(c)).module.dim(), pairwise_sum(c));
    auto cx = build_amitsur(t, 2);
    EXPECT_TRUE((cx.differentials[0] * cx.augmentation).is_zero());
    for (std::size_t n = 0; n + 1 < cx.differentials.size(); ++n)
      EXPECT_TRUE((cx.differentials[n + 1] * cx.differentials[n]).is_zero());
    EXPECT_TRUE(check_coring(t, build_coring(t)).ok());
    if (completeness_check(c).complete) EXPECT_TRUE(all_zero<K>(amitsur_homology(cx, true)));
  }
}

TEST(Properties, RationalAmitsur) { amitsur_properties(RationalField{}, 41); }
TEST(Properties, F5Amitsur) { amitsur_properties(PrimeField(5), 42); }
