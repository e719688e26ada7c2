#include <gtest/gtest.h>

#include <random>

#include "coringlab/fixtures.hpp"
#include "support.hpp"

using namespace coringlab;

namespace {

const Field kQ = Field::rationals();

AlgebraPtr dual_numbers() { return truncated_polynomial(kQ, 2, Scalar::zero(kQ)); }

/// k = A/(t) as a module over k[t]/(t^2).
Module residue_module(AlgebraPtr a, Side side) {
  Module m{a, side, 1, {Matrix::identity(kQ, 1), Matrix(kQ, 1, 1)}};
  return m;
}

}  // namespace

TEST(Algebra, BuiltinsSatisfyAxioms) {
  EXPECT_TRUE(verify_algebra(*sweedler_algebra(kQ)).ok());
  EXPECT_TRUE(verify_algebra(*cyclic_group_algebra(kQ, 4)).ok());
  EXPECT_TRUE(verify_algebra(*truncated_polynomial(kQ, 3, Scalar::from_int(kQ, -2))).ok());
  EXPECT_TRUE(verify_algebra(*cyclic_group_algebra(Field::prime(5), 3)).ok());
  EXPECT_TRUE(verify_algebra(sweedler_algebra(kQ)->opposite()).ok());
}

TEST(Algebra, ReportsNamedViolations) {
  AlgebraPtr hp = sweedler_algebra(kQ);
  const Algebra& h = *hp;
  std::vector<Vector> products;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) products.push_back(h.product(i, j));
  Algebra bad(kQ, 4, products, zero_vector(kQ, 4));
  Verdict v = verify_algebra(bad);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.failures.front().rfind("left unit", 0), 0U);
}

TEST(Algebra, SubalgebraOfInvariants) {
  AlgebraPtr a = cyclic_group_algebra(kQ, 4);
  Subspace even = Subspace::span(kQ, 4, {unit_vector(kQ, 4, 0), unit_vector(kQ, 4, 2)});
  auto sub = induced_subalgebra(*a, even);
  ASSERT_TRUE(sub);
  EXPECT_EQ(sub->dim(), 2U);
  EXPECT_TRUE(verify_algebra(*sub).ok());
  Subspace odd = Subspace::span(kQ, 4, {unit_vector(kQ, 4, 1)});
  EXPECT_FALSE(induced_subalgebra(*a, odd));
}

TEST(Algebra, GeneratorsGenerate) {
  AlgebraPtr h = sweedler_algebra(kQ);
  auto gens = algebra_generators(*h);
  EXPECT_LE(gens.size(), 2U);
  Module reg = regular_module(h, Side::Left);
  EXPECT_TRUE(generated_submodule(reg, {h->unit()}).is_full());
}

TEST(Modules, BalancedTensorMatchesNaive) {
  std::mt19937_64 rng(11);
  for (AlgebraPtr a : {sweedler_algebra(kQ), dual_numbers(), cyclic_group_algebra(kQ, 3)}) {
    std::vector<Module> rights{regular_module(a, Side::Right), free_module(a, Side::Right, 2)};
    std::vector<Module> lefts{regular_module(a, Side::Left), free_module(a, Side::Left, 2)};
    if (a->dim() == 2) {
      rights.push_back(residue_module(a, Side::Right));
      lefts.push_back(residue_module(a, Side::Left));
    }
    for (const auto& m : rights) {
      ASSERT_TRUE(verify_module(m).ok());
      for (const auto& n : lefts) {
        ASSERT_TRUE(verify_module(n).ok());
        TensorProduct fast = balanced_tensor(m, n);
        TensorProduct naive = balanced_tensor_naive(m, n);
        EXPECT_EQ(fast.dim(), naive.dim());
        EXPECT_EQ(fast.relations(), naive.relations());
        EXPECT_TRUE((fast.projection * fast.section).is_identity());
      }
    }
  }
}

TEST(Modules, TensorWithRegularIsIdentity) {
  AlgebraPtr h = sweedler_algebra(kQ);
  Module m = free_module(h, Side::Right, 2);
  EXPECT_EQ(balanced_tensor(m, regular_module(h, Side::Left)).dim(), 8U);
}

TEST(Modules, DualNumbersResidueTensor) {
  AlgebraPtr a = dual_numbers();
  EXPECT_EQ(balanced_tensor(residue_module(a, Side::Right), residue_module(a, Side::Left)).dim(), 1U);
  EXPECT_EQ(balanced_tensor(residue_module(a, Side::Right), regular_module(a, Side::Left)).dim(), 1U);
}

TEST(Modules, HomSpaces) {
  AlgebraPtr h = sweedler_algebra(kQ);
  Module reg = regular_module(h, Side::Right);
  Subspace end = hom_module(reg, reg);
  EXPECT_EQ(end.dim(), 4U);
  for (const auto& f : hom_basis(reg, reg)) {
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(f * reg.action[i], reg.action[i] * f);
  }
  AlgebraPtr a = dual_numbers();
  EXPECT_EQ(hom_module(residue_module(a, Side::Right), regular_module(a, Side::Right)).dim(), 1U);
  EXPECT_EQ(hom_module(regular_module(a, Side::Right), residue_module(a, Side::Right)).dim(), 1U);
}

TEST(Modules, ProjectivityAndGenerators) {
  AlgebraPtr a = dual_numbers();
  Module reg = regular_module(a, Side::Right);
  auto p = is_fg_projective(reg);
  EXPECT_TRUE(p.projective);
  ASSERT_TRUE(p.splitting);
  EXPECT_TRUE((generator_map(reg, module_generators(reg)) * *p.splitting).is_identity());
  EXPECT_TRUE(is_generator(reg));
  EXPECT_TRUE(is_faithful(reg));

  Module k = residue_module(a, Side::Right);
  EXPECT_FALSE(is_fg_projective(k).projective);
  EXPECT_FALSE(is_generator(k));
  EXPECT_FALSE(is_faithful(k));
  EXPECT_EQ(annihilator(k).dim(), 1U);

  Module sum = direct_sum(reg, k);
  EXPECT_FALSE(is_fg_projective(sum).projective);
  EXPECT_TRUE(is_generator(sum));
}

TEST(Modules, SemisimpleModulesAreProjective) {
  AlgebraPtr a = cyclic_group_algebra(kQ, 2);
  Module triv{a, Side::Right, 1, {Matrix::identity(kQ, 1), Matrix::identity(kQ, 1)}};
  ASSERT_TRUE(verify_module(triv).ok());
  EXPECT_TRUE(is_fg_projective(triv).projective);
  EXPECT_FALSE(is_generator(triv));
  EXPECT_FALSE(is_faithful(triv));
}

TEST(Modules, VecRoundTrip) {
  std::mt19937_64 rng(12);
  Matrix m = coringlab::testing::random_matrix(kQ, 3, 5, rng);
  EXPECT_EQ(unvec(kQ, 3, 5, vec(m)), m);
  EXPECT_EQ(vec(m)[1 * 5 + 2], m(1, 2));
}
