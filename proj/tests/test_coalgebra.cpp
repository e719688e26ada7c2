#include <gtest/gtest.h>

#include "coringlab/fixtures.hpp"

using namespace coringlab;

namespace {
const Field kQ = Field::rationals();
}

TEST(Coalgebra, BuiltinsSatisfyAxioms) {
  EXPECT_TRUE(verify_coalgebra(Coalgebra::ground(kQ)).ok());
  EXPECT_TRUE(verify_coalgebra(cyclic_group_coalgebra(kQ, 4)).ok());
  EXPECT_TRUE(verify_coalgebra(sweedler_coalgebra(kQ)).ok());
  EXPECT_TRUE(verify_bialgebra(*sweedler_algebra(kQ), sweedler_coalgebra(kQ)).ok());
  EXPECT_TRUE(verify_bialgebra(*cyclic_group_algebra(kQ, 3), cyclic_group_coalgebra(kQ, 3)).ok());
}

TEST(Coalgebra, SweedlerAntipodeIsConvolutionInverse) {
  AlgebraPtr h = sweedler_algebra(kQ);
  Coalgebra hc = sweedler_coalgebra(kQ);
  Matrix id = Matrix::identity(kQ, 4);
  auto s = convolution_inverse(id, *h, hc);
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, sweedler_antipode(kQ));
  EXPECT_EQ(convolution(id, *s, *h, hc), convolution_unit(*h, hc));
  EXPECT_EQ(convolution(*s, id, *h, hc), convolution_unit(*h, hc));
}

TEST(Coalgebra, ConvolutionOperatorsMatchProduct) {
  AlgebraPtr h = sweedler_algebra(kQ);
  Coalgebra hc = sweedler_coalgebra(kQ);
  Matrix f = sweedler_antipode(kQ);
  Matrix g = Matrix::identity(kQ, 4) + f;
  EXPECT_EQ(left_convolution_operator(f, *h, hc) * vec(g), vec(convolution(f, g, *h, hc)));
  EXPECT_EQ(right_convolution_operator(f, *h, hc) * vec(g), vec(convolution(g, f, *h, hc)));
  EXPECT_EQ(convolution(convolution_unit(*h, hc), g, *h, hc), g);
}

TEST(Coalgebra, NonInvertibleUnderConvolution) {
  AlgebraPtr h = sweedler_algebra(kQ);
  Coalgebra hc = sweedler_coalgebra(kQ);
  EXPECT_FALSE(convolution_inverse(Matrix(kQ, 4, 4), *h, hc));
}

TEST(Coalgebra, GroupLikes) {
  Coalgebra hc = sweedler_coalgebra(kQ);
  EXPECT_TRUE(is_grouplike(hc, unit_vector(kQ, 4, 0)));
  EXPECT_TRUE(is_grouplike(hc, unit_vector(kQ, 4, 1)));
  EXPECT_FALSE(is_grouplike(hc, unit_vector(kQ, 4, 2)));
  EXPECT_FALSE(is_grouplike(hc, add(unit_vector(kQ, 4, 0), unit_vector(kQ, 4, 1))));
}
