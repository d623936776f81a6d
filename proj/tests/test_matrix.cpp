#include "resnil/error.hpp"
#include "resnil/matrix.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace resnil;
using testsupport::cofactor_det;
using testsupport::random_matrix;
using testsupport::random_unimodular;

TEST(Matrix, ParseAndPrint) {
  IntMatrix m = parse_matrix(" [[0, 1], [1,3]] ");
  EXPECT_EQ(m, (IntMatrix{{0, 1}, {1, 3}}));
  EXPECT_EQ(m.to_string(), "[[0,1],[1,3]]");
  EXPECT_EQ(parse_matrix("[[-12345678901234567890]]")(0, 0), Int("-12345678901234567890"));
  for (const char* bad : {"", "[[1,2],[3]]", "[[1,2]", "[1,2]", "[[a]]", "[[1,2]]x", "[[]]"})
    EXPECT_THROW(parse_matrix(bad), Error) << bad;
}

TEST(Matrix, DeterminantTraceCharPoly) {
  IntMatrix m{{0, 1}, {1, 3}};
  EXPECT_EQ(determinant(m), -1);
  EXPECT_EQ(trace(m), 3);
  EXPECT_EQ(char_poly(m), (IntPoly{-1, -3, 1}));
  EXPECT_EQ(char_poly(IntMatrix::identity(3)), pow(IntPoly{-1, 1}, 3));
  EXPECT_THROW(determinant(IntMatrix(2, 3)), Error);
  EXPECT_TRUE(is_unimodular(m));
  EXPECT_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
}

TEST(Matrix, PowersAndReduction) {
  IntMatrix m{{0, 1}, {1, 3}};
  EXPECT_EQ(matrix_power(m, 2), (IntMatrix{{1, 3}, {3, 10}}));
  EXPECT_EQ(matrix_power(m, 0), IntMatrix::identity(2));
  EXPECT_EQ(reduce_mod(IntMatrix{{-1, 4}, {7, -9}}, Int(3)), (IntMatrix{{2, 1}, {1, 0}}));
}

TEST(Matrix, KroneckerAndCompound) {
  IntMatrix a{{1, 2}, {3, 4}}, b{{0, 5}, {6, 7}};
  IntMatrix k = kronecker_product(a, b);
  EXPECT_EQ(k.rows(), 4u);
  EXPECT_EQ(k(1, 3), 2 * 7);
  EXPECT_EQ(k(2, 1), 3 * 5);
  EXPECT_EQ(kronecker_power(a, 1), a);
  EXPECT_THROW(kronecker_power(a, 13), Error);
  EXPECT_EQ(k_subsets(4, 2).size(), 6u);
  EXPECT_EQ(compound_matrix(a, 2), (IntMatrix{{-2}}));
  EXPECT_EQ(compound_matrix(a, 1), a);
  EXPECT_THROW(compound_matrix(a, 3), Error);
}

TEST(MatrixProperty, BareissMatchesCofactorExpansion) {
  std::mt19937_64 rng(1);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t n = static_cast<std::size_t>(testsupport::uniform(rng, 1, 5));
    IntMatrix m = random_matrix(rng, n, n, 9);
    if (iter % 5 == 0 && n > 1)
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j);  // force singular
    EXPECT_EQ(determinant(m), cofactor_det(m)) << m.to_string();
  }
}

// char_poly(m) evaluated at t equals det(tI - m).
TEST(MatrixProperty, CharPolyMatchesShiftedDeterminant) {
  std::mt19937_64 rng(2);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t n = static_cast<std::size_t>(testsupport::uniform(rng, 1, 5));
    IntMatrix m = random_matrix(rng, n, n, 20);
    IntPoly c = char_poly(m);
    ASSERT_EQ(c.degree(), static_cast<int>(n));
    for (long t = -3; t <= 3; ++t) {
      IntMatrix s = Int(t) * IntMatrix::identity(n) - m;
      EXPECT_EQ(poly_eval(c, Int(t)), cofactor_det(s));
    }
  }
}

TEST(MatrixProperty, MixedProductAndCauchyBinet) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 50; ++iter) {
    IntMatrix a = random_matrix(rng, 3, 3, 4), b = random_matrix(rng, 3, 3, 4);
    IntMatrix c = random_matrix(rng, 2, 2, 4), d = random_matrix(rng, 2, 2, 4);
    EXPECT_EQ(kronecker_product(a * b, c * d), kronecker_product(a, c) * kronecker_product(b, d));
    for (std::size_t k = 1; k <= 3; ++k)
      EXPECT_EQ(compound_matrix(a * b, k), compound_matrix(a, k) * compound_matrix(b, k));
    EXPECT_EQ(compound_matrix(a, 3)(0, 0), determinant(a));
  }
}

TEST(MatrixProperty, UnimodularGeneratorAndTensorDeterminant) {
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 40; ++iter) {
    IntMatrix a = random_unimodular(rng, 2, 6);
    ASSERT_TRUE(is_unimodular(a));
    IntMatrix k3 = kronecker_power(a, 3);
    EXPECT_EQ(trace(k3), pow_int(trace(a), 3));
    EXPECT_TRUE(is_unimodular(k3));
  }
}
