#include "resnil/error.hpp"
#include "resnil/intpoly.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace resnil;
using testsupport::kronecker_factorization;
using testsupport::random_poly;

TEST(IntPoly, Normalization) {
  IntPoly p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE((IntPoly{0, 0}).is_zero());
  EXPECT_EQ(IntPoly().degree(), -1);
  EXPECT_EQ((IntPoly{-1, -3, 1}).to_string(), "x^2 - 3*x - 1");
  EXPECT_EQ((IntPoly{1, 0, -2}).to_string(), "-2*x^2 + 1");
}

TEST(IntPoly, ArithmeticAndEval) {
  IntPoly a{1, 1}, b{-1, 1};
  EXPECT_EQ(a * b, (IntPoly{-1, 0, 1}));
  EXPECT_EQ(pow(a, 3), (IntPoly{1, 3, 3, 1}));
  EXPECT_EQ(poly_eval(IntPoly{-1, -3, 1}, Int(1)), -3);
  EXPECT_EQ(a - a, IntPoly());
  EXPECT_EQ((IntPoly{6, 4, 2}).content(), 2);
  EXPECT_EQ((IntPoly{-6, 4, -2}).primitive_part(), (IntPoly{3, -2, 1}));
}

TEST(IntPoly, DivisionAndGcd) {
  IntPoly f = IntPoly{-1, 1} * IntPoly{2, 0, 1};
  auto [q, r] = divmod_monic(f, IntPoly{-1, 1});
  EXPECT_EQ(q, (IntPoly{2, 0, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_FALSE(exact_divide(IntPoly{1, 0, 1}, IntPoly{0, 2}).has_value());
  EXPECT_EQ(gcd(IntPoly{-1, 0, 1}, IntPoly{1, 2, 1}), (IntPoly{1, 1}));
}

TEST(IntPoly, SquarefreeDecomposition) {
  IntPoly f = pow(IntPoly{-1, 1}, 3) * IntPoly{1, 0, 1} * pow(IntPoly{1, 1}, 2);
  auto sq = squarefree_decomposition(f);
  IntPoly back = IntPoly::constant(1);
  for (const auto& [g, m] : sq) back *= pow(g, m);
  EXPECT_EQ(back, f);
  EXPECT_THROW(squarefree_decomposition(IntPoly()), Error);
}

TEST(IntPoly, KnownFactorizations) {
  // x^4 + 1 is irreducible over Z but splits modulo every prime.
  auto fz = factor_over_Z(IntPoly{1, 0, 0, 0, 1});
  ASSERT_EQ(fz.factors.size(), 1u);
  EXPECT_EQ(fz.factors[0].first, (IntPoly{1, 0, 0, 0, 1}));

  // Swinnerton-Dyer type x^4 - 10x^2 + 1.
  EXPECT_EQ(factor_over_Z(IntPoly{1, 0, -10, 0, 1}).factors.size(), 1u);

  auto g = factor_over_Z(IntPoly{-6, 0, 6});  // 6(x-1)(x+1)
  EXPECT_EQ(g.content, 6);
  ASSERT_EQ(g.factors.size(), 2u);
  EXPECT_EQ(g.expand(), (IntPoly{-6, 0, 6}));

  // char poly of the tensor square of [[0,1],[1,3]].
  auto cf = factor_over_Z(IntPoly{1, -11, 1} * pow(IntPoly{1, 1}, 2));
  ASSERT_EQ(cf.factors.size(), 2u);
  EXPECT_EQ(cf.factors[0], std::make_pair(IntPoly{1, 1}, 2u));
}

TEST(IntPoly, LargeDegreeFactorization) {
  // Product of cyclotomic-like and random factors of total degree 24.
  IntPoly f = IntPoly{1, 1, 1} * IntPoly{-1, 0, 0, 0, 0, 1} * IntPoly{3, -7, 0, 2} * pow(IntPoly{1, -4, 1}, 2) *
              IntPoly{-5, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1} * IntPoly{2, 0, 1};
  auto fz = factor_over_Z(f);
  EXPECT_EQ(fz.expand(), f);
  for (const auto& [g, m] : fz.factors) EXPECT_EQ(factor_over_Z(g).factors.size(), 1u) << g.to_string();
}

TEST(IntPoly, LinearRootProfile) {
  auto prof = linear_root_profile(pow(IntPoly{-1, 1}, 2) * IntPoly{1, 1} * IntPoly{-1, -3, 1});
  EXPECT_EQ(prof.multiplicity_one, 2u);
  EXPECT_EQ(prof.multiplicity_minus_one, 1u);
  EXPECT_EQ(prof.residual, (IntPoly{-1, -3, 1}));
  EXPECT_THROW(linear_root_profile(IntPoly{1, 2}), Error);
}

// Property: the factorization multiplies back, factors are irreducible by the
// Kronecker reference, and the factor multisets agree.
TEST(IntPolyProperty, FactorizationMatchesKroneckerOracle) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 150; ++iter) {
    IntPoly f = random_poly(rng, 4, 50);
    if (f.degree() < 1) continue;
    auto fz = factor_over_Z(f);
    ASSERT_EQ(fz.expand(), f) << f.to_string();
    std::map<std::vector<Int>, unsigned> got;
    for (const auto& [g, m] : fz.factors) got[g.coeffs()] += m;
    EXPECT_EQ(got, kronecker_factorization(f)) << f.to_string();
  }
}

TEST(IntPolyProperty, ProductsOfKnownFactorsRefactor) {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 60; ++iter) {
    IntPoly f = IntPoly::constant(1);
    int parts = static_cast<int>(testsupport::uniform(rng, 1, 4));
    for (int i = 0; i < parts; ++i) {
      IntPoly g = random_poly(rng, 3, 6);
      if (g.degree() < 1) g = IntPoly{testsupport::uniform(rng, -3, 3), 1};
      f *= g;
    }
    auto fz = factor_over_Z(f);
    EXPECT_EQ(fz.expand(), f) << f.to_string();
    for (const auto& [g, m] : fz.factors) {
      EXPECT_GT(g.leading(), 0);
      EXPECT_EQ(g.content(), 1);
    }
  }
}
