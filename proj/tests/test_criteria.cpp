#include "resnil/criteria.hpp"
#include "resnil/error.hpp"
#include "resnil/lattice.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace resnil;
using testsupport::random_unimodular;

namespace {

const IntMatrix kMikhailov{{0, 1}, {1, 3}};
const IntMatrix kBraid{{1, 1}, {-1, 0}};
const IntMatrix kKlein1{{1, 0}, {-2, 1}};
const IntMatrix kKlein2{{-1, 0}, {2, 1}};

IntMatrix companion(long det, long tr) { return IntMatrix{{0, -det}, {1, tr}}; }

IntMatrix diag(std::initializer_list<long> d) {
  IntMatrix m(d.size(), d.size());
  std::size_t i = 0;
  for (long x : d) m(i, i) = x, ++i;
  return m;
}

}  // namespace

TEST(Criteria, AbelianCriterion) {
  auto m = af_criterion(kMikhailov);
  EXPECT_TRUE(m.nilpotent);
  ASSERT_EQ(m.factors.size(), 1u);
  EXPECT_EQ(m.factors[0].value_at_one, -3);
  EXPECT_EQ(m.p_primes, (PrimeSet{false, {Int(3)}}));

  auto id = af_criterion(IntMatrix::identity(2));
  EXPECT_TRUE(id.nilpotent);
  EXPECT_TRUE(id.p_primes.all);
  ASSERT_EQ(id.factors.size(), 1u);
  EXPECT_EQ(id.factors[0].multiplicity, 2u);

  EXPECT_FALSE(af_criterion(IntMatrix{{2, 1}, {1, 1}}).nilpotent);
  EXPECT_THROW(af_criterion(IntMatrix{{2, 0}, {0, 1}}), Error);
}

TEST(Criteria, FiberAndEigenvalues) {
  EXPECT_TRUE(gamma_omega_is_fiber(kBraid));
  EXPECT_FALSE(gamma_omega_is_fiber(IntMatrix::identity(2)));
  EXPECT_FALSE(gamma_omega_is_fiber(kMikhailov));

  auto mixed = integer_eigenvalue_criterion(diag({1, -1}));
  ASSERT_TRUE(mixed);
  EXPECT_FALSE(mixed->all_plus_one);
  EXPECT_TRUE(mixed->has_minus_one);
  auto uni = integer_eigenvalue_criterion(IntMatrix{{1, 5}, {0, 1}});
  ASSERT_TRUE(uni);
  EXPECT_TRUE(uni->all_plus_one);
  EXPECT_FALSE(integer_eigenvalue_criterion(kMikhailov));
}

TEST(Criteria, ModPUnipotency) {
  EXPECT_EQ(mod_p_unipotency(kKlein1, Int(2)), 1u);
  EXPECT_EQ(mod_p_unipotency(kKlein2, Int(2)), 1u);
  EXPECT_EQ(mod_p_unipotency(IntMatrix{{1, 3}, {3, 10}}, Int(3)), 1u);
  EXPECT_FALSE(mod_p_unipotency(kMikhailov, Int(3)));
  EXPECT_EQ(mod_p_unipotency(IntMatrix{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}, Int(5)), 3u);
  EXPECT_THROW(mod_p_unipotency(kMikhailov, Int(4)), Error);
}

TEST(Criteria, EigenProducts) {
  EXPECT_TRUE(mikhailov_module_check(kMikhailov));
  EXPECT_FALSE(mikhailov_module_check(diag({2, 2})));
  EXPECT_FALSE(mikhailov_module_check(IntMatrix{{2, 1}, {1, 1}}));
  EXPECT_THROW(mikhailov_module_check(IntMatrix(2, 3)), Error);
}

TEST(Criteria, Audits) {
  auto t = tensor_power_audit(kMikhailov, 3, Int(3));
  ASSERT_EQ(t.size(), 3u);
  for (const auto& r : t) EXPECT_TRUE(r.af_nilpotent) << r.k;
  EXPECT_EQ(t[2].dimension, 8u);

  for (const auto& r : tensor_power_audit(IntMatrix::identity(2), 3, Int(7))) {
    EXPECT_TRUE(r.af_nilpotent);
    EXPECT_TRUE(r.af.p_primes.all);
  }
  auto bad = tensor_power_audit(IntMatrix{{2, 1}, {1, 1}}, 2, std::nullopt);
  EXPECT_FALSE(bad[0].af_nilpotent);

  auto lie = lie_component_audit(kMikhailov, 2, Int(2));
  EXPECT_EQ(lie[1].dimension, 1u);
  EXPECT_TRUE(lie[1].af_nilpotent);
  EXPECT_EQ(lie[1].af.factors[0].value_at_one, 2);
  EXPECT_TRUE(*lie[1].af_p_finite);
  EXPECT_THROW(tensor_power_audit(IntMatrix::identity(2), 13, std::nullopt), Error);
}

TEST(Criteria, AugmentationPowers) {
  EXPECT_EQ(augmentation_power_check({diag({1, -1})}, Int(2), 4), 1u);
  EXPECT_EQ(augmentation_power_check({IntMatrix::identity(2)}, Int(0), 4), 1u);
  EXPECT_EQ(augmentation_power_check({kKlein1, kKlein2}, Int(2), 4), 1u);
  EXPECT_EQ(augmentation_power_check({IntMatrix{{1, 1}, {0, 1}}}, Int(0), 4), 2u);
  EXPECT_FALSE(augmentation_power_check({kMikhailov}, Int(0), 6));
  EXPECT_THROW(augmentation_power_check({kMikhailov}, Int(1), 3), Error);
  EXPECT_THROW(augmentation_power_check({kMikhailov, IntMatrix::identity(3)}, Int(2), 3), Error);
}

TEST(Classify, RankTwoExamples) {
  Verdict m = classify_f2(kMikhailov);
  EXPECT_FALSE(m.residually_nilpotent.holds);
  EXPECT_EQ(m.residually_nilpotent.certainty, Certainty::proven());
  EXPECT_EQ(m.lcs_length, LcsLength::OmegaSquared);

  Verdict b = classify_f2(kBraid);
  EXPECT_EQ(b.lcs_length, LcsLength::Two);

  Verdict sq = classify_f2(IntMatrix{{1, 3}, {3, 10}});
  EXPECT_EQ(sq.lcs_length, LcsLength::Omega);
  EXPECT_TRUE(sq.p_finite(Int(3)).holds);
  EXPECT_EQ(sq.p_finite(Int(5)).certainty.kind, CertaintyKind::Unknown);

  EXPECT_TRUE(classify_f2(IntMatrix{{1, 7}, {0, 1}}).all_primes->holds);
  EXPECT_THROW(classify_f2(IntMatrix::identity(3)), Error);
  EXPECT_THROW(classify_f2(IntMatrix{{2, 0}, {0, 1}}), Error);
}

TEST(Classify, FiniteIndexExamples) {
  auto m = finite_index_resnil_subgroup(kMikhailov);
  EXPECT_EQ(m.index, 2u);
  EXPECT_EQ(m.power_matrix, (IntMatrix{{1, 3}, {3, 10}}));
  EXPECT_TRUE(m.sub_verdict.p_finite(Int(3)).holds);

  auto four = finite_index_resnil_subgroup(IntMatrix{{1, 1}, {1, 0}});
  EXPECT_EQ(four.index, 4u);
  EXPECT_EQ(trace(four.power_matrix), 7);
  EXPECT_TRUE(four.sub_verdict.p_finite(Int(5)).holds);

  auto braid = finite_index_resnil_subgroup(kBraid);
  EXPECT_EQ(braid.index, 2u);
  EXPECT_EQ(braid.power_matrix, (IntMatrix{{0, 1}, {-1, -1}}));
  EXPECT_TRUE(braid.sub_verdict.p_finite(Int(3)).holds);
}

TEST(Classify, GeneralInputs) {
  Verdict m = classify_general(parse_endo("a->b; b->a b^3"));
  EXPECT_EQ(m.lcs_length, LcsLength::OmegaSquared);
  EXPECT_FALSE(m.residually_nilpotent.holds);

  Verdict ex = classify_general(parse_endo("x1->x1; x2->x2^-1; x3->x3"));
  EXPECT_TRUE(ex.residually_nilpotent.holds);
  EXPECT_EQ(ex.p_finite(Int(2)), (Claim{true, Certainty::proven()}));

  ClassifyOptions opts;
  opts.primes = {Int(2), Int(3), Int(5)};
  Verdict u = classify_general(IntMatrix{{1, 2, 3}, {0, 1, 4}, {0, 0, 1}}, opts);
  EXPECT_EQ(u.residually_nilpotent, (Claim{true, Certainty::proven()}));
  for (const auto& p : opts.primes) EXPECT_TRUE(u.p_finite(p).holds);
  EXPECT_TRUE(u.all_primes && u.all_primes->holds);

  Verdict fam = classify_action_family({kKlein1, kKlein2});
  EXPECT_EQ(fam.residually_nilpotent, (Claim{true, Certainty::proven()}));
  EXPECT_EQ(fam.lcs_length, LcsLength::Omega);

  EXPECT_THROW(classify_general(parse_endo("a->a^2; b->b")), Error);
}

TEST(Classify, HigherRankFiberAndBoundedEvidence) {
  // Companion matrix of x^3 - x - 1: A - E is unimodular since p(1) = -1.
  IntMatrix c3{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}};
  Verdict f = classify_matrix(c3);
  EXPECT_EQ(f.lcs_length, LcsLength::Two);
  EXPECT_FALSE(f.residually_nilpotent.holds);

  // Companion of x^3 - 4x^2 - 1: p(1) = -4, but A - E is not nilpotent mod 2,
  // so only bounded evidence is available.
  IntMatrix c{{0, 0, 1}, {1, 0, 0}, {0, 1, 4}};
  Verdict b = classify_matrix(c);
  EXPECT_TRUE(verdict_violations(b).empty());
  EXPECT_NE(b.residually_nilpotent.certainty.kind, CertaintyKind::Proven);
  EXPECT_FALSE(mod_p_unipotency(c, Int(2)));
  bool open = false;
  for (const auto& w : b.witnesses) open = open || w.anchor == "rank-open";
  if (b.lcs_length == LcsLength::Unknown) EXPECT_TRUE(open);
}

// For every unimodular 2x2 matrix from a grid of (det, tr), the positive bit
// is necessary for the abelian criterion and p-finiteness always has a
// unipotency certificate.
TEST(ClassifyProperty, RankTwoConsistency) {
  for (long det : {1L, -1L})
    for (long tr = -8; tr <= 8; ++tr) {
      IntMatrix a = companion(det, tr);
      Verdict v = classify_f2(a);
      EXPECT_TRUE(verdict_violations(v).empty());
      if (v.residually_nilpotent.holds) EXPECT_TRUE(af_criterion(a).nilpotent);
      for (const auto& p : v.p_finite_primes()) EXPECT_TRUE(mod_p_unipotency(a, p)) << det << "," << tr;
      if (v.all_primes && v.all_primes->holds) EXPECT_TRUE(mod_p_unipotency(a, Int(101)));
    }
}

TEST(ClassifyProperty, UnipotencyImpliesTensorPass) {
  std::mt19937_64 rng(51);
  for (int iter = 0; iter < 60; ++iter) {
    std::size_t n = static_cast<std::size_t>(testsupport::uniform(rng, 2, 3));
    IntMatrix a = random_unimodular(rng, n, 5);
    for (long p : {2L, 3L, 5L}) {
      if (!mod_p_unipotency(a, Int(p))) continue;
      for (const auto& r : tensor_power_audit(a, n == 2 ? 4 : 3, Int(p))) {
        EXPECT_TRUE(r.af_nilpotent);
        EXPECT_TRUE(*r.af_p_finite) << a.to_string() << " p=" << p << " k=" << r.k;
      }
    }
  }
}

TEST(ClassifyProperty, TensorPassImpliesLiePass) {
  std::mt19937_64 rng(52);
  for (int iter = 0; iter < 60; ++iter) {
    IntMatrix a = random_unimodular(rng, 2, 6);
    auto t = tensor_power_audit(a, 4, std::nullopt);
    auto l = lie_component_audit(a, 4, std::nullopt);
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (t[k].af_nilpotent) EXPECT_TRUE(l[k].af_nilpotent) << a.to_string() << " k=" << k + 1;
      for (const auto& p : t[k].af.p_primes.primes) EXPECT_TRUE(l[k].af.p_primes.contains(p));
    }
  }
}

TEST(ClassifyProperty, VerdictsAreConsistent) {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t n = static_cast<std::size_t>(testsupport::uniform(rng, 1, 4));
    IntMatrix a = random_unimodular(rng, n, 4);
    Verdict v = classify_matrix(a);
    EXPECT_TRUE(verdict_violations(v).empty()) << a.to_string();
    if (gamma_omega_is_fiber(a)) EXPECT_EQ(v.lcs_length, LcsLength::Two);
    for (const auto& w : v.witnesses) EXPECT_NE(find_citation(w.anchor), nullptr);
  }
}

TEST(Verdict, InvariantChecker) {
  Verdict v;
  v.residually_p_finite[Int(3)] = {true, Certainty::proven()};
  EXPECT_FALSE(verdict_violations(v).empty());
  v.residually_nilpotent = {true, Certainty::up_to(3)};
  EXPECT_FALSE(verdict_violations(v).empty());
  v.residually_nilpotent = {true, Certainty::proven()};
  EXPECT_TRUE(verdict_violations(v).empty());
  v.witnesses.push_back({"x", "no-such-anchor", ""});
  EXPECT_FALSE(verdict_violations(v).empty());
  EXPECT_TRUE(Certainty::up_to(4).at_least(Certainty::up_to(3)));
  EXPECT_FALSE(Certainty::up_to(4).at_least(Certainty::proven()));
}
