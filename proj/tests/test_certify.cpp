#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "trigbound/certify.hpp"
#include "trigbound/sturm.hpp"

using namespace trigbound;

namespace {
const TrigPoly<Rational> classical{Rational(3), Rational(4), Rational(1)};
QPoly Q(std::initializer_list<Rational> c) { return QPoly(std::vector<Rational>(c)); }
}  // namespace

TEST(Sturm, CountsDistinctRoots) {
  // (1/2 - x)(x - 1/3)(x - 2)
  const auto p = Q({Rational(1, 2), -1}) * Q({Rational(-1, 3), 1}) * Q({-2, 1});
  const SturmChain chain(square_free_part(p));
  EXPECT_EQ(chain.count_roots(Rational(-1), Rational(1)), 2);
  EXPECT_EQ(chain.count_roots(Rational(-1), Rational(3)), 3);
  EXPECT_EQ(chain.count_roots(Rational(0), Rational(1, 2)), 2);
  EXPECT_EQ(chain.count_roots(Rational(1, 3), Rational(1, 2)), 1);  // (a, b] excludes a, includes b
  EXPECT_EQ(chain.count_roots(Rational(1, 2), Rational(1)), 0);
  const auto brackets = chain.isolate(Rational(-1), Rational(1));
  ASSERT_EQ(brackets.size(), 2u);
  for (auto b : brackets) {
    b = chain.refine(b, Rational(1, 1 << 20));
    EXPECT_LE(b.hi - b.lo, Rational(1, 1 << 20));
  }
}

TEST(Sturm, OddMultiplicityPart) {
  // (x+1)^2 (x - 1/2)^3 x: sign changes only at 1/2 and 0.
  const auto p = Q({1, 1}) * Q({1, 1}) * Q({Rational(-1, 2), 1}) * Q({Rational(-1, 2), 1}) *
                 Q({Rational(-1, 2), 1}) * Q({0, 1});
  const auto q = odd_multiplicity_part(p);
  EXPECT_EQ(q.degree(), 2u);
  EXPECT_EQ(q(Rational(1, 2)), 0);
  EXPECT_EQ(q(Rational(0)), 0);
  EXPECT_NE(q(Rational(-1)), 0);
  EXPECT_EQ(square_free_part(p).degree(), 3u);
}

TEST(Certify, ClassicalIsNonnegativeWithMarginZero) {
  const auto c = certify_nonnegative(classical, CertMode::exact);
  EXPECT_EQ(c.verdict, Verdict::nonnegative);
  EXPECT_EQ(c.method, CertMethod::exact_sturm);
  EXPECT_EQ(c.margin, 0);
  EXPECT_FALSE(c.witness.has_value());
}

TEST(Certify, NegativeWitnessAtPi) {
  const TrigPoly<Rational> p{Rational(3), Rational(41, 10), Rational(1)};
  const auto c = certify_nonnegative(p, CertMode::exact);
  ASSERT_EQ(c.verdict, Verdict::negative_witness);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_NEAR(c.witness->theta, std::numbers::pi, 1e-12);
  EXPECT_EQ(c.witness->x, Rational(-1));
  EXPECT_EQ(c.witness->value, Rational(-1, 10));
  EXPECT_LT(c.witness->value_at_theta, 0);
}

TEST(Certify, ConstantAndZero) {
  const auto c = certify_nonnegative(TrigPoly<Rational>{Rational(1), Rational(0), Rational(0)}, CertMode::exact);
  EXPECT_EQ(c.verdict, Verdict::nonnegative);
  EXPECT_EQ(c.margin, 1);
  const auto z = certify_nonnegative(TrigPoly<Rational>{}, CertMode::exact);
  EXPECT_EQ(z.verdict, Verdict::nonnegative);
  EXPECT_EQ(z.margin, 0);
  const auto n = certify_nonnegative(TrigPoly<Rational>{Rational(-1, 5)}, CertMode::exact);
  EXPECT_EQ(n.verdict, Verdict::negative_witness);
}

TEST(Certify, InteriorDoubleRootIsNonnegative) {
  // (cos t - 1/3)^2 = 1/9 - (2/3) cos t + (1 + cos 2t)/2
  const TrigPoly<Rational> p{Rational(11, 18), Rational(-2, 3), Rational(1, 2)};
  const auto c = certify_nonnegative(p, CertMode::exact);
  EXPECT_EQ(c.verdict, Verdict::nonnegative);
  EXPECT_EQ(c.margin, 0);
  // Shifting down by any amount exposes a witness near arccos(1/3).
  const TrigPoly<Rational> q{Rational(11, 18) - Rational(1, 1000000000), Rational(-2, 3), Rational(1, 2)};
  const auto w = certify_nonnegative(q, CertMode::exact);
  ASSERT_EQ(w.verdict, Verdict::negative_witness);
  EXPECT_LT(w.witness->value, 0);
  EXPECT_NEAR(w.witness->theta, std::acos(1.0 / 3.0), 1e-3);
}

TEST(Certify, ModeRules) {
  EXPECT_THROW(certify_nonnegative(TrigPoly<double>{3.0, 4.0, 1.0}, CertMode::exact), ModeError);
  const auto c = certify_nonnegative(TrigPoly<double>{3.0, 4.0, 1.0}, CertMode::numeric);
  EXPECT_NE(c.verdict, Verdict::negative_witness);  // minimum is exactly 0
  EXPECT_EQ(c.method, CertMethod::numeric);
  const auto strict = certify_nonnegative(TrigPoly<double>{3.5, 4.0, 1.0}, CertMode::numeric);
  EXPECT_EQ(strict.verdict, Verdict::nonnegative);
  EXPECT_GT(strict.margin, 0.49);
  const auto neg = certify_nonnegative(TrigPoly<double>{3.0, 4.1, 1.0}, CertMode::numeric);
  EXPECT_EQ(neg.verdict, Verdict::negative_witness);
  EXPECT_LT(neg.witness->value_at_theta, 0);
  const auto viaq = certify_nonnegative(classical, CertMode::numeric);
  EXPECT_EQ(viaq.method, CertMethod::numeric);
}

TEST(Certify, SoundnessAgainstSampling) {
  std::mt19937_64 rng(oracle::kSeed + 4);
  for (int i = 0; i < 300; ++i) {
    const auto p = oracle::random_poly(rng, 8);
    const auto c = certify_nonnegative(p, CertMode::exact);
    ASSERT_NE(c.verdict, Verdict::inconclusive);
    if (c.verdict == Verdict::negative_witness) {
      ASSERT_LT(oracle::eval_direct(oracle::as_long_double(p), c.witness->theta), 0);
    } else {
      const auto s = oracle::sample_min(p, 20000);
      ASSERT_GE(s.value, -s.allowance);
      ASSERT_LE(c.margin, s.value + s.allowance);
    }
  }
}

TEST(Certify, NumericAgreesWithExactWhenDecisive) {
  std::mt19937_64 rng(oracle::kSeed + 6);
  int decisive = 0;
  for (int i = 0; i < 300; ++i) {
    const auto p = oracle::random_poly(rng, 8);
    const auto e = certify_nonnegative(p, CertMode::exact);
    const auto n = certify_nonnegative(to_double(p), CertMode::numeric);
    if (n.verdict == Verdict::inconclusive) continue;
    ++decisive;
    ASSERT_EQ(n.verdict, e.verdict);
  }
  EXPECT_GT(decisive, 250);
}

TEST(Certify, ScaleInvariance) {
  std::mt19937_64 rng(oracle::kSeed + 7);
  std::uniform_int_distribution<int> num(1, 1000), den(1, 1000);
  for (int i = 0; i < 1000; ++i) {
    const auto p = oracle::random_poly(rng, 8);
    const Rational c(num(rng), den(rng));
    ASSERT_EQ(certify_nonnegative(p, CertMode::exact).verdict,
              certify_nonnegative(p.scaled(c), CertMode::exact).verdict);
  }
}
