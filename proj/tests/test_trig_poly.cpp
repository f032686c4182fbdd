#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "trigbound/algebraic_poly.hpp"
#include "trigbound/certify.hpp"
#include "trigbound/trig_poly.hpp"

using namespace trigbound;

namespace {
const double pi = std::numbers::pi;
const TrigPoly<Rational> classical{Rational(3), Rational(4), Rational(1)};

AlgebraicPoly<Rational> Q(std::initializer_list<Rational> c) { return AlgebraicPoly<Rational>(std::vector<Rational>(c)); }
}  // namespace

TEST(TrigPoly, EvaluateClassical) {
  EXPECT_DOUBLE_EQ(evaluate(classical, 0.0), 8.0);
  EXPECT_NEAR(evaluate(classical, pi), 0.0, 1e-15);
  EXPECT_NEAR(evaluate(classical, pi / 2), 2.0, 1e-15);
  EXPECT_THROW(evaluate(classical, INFINITY), InputError);
  EXPECT_THROW(evaluate(classical, NAN), InputError);
}

TEST(TrigPoly, TrimsTrailingZeros) {
  const TrigPoly<Rational> p{Rational(2), Rational(0), Rational(0)};
  EXPECT_EQ(p.degree(), 0u);
  EXPECT_EQ(p.coefficients().size(), 1u);
  const TrigPoly<double> z{0.0, 0.0};
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), 0u);
  EXPECT_EQ(evaluate(z, 1.0), 0.0);
  EXPECT_THROW(TrigPoly<double>({1.0, NAN}), InputError);
}

TEST(TrigPoly, ToAlgebraicExamples) {
  EXPECT_EQ(to_algebraic(classical), Q({2, 4, 2}));
  const TrigPoly<Rational> scaled{Rational(1), Rational(4, 3), Rational(1, 3)};
  EXPECT_EQ(to_algebraic(scaled), Q({Rational(2, 3), Rational(4, 3), Rational(2, 3)}));
  EXPECT_EQ(to_algebraic(TrigPoly<Rational>{Rational(1), Rational(0)}), Q({1}));
}

TEST(TrigPoly, DerivativeExamples) {
  EXPECT_EQ(derivative(Q({2, 4, 2})), Q({4, 4}));
  EXPECT_TRUE(derivative(Q({7})).is_zero());
  EXPECT_EQ(derivative(Q({0, 0, 0, 1})), Q({0, 0, 3}));
}

TEST(TrigPoly, NormalizeExamples) {
  const auto n = normalize(classical);
  EXPECT_EQ(n.poly, (TrigPoly<Rational>{Rational(1), Rational(4, 3), Rational(1, 3)}));
  EXPECT_EQ(n.factor, Rational(1, 3));
  EXPECT_EQ(normalize(n.poly).poly, n.poly);
  const auto d = normalize(TrigPoly<Rational>{Rational(2), Rational(0)});
  EXPECT_EQ(d.poly.degree(), 0u);
  EXPECT_EQ(d.poly.coefficient(0), Rational(1));
  EXPECT_THROW(normalize(TrigPoly<Rational>{Rational(0), Rational(1)}), ContractError);
  EXPECT_THROW(normalize(TrigPoly<double>{-1.0, 1.0}), ContractError);
}

TEST(TrigPoly, MinOnIntervalExamples) {
  const Rational tol(1, 1000000000);
  auto r = min_on_interval(Q({2, 4, 2}), tol);
  EXPECT_EQ(r.x, Rational(-1));
  EXPECT_EQ(r.value, Rational(0));
  EXPECT_LE(r.radius, tol);

  r = min_on_interval(Q({-1, 0, 2}), tol);
  EXPECT_EQ(r.x, Rational(0));
  EXPECT_EQ(r.value, Rational(-1));

  r = min_on_interval(Q({Rational(2, 3), Rational(4, 3), Rational(2, 3)}), tol);
  EXPECT_EQ(r.x, Rational(-1));
  EXPECT_EQ(r.value, Rational(0));

  const auto d = min_on_interval(AlgebraicPoly<double>({-1.0, 0.0, 2.0}), 1e-9);
  EXPECT_NEAR(d.x, 0.0, 1e-6);
  EXPECT_NEAR(d.value, -1.0, 1e-9);
  EXPECT_LE(d.radius, 1e-9);

  EXPECT_THROW(min_on_interval(Q({1}), Rational(0)), InputError);
  EXPECT_THROW(min_on_interval(AlgebraicPoly<double>({1.0}), -1.0), InputError);
}

TEST(TrigPoly, MinOnIntervalIrrationalCritical) {
  // x^3 - x has its minimum at 1/sqrt(3), value -2/(3 sqrt 3).
  const double expected = -2.0 / (3.0 * std::sqrt(3.0));
  const Rational tol(1, 1000000000000LL);
  const auto r = min_on_interval(Q({0, -1, 0, 1}), tol);
  EXPECT_NEAR(to_double(r.value), expected, 1e-12);
  EXPECT_LE(r.radius, tol);
  EXPECT_GE(expected, to_double(r.value - r.radius) - 1e-15);
}

TEST(TrigPoly, RoundTripProperty) {
  std::mt19937_64 rng(oracle::kSeed + 2);
  std::uniform_int_distribution<int> deg(0, 16);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  std::uniform_real_distribution<double> ang(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> a(deg(rng) + 1);
    double abs_sum = 0;
    for (auto& c : a) abs_sum += std::abs(c = coef(rng));
    const TrigPoly<double> f(a);
    const auto g = to_algebraic(f);
    for (int k = 0; k < 100; ++k) {
      const double th = ang(rng);
      ASSERT_LE(std::abs(evaluate(f, th) - g(std::cos(th))), 1e-10 * abs_sum);
    }
  }
}

TEST(TrigPoly, ClenshawMatchesDirectSum) {
  std::mt19937_64 rng(oracle::kSeed + 3);
  for (int i = 0; i < 200; ++i) {
    const auto p = oracle::random_poly(rng, 12);
    const auto a = oracle::as_long_double(p);
    for (double th : {0.0, 0.3, 1.0, 2.5, pi}) EXPECT_NEAR(evaluate(p, th), static_cast<double>(oracle::eval_direct(a, th)), 1e-11);
  }
}

TEST(TrigPoly, ExactConversionsRoundTrip) {
  const TrigPoly<double> d{0.1, -2.5, 3.0};
  EXPECT_EQ(to_double(to_rational(d)), d);
}

TEST(Rational, ParsesLiterals) {
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-0.0625"), Rational(-1, 16));
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_EQ(parse_rational("08/09"), Rational(8, 9));
  EXPECT_EQ(parse_rational("-07/010"), Rational(-7, 10));
  EXPECT_EQ(parse_rational("0"), Rational(0));
  EXPECT_EQ(parse_rational("000"), Rational(0));
  EXPECT_EQ(parse_rational("1.5e-3"), Rational(3, 2000));
  EXPECT_EQ(parse_rational(" 4/3 "), Rational(4, 3));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_rational("1.2.3"), InputError);
}

TEST(Rational, FormatParseRoundTrip) {
  std::mt19937_64 rng(oracle::kSeed + 31);
  std::uniform_int_distribution<long long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 1000; ++i) {
    const Rational x(num(rng), den(rng));
    EXPECT_EQ(parse_rational(format_rational(x)), x);
  }
}
