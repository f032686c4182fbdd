#pragma once

// Reference computations that share no code path with the library: direct
// summation, dense sampling, per-term cosines.

#include <cfloat>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "trigbound/rational.hpp"
#include "trigbound/trig_poly.hpp"

namespace oracle {

using trigbound::Rational;
using trigbound::TrigPoly;

inline constexpr std::uint64_t kSeed = 20240517;

/// sum a_n cos(n theta) given (cos theta, sin theta); cos(n theta) comes
/// from powers of e^{i theta}.
inline long double eval_rotation(const std::vector<long double>& a, long double c1, long double s1) {
  long double c = 1, s = 0, sum = 0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    sum += a[n] * c;
    const long double next = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = next;
  }
  return sum;
}

inline long double eval_direct(const std::vector<long double>& a, long double theta) {
  return eval_rotation(a, std::cos(theta), std::sin(theta));
}

inline std::vector<long double> as_long_double(const TrigPoly<Rational>& p) {
  std::vector<long double> out;
  for (const auto& c : p.coefficients()) out.push_back(c.convert_to<long double>());
  return out;
}

struct SampleMin {
  long double value;
  long double theta;
  long double allowance;  ///< rounding allowance for the sampled values
};

/// Minimum over `points` equally spaced theta in [0, pi].
inline SampleMin sample_min(const TrigPoly<Rational>& p, int points = 100000) {
  struct Grid {
    std::vector<long double> theta, c, s;
  };
  static thread_local Grid grid;
  if (static_cast<int>(grid.theta.size()) != points) {
    grid = {};
    for (int k = 0; k < points; ++k) {
      const long double th = std::numbers::pi_v<long double> * k / (points - 1);
      grid.theta.push_back(th);
      grid.c.push_back(std::cos(th));
      grid.s.push_back(std::sin(th));
    }
  }
  const auto a = as_long_double(p);
  long double abs_sum = 0;
  for (auto c : a) abs_sum += std::fabs(c);
  SampleMin best{INFINITY, 0, 0};
  for (int k = 0; k < points; ++k) {
    const long double v = eval_rotation(a, grid.c[k], grid.s[k]);
    if (v < best.value) best = {v, grid.theta[k], 0};
  }
  // Coefficient conversion, rotation drift and summation, with headroom.
  best.allowance = 64 * a.size() * a.size() * abs_sum * LDBL_EPSILON;
  return best;
}

/// Random rational cosine polynomial of degree <= max_degree: a_1..a_N are
/// k/d with |k| <= 5d, d in 1..8; a_0 lands near sum_{n>=1}|a_n| times
/// a factor in [0, 1.2], so both verdicts occur often.
inline TrigPoly<Rational> random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> den(1, 8);
  const int N = deg(rng);
  std::vector<Rational> a(N + 1);
  Rational abs_tail = 0;
  for (int n = 1; n <= N; ++n) {
    const int d = den(rng);
    std::uniform_int_distribution<int> num(-5 * d, 5 * d);
    a[n] = Rational(num(rng), d);
    abs_tail += trigbound::abs_value(a[n]);
  }
  std::uniform_int_distribution<int> frac(0, 120);
  a[0] = abs_tail * Rational(frac(rng), 100);
  if (N == 0) a[0] = Rational(frac(rng) - 20, 7);
  return TrigPoly<Rational>(std::move(a));
}

struct ZetaOracle {
  std::complex<long double> value;
  long double error;  ///< bound on |zeta(s) - value|
};

/// zeta(s) = sum_{n<=N} n^{-s} + (N+1/2)^{1-s}/(s-1) + E, where the midpoint
/// rule gives |E| <= |s(s+1)|/24 * (N-1)^{-sigma-1}/(sigma+1).
inline ZetaOracle zeta_direct(double sigma, double t, long N) {
  const std::complex<long double> s(sigma, t);
  long double re = 0, im = 0, abs_sum = 0;
  for (long n = N; n >= 1; --n) {  // small terms first
    const long double ln = std::log(static_cast<long double>(n));
    const long double mag = std::exp(-sigma * ln);
    re += mag * std::cos(t * ln);
    im -= mag * std::sin(t * ln);
    abs_sum += mag;
  }
  const std::complex<long double> tail = std::pow(static_cast<long double>(N) + 0.5L, 1.0L - s) / (s - 1.0L);
  const long double midpoint = std::abs(s * (s + 1.0L)) / 24.0L *
                               std::pow(static_cast<long double>(N - 1), -sigma - 1.0L) / (sigma + 1.0L);
  const long double rounding = abs_sum * (N * LDBL_EPSILON + 16 * LDBL_EPSILON * (1 + std::fabs(t) * std::log(N)));
  return {std::complex<long double>(re, im) + tail, midpoint + rounding + std::abs(tail) * 1e-17L};
}

}  // namespace oracle
