#pragma once

// zeta(s) for Re s > 1 with rigorous error radii, and the trivial versus
// trigonometric-polynomial upper bounds on 1/|zeta(sigma + it)|.

#include <boost/math/special_functions/bernoulli.hpp>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "trigbound/conditions.hpp"
#include "trigbound/errors.hpp"
#include "trigbound/rational.hpp"
#include "trigbound/trig_poly.hpp"

namespace trigbound {

/// s = sigma + i t with sigma > 1.
class SigmaT {
 public:
  SigmaT(double sigma, double t) : sigma_(sigma), t_(t) {
    if (!std::isfinite(sigma) || !std::isfinite(t)) throw InputError("SigmaT: non-finite component");
    if (!(sigma > 1.0))
      throw DomainError("sigma must exceed 1 (got " + std::to_string(sigma) + ")");
  }
  double sigma() const { return sigma_; }
  double t() const { return t_; }
  double delta() const { return sigma_ - 1.0; }
  std::complex<double> s() const { return {sigma_, t_}; }

 private:
  double sigma_;
  double t_;
};

/// zeta(s) lies in the disc of `radius` around `value`.
struct ZetaValue {
  std::complex<double> value;
  double radius = 0;
  long terms = 0;  ///< Dirichlet terms summed (M - 1)
  int order = 0;   ///< Bernoulli corrections used (K)
};

inline constexpr double kDefaultZetaTarget = 1e-12;

namespace detail {

constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;
constexpr int kMaxBernoulliOrder = 120;

/// n^{-s} with the phase t log n reduced in extended precision.
inline std::complex<long double> power_minus_s(long double log_n, double sigma, double t) {
  const long double magnitude = std::exp(-static_cast<long double>(sigma) * log_n);
  const long double phase = std::fmod(static_cast<long double>(t) * log_n, kTwoPi);
  const double ph = static_cast<double>(phase);
  return {magnitude * std::cos(ph), -magnitude * std::sin(ph)};
}

/// B_{2k} / (2k)!
inline double bernoulli_ratio(int k) {
  return boost::math::bernoulli_b2n<double>(k) /
         std::exp(std::lgamma(2.0 * k + 1.0));
}

struct EmPlan {
  long M = 0;
  int K = 0;
  double truncation = 0;
};

/// Smallest K meeting `target` for cutoff M, if the remainder bound gets there.
inline std::optional<EmPlan> plan_for(const std::complex<double>& s, long M, double target) {
  const double sigma = s.real();
  const double m = static_cast<double>(M);
  const double m_pow = std::pow(m, 1.0 - sigma);  // M^{1 - sigma}
  // u = prod_{j=0}^{2k}(s+j) / M^{2k+1}, starting from k = 0.
  std::complex<double> u = s / m;
  double prev = HUGE_VAL;
  for (int K = 1; K <= kMaxBernoulliOrder - 1; ++K) {
    // Advance u to prod_{j=0}^{2K}(s+j)/M^{2K+1}.
    u *= (s + static_cast<double>(2 * K - 1)) * (s + static_cast<double>(2 * K)) / (m * m);
    const std::complex<double> next = u * (s + static_cast<double>(2 * K + 1)) / m;
    const double bound = std::abs(next) * m_pow * std::abs(bernoulli_ratio(K + 1)) /
                         (sigma + 2.0 * K + 1.0);
    if (bound <= target) return EmPlan{M, K, bound};
    if (bound > prev && K > 4) return std::nullopt;  // asymptotic series turning
    prev = bound;
  }
  return std::nullopt;
}

struct DirichletSum {
  std::complex<long double> sum;
  long double abs_sum = 0;
};

/// sum_{n<M} n^{-s}. Past kBlockStart, log n comes from one logl per block
/// of kBlock terms plus a short log1p series around the block centre.
inline DirichletSum dirichlet_sum(double sigma, double t, long M) {
  constexpr long kBlockStart = 1 << 16;
  constexpr long kBlock = 1 << 10;
  constexpr long double kInvTwoPi = 1.0L / kTwoPi;
  const long double tl = t;
  long double re = 0, im = 0, abs_sum = 0;
  auto add = [&](long double log_n) {
    const long double x = tl * log_n;
    const double phase = static_cast<double>(x - std::rint(x * kInvTwoPi) * kTwoPi);
    const double magnitude = std::exp(-sigma * static_cast<double>(log_n));
    double sn, cs;
    ::sincos(phase, &sn, &cs);
    re += magnitude * cs;
    im -= magnitude * sn;
    abs_sum += magnitude;
  };
  const long direct_end = std::min(M, kBlockStart);
  for (long n = 1; n < direct_end; ++n) add(std::log(static_cast<long double>(n)));
  for (long lo = direct_end; lo < M; lo += kBlock) {
    const long hi = std::min(M, lo + kBlock);
    const long centre = lo + kBlock / 2;
    const long double log_c = std::log(static_cast<long double>(centre));
    const long double inv_c = 1.0L / centre;
    for (long n = lo; n < hi; ++n) {
      // |u| <= 2^-7, so terms through u^9 leave a remainder below 2^-70.
      const long double u = (n - centre) * inv_c;
      const long double series =
          u * (1 - u * (0.5L - u * (1.0L / 3 - u * (0.25L - u * (0.2L - u * (1.0L / 6 -
              u * (1.0L / 7 - u * (0.125L - u / 9))))))));
      add(log_c + series);
    }
  }
  return {{re, im}, abs_sum};
}

}  // namespace detail

/// Euler-Maclaurin evaluation of zeta(s), sigma > 1:
///
///   zeta(s) = sum_{n<M} n^{-s} + M^{1-s}/(s-1) + M^{-s}/2
///             + sum_{k=1}^{K} B_{2k}/(2k)! s(s+1)...(s+2k-2) M^{-s-2k+1} + R,
///
///   |R| <= |s(s+1)...(s+2K+1) B_{2K+2} / ((2K+2)! (sigma+2K+1))| M^{-sigma-2K-1}.
///
/// M starts at max(20, ceil(1.25|s|/2pi) + 10) and doubles until some K < 120
/// meets half of target_err; the radius adds a rounding allowance for the
/// extended-precision sums. Throws PrecisionError when rounding alone
/// exceeds target_err.
inline ZetaValue zeta_em(const SigmaT& arg, double target_err = kDefaultZetaTarget) {
  if (!(target_err > 0)) throw InputError("zeta_em: target_err must be positive");
  const std::complex<double> s = arg.s();
  const double sigma = arg.sigma();
  const double t = arg.t();
  long M = std::max<long>(
      20, static_cast<long>(std::ceil(1.25 * std::abs(s) / (2.0 * std::numbers::pi))) + 10);

  std::optional<detail::EmPlan> plan;
  for (int attempt = 0; attempt < 40 && !plan; ++attempt) {
    plan = detail::plan_for(s, M, 0.5 * target_err);
    if (!plan) M *= 2;
  }
  if (!plan) throw PrecisionError("zeta_em: no Euler-Maclaurin parameters reach the target");

  // Dirichlet part.
  const auto dir = detail::dirichlet_sum(sigma, t, plan->M);
  const std::complex<long double> sum = dir.sum;
  const long double abs_sum = dir.abs_sum;

  // Integral, boundary and Bernoulli corrections.
  const long double log_m = std::log(static_cast<long double>(plan->M));
  const std::complex<long double> m_minus_s = detail::power_minus_s(log_m, sigma, t);
  const std::complex<long double> sl(sigma, t);
  const long double m = static_cast<long double>(plan->M);
  std::complex<long double> corr = m_minus_s * m / (sl - 1.0L) + m_minus_s / 2.0L;
  const long double main_abs = std::abs(m_minus_s * m / (sl - 1.0L)) + std::abs(m_minus_s) / 2.0L;
  long double bernoulli_abs = 0;
  std::complex<long double> u = sl / m;  // s(s+1)...(s+2k-2) / M^{2k-1}
  for (int k = 1; k <= plan->K; ++k) {
    if (k > 1) u *= (sl + static_cast<long double>(2 * k - 3)) * (sl + static_cast<long double>(2 * k - 2)) / (m * m);
    const std::complex<long double> term =
        static_cast<long double>(detail::bernoulli_ratio(k)) * u * m_minus_s;
    corr += term;
    bernoulli_abs += std::abs(term);
  }

  const std::complex<long double> total = sum + corr;
  const double log_m_d = static_cast<double>(log_m);
  const double per_term = 8.0 * DBL_EPSILON +
                          4.0 * (std::abs(t) + sigma) * log_m_d * LDBL_EPSILON;
  const double summation = static_cast<double>(plan->M) * LDBL_EPSILON;
  // M^{-s} carries the same per-term error as a Dirichlet term; the
  // Bernoulli terms add a binary64 ratio and K long-double products.
  const double rounding = static_cast<double>(abs_sum) * (per_term + summation) +
                          static_cast<double>(main_abs) * (per_term + 8.0 * LDBL_EPSILON) +
                          static_cast<double>(bernoulli_abs) * (per_term + 8.0 * DBL_EPSILON * (plan->K + 2)) +
                          std::abs(std::complex<double>(total)) * DBL_EPSILON;
  if (rounding > target_err)
    throw PrecisionError("zeta_em: rounding allowance " + std::to_string(rounding) +
                         " exceeds target " + std::to_string(target_err));

  ZetaValue out;
  out.value = std::complex<double>(static_cast<double>(total.real()), static_cast<double>(total.imag()));
  out.radius = plan->truncation + rounding;
  out.terms = plan->M - 1;
  out.order = plan->K;
  return out;
}

// ---------------------------------------------------------------------------

/// Primes <= limit by the sieve of Eratosthenes.
inline std::vector<long> primes_up_to(long limit) {
  std::vector<long> out;
  if (limit < 2) return out;
  std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
  for (long p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (long q = p * p; q <= limit; q += p) composite[q] = 1;
  }
  return out;
}

inline constexpr long kMaxPrimeLimit = 10'000'000;

struct PrimeSumResult {
  double value = 0;  ///< truncated sum over p <= P
  double tail = 0;   ///< |log|zeta(s)| - value| <= tail
  std::size_t primes = 0;
};

/// log|zeta(s)| = sum_p sum_m cos(m t log p) / (m p^{m sigma}), truncated at
/// p <= P. Primes above P contribute at most sum_{n>P} n^{-sigma} <=
/// P^{1-sigma}/(sigma-1); the m-series of each prime stops once its tail is
/// below 1e-15 and that remainder is added to `tail` as well.
inline PrimeSumResult log_abs_zeta_primesum(const SigmaT& arg, long P) {
  if (P < 2) throw InputError("log_abs_zeta_primesum: P must be at least 2");
  if (P > kMaxPrimeLimit) throw InputError("log_abs_zeta_primesum: P above 1e7 is not supported");
  const double sigma = arg.sigma();
  const long double t = arg.t();
  const auto primes = primes_up_to(P);

  long double value = 0;
  long double m_tails = 0;
  long double magnitude_sum = 0;
  for (long p : primes) {
    const long double log_p = std::log(static_cast<long double>(p));
    const long double x = std::exp(-static_cast<long double>(sigma) * log_p);  // p^{-sigma}
    long double xm = x;
    for (int m = 1;; ++m) {
      const long double phase = std::fmod(m * t * log_p, detail::kTwoPi);
      value += std::cos(static_cast<double>(phase)) * xm / m;
      magnitude_sum += xm / m;
      const long double next = xm * x;
      const long double remainder = next / ((m + 1) * (1.0L - x));
      if (remainder < 1e-15L) {
        m_tails += remainder;
        break;
      }
      xm = next;
    }
  }
  PrimeSumResult out;
  out.value = static_cast<double>(value);
  out.primes = primes.size();
  const double large_primes = std::pow(static_cast<double>(P), 1.0 - sigma) / (sigma - 1.0);
  const double rounding = static_cast<double>(magnitude_sum) *
                          (8.0 * DBL_EPSILON + static_cast<double>(primes.size()) * LDBL_EPSILON);
  out.tail = large_primes + static_cast<double>(m_tails) + rounding;
  return out;
}

// ---------------------------------------------------------------------------

struct TrivialBounds {
  double sigma = 0;
  ZetaValue zeta_sigma;     ///< zeta(sigma)
  ZetaValue zeta_2sigma;    ///< zeta(2 sigma)
  double upper_abs = 0;     ///< |zeta(s)| <= zeta(sigma)
  double upper_abs_radius = 0;
  double upper_inv = 0;     ///< 1/|zeta(s)| <= zeta(sigma)/zeta(2 sigma)
  double upper_inv_radius = 0;
};

/// Target radius used inside the bounds: grows with |t| because the phase
/// t log n carries that much rounding, and with 1/(sigma - 1) because
/// zeta(sigma) does.
inline double factor_target(const SigmaT& s) {
  return 1e-12 + 1e-14 / s.delta() + 1e-15 * std::abs(s.t());
}

inline TrivialBounds trivial_bounds(double sigma) {
  const SigmaT a(sigma, 0.0);
  const SigmaT b(2.0 * sigma, 0.0);
  TrivialBounds out;
  out.sigma = sigma;
  out.zeta_sigma = zeta_em(a, factor_target(a));
  out.zeta_2sigma = zeta_em(b, factor_target(b));
  const double z1 = out.zeta_sigma.value.real();
  const double z2 = out.zeta_2sigma.value.real();
  out.upper_abs = z1;
  out.upper_abs_radius = out.zeta_sigma.radius;
  out.upper_inv = z1 / z2;
  out.upper_inv_radius = out.upper_inv * (out.zeta_sigma.radius / z1 + out.zeta_2sigma.radius / z2) +
                         out.upper_inv * 4.0 * DBL_EPSILON;
  return out;
}

struct BoundFactor {
  std::size_t n = 0;     ///< factor |zeta(sigma + n i t)|; n = 0 is zeta(sigma)
  Rational exponent;     ///< a_n / a_1
  double abs_value = 0;
  double radius = 0;
};

struct InverseBound {
  double bound = 0;   ///< (zeta(sigma)^{a_0} prod_{n>=2} |zeta(sigma+nit)|^{a_n})^{1/a_1}
  double radius = 0;  ///< first-order propagation of the factor radii
  std::vector<BoundFactor> factors;
};

namespace detail {

inline void require_admissible(const TrigPoly<Rational>& poly) {
  const auto report = check_conditions(poly, CertMode::exact);
  std::string failed;
  auto add = [&](bool ok, const char* name) {
    if (!ok) failed += failed.empty() ? name : std::string(", ") + name;
  };
  add(report.a0_positive, "a0 > 0");
  add(report.condI, "Condition I");
  add(report.condII, "Condition II");
  add(report.condIII, "Condition III");
  add(report.nonneg.verdict == Verdict::nonnegative, "non-negativity");
  if (!failed.empty()) throw ContractError("polynomial is not admissible: " + failed);
}

}  // namespace detail

/// Upper bound on 1/|zeta(sigma + it)| from a non-negative cosine polynomial
/// satisfying Conditions I-III:
///
///   1/|zeta(sigma+it)| <= (zeta(sigma)^{a_0} prod_{n>=2} |zeta(sigma+nit)|^{a_n})^{1/a_1}.
inline InverseBound trig_inverse_bound(const TrigPoly<Rational>& poly, const SigmaT& arg) {
  detail::require_admissible(poly);
  const Rational a1 = poly.coefficient(1);
  InverseBound out;
  double log_bound = 0;
  double rel_radius = 0;
  for (std::size_t n = 0; n <= poly.degree(); ++n) {
    if (n == 1 || poly.coefficient(n) == 0) continue;
    BoundFactor f;
    f.n = n;
    f.exponent = poly.coefficient(n) / a1;
    const SigmaT at(arg.sigma(), static_cast<double>(n) * arg.t());
    const auto z = zeta_em(at, factor_target(at));
    f.abs_value = std::abs(z.value);
    f.radius = z.radius + f.abs_value * 2.0 * DBL_EPSILON;
    if (f.radius >= f.abs_value) throw PrecisionError("trig_inverse_bound: factor radius swamps value");
    const double e = to_double(f.exponent);
    log_bound += e * std::log(f.abs_value);
    rel_radius += e * f.radius / f.abs_value;
    out.factors.push_back(f);
  }
  out.bound = std::exp(log_bound);
  out.radius = out.bound * (rel_radius + 8.0 * DBL_EPSILON * (out.factors.size() + 1));
  return out;
}

// ---------------------------------------------------------------------------

enum class Tri { yes, no, indeterminate };

inline std::string to_string(Tri v) {
  switch (v) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    case Tri::indeterminate: return "indeterminate";
  }
  return "?";
}

/// Diagnostics specific to 3 + 4cos(theta) + cos(2 theta).
struct ClassicalDiagnostics {
  double threshold = 0;         ///< zeta(sigma) / zeta(2 sigma)^4
  double threshold_radius = 0;
  double zeta_2it = 0;          ///< |zeta(sigma + 2it)|
  double zeta_2it_radius = 0;
  double limit_coefficient = 0; ///< zeta(2)^{-4} = (6/pi^2)^4, threshold/zeta(sigma) as sigma -> 1+
  double limit_coefficient_radius = 0;
};

struct BoundReport {
  double sigma = 0;
  double t = 0;
  double trivial_upper_inv = 0;
  double trivial_radius = 0;
  double trig_upper_inv = 0;
  double trig_radius = 0;
  std::vector<BoundFactor> factors;
  Tri superior = Tri::indeterminate;  ///< trig bound strictly below the trivial one
  double ratio = 0;                   ///< trig / trivial
  std::optional<ClassicalDiagnostics> classical;
};

inline bool is_classical(const TrigPoly<Rational>& poly) {
  if (!(poly.coefficient(0) > 0)) return false;
  return normalize(poly).poly == TrigPoly<Rational>{Rational(1), Rational(4, 3), Rational(1, 3)};
}

/// (6/pi^2)^4 = zeta(2)^{-4}, evaluated through zeta_em.
inline std::pair<double, double> limit_coefficient() {
  const auto z2 = zeta_em(SigmaT(2.0, 0.0));
  const double z = z2.value.real();
  const double c = 1.0 / (z * z * z * z);
  return {c, c * (4.0 * z2.radius / z + 8.0 * DBL_EPSILON)};
}

/// Compares the trivial bound zeta(sigma)/zeta(2 sigma) with the
/// trigonometric-polynomial bound. `superior` is yes/no only when the error
/// discs do not overlap.
inline BoundReport compare(const TrigPoly<Rational>& poly, const SigmaT& arg) {
  const auto trig = trig_inverse_bound(poly, arg);
  const auto trivial = trivial_bounds(arg.sigma());
  BoundReport r;
  r.sigma = arg.sigma();
  r.t = arg.t();
  r.trivial_upper_inv = trivial.upper_inv;
  r.trivial_radius = trivial.upper_inv_radius;
  r.trig_upper_inv = trig.bound;
  r.trig_radius = trig.radius;
  r.factors = trig.factors;
  r.ratio = trig.bound / trivial.upper_inv;
  if (r.trig_upper_inv + r.trig_radius < r.trivial_upper_inv - r.trivial_radius)
    r.superior = Tri::yes;
  else if (r.trig_upper_inv - r.trig_radius >= r.trivial_upper_inv + r.trivial_radius)
    r.superior = Tri::no;
  else
    r.superior = Tri::indeterminate;

  if (is_classical(poly)) {
    ClassicalDiagnostics d;
    const double z1 = trivial.zeta_sigma.value.real();
    const double z2 = trivial.zeta_2sigma.value.real();
    d.threshold = z1 / std::pow(z2, 4);
    d.threshold_radius =
        d.threshold * (trivial.zeta_sigma.radius / z1 + 4.0 * trivial.zeta_2sigma.radius / z2 +
                       8.0 * DBL_EPSILON);
    for (const auto& f : trig.factors)
      if (f.n == 2) {
        d.zeta_2it = f.abs_value;
        d.zeta_2it_radius = f.radius;
      }
    std::tie(d.limit_coefficient, d.limit_coefficient_radius) = limit_coefficient();
    r.classical = d;
  }
  return r;
}

// ---------------------------------------------------------------------------

/// How sigma = 1 + delta(t) is tied to t along a scan.
struct DeltaRule {
  enum class Kind { inv_log, loglog_over_log, fixed };
  Kind kind = Kind::inv_log;
  double fixed_delta = 0;

  static DeltaRule parse(const std::string& name, std::optional<double> delta = std::nullopt) {
    if (name == "inv_log") return {Kind::inv_log, 0};
    if (name == "loglog_over_log") return {Kind::loglog_over_log, 0};
    if (name == "fixed") {
      if (!delta || !(*delta > 0)) throw InputError("fixed delta rule needs a positive delta");
      return {Kind::fixed, *delta};
    }
    throw InputError("unknown delta rule '" + name + "'");
  }

  std::string name() const {
    switch (kind) {
      case Kind::inv_log: return "inv_log";
      case Kind::loglog_over_log: return "loglog_over_log";
      case Kind::fixed: return "fixed";
    }
    return "?";
  }

  double delta(double t) const {
    switch (kind) {
      case Kind::inv_log:
        if (!(t >= 3)) throw InputError("inv_log rule needs t >= 3");
        return 1.0 / std::log(t);
      case Kind::loglog_over_log:
        if (!(t >= 3)) throw InputError("loglog_over_log rule needs t >= 3");
        return std::log(std::log(t)) / std::log(t);
      case Kind::fixed:
        return fixed_delta;
    }
    return 0;
  }
};

/// Published bound |zeta(1+it)| <= 1.731 log t / log log t (t >= 3), carried
/// as a reference column only.
inline double literature_zeta_1_bound(double t) { return 1.731 * std::log(t) / std::log(std::log(t)); }

struct ScanRow {
  double t = 0;
  double sigma = 0;
  BoundReport report;
  double literature = 0;
};

/// One row per t, in input order.
inline std::vector<ScanRow> scan_curve(const TrigPoly<Rational>& poly, const std::vector<double>& t_list,
                                       const DeltaRule& rule) {
  detail::require_admissible(poly);
  for (double t : t_list) {
    if (!std::isfinite(t)) throw InputError("scan_curve: non-finite t");
    rule.delta(t);  // validates t for the rule before any work is done
  }
  std::vector<ScanRow> rows;
  rows.reserve(t_list.size());
  for (double t : t_list) {
    ScanRow row;
    row.t = t;
    row.sigma = 1.0 + rule.delta(t);
    row.report = compare(poly, SigmaT(row.sigma, t));
    row.literature = t >= 3 ? literature_zeta_1_bound(t) : 0.0;
    rows.push_back(std::move(row));
  }
  return rows;
}

/// K points from t_min to t_max, geometrically spaced.
inline std::vector<double> log_spaced(double t_min, double t_max, int points) {
  if (points < 1 || !(t_min > 0) || !(t_max >= t_min))
    throw InputError("log_spaced: need points >= 1 and 0 < t_min <= t_max");
  std::vector<double> out;
  if (points == 1) return {t_min};
  const double step = std::log(t_max / t_min) / (points - 1);
  for (int i = 0; i < points; ++i)
    out.push_back(i + 1 == points ? t_max : t_min * std::exp(step * i));
  return out;
}

}  // namespace trigbound
