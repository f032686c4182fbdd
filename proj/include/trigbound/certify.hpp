#pragma once

// Global minimum of g on [-1, 1] and the non-negativity certificate of a
// cosine polynomial f(theta) = g(cos theta).

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "trigbound/algebraic_poly.hpp"
#include "trigbound/errors.hpp"
#include "trigbound/rational.hpp"
#include "trigbound/sturm.hpp"
#include "trigbound/trig_poly.hpp"

namespace trigbound {

inline constexpr double kDefaultCertifyTol = 1e-9;
/// Bracket width at which numeric critical-point search stops subdividing.
inline constexpr double kNumericBracketWidth = 1e-12;

/// m is within `radius` of min g on [-1,1]; g(x) == m up to the same radius.
template <ScalarType Scalar>
struct MinResult {
  Scalar x;
  Scalar value;
  Scalar radius;
};

namespace detail {

template <ScalarType Scalar>
Scalar weighted_abs_sum(const AlgebraicPoly<Scalar>& g, int order) {
  // sum_k k(k-1)...(k-order+1) |c_k|: bound for |g^(order)| on [-1, 1].
  Scalar total(0);
  const auto c = g.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    long weight = 1;
    for (int j = 0; j < order; ++j) weight *= static_cast<long>(k) - j;
    if (weight <= 0) continue;
    total += Scalar(weight) * abs_value(c[k]);
  }
  return total;
}

/// Coefficients of p(m + u) in powers of u (Taylor shift, Horner scheme).
inline std::vector<double> taylor_shift(std::span<const double> c, double m) {
  std::vector<double> d(c.begin(), c.end());
  const std::size_t n = d.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = n - 1; k > i; --k) d[k - 1] += m * d[k];
  return d;
}

/// Enclosure [lo, hi] of p over [m - h, m + h] from the centred expansion.
inline std::pair<double, double> enclose(std::span<const double> c, double m, double h) {
  if (c.empty()) return {0.0, 0.0};
  const auto d = taylor_shift(c, m);
  double spread = 0.0;
  double hk = 1.0;
  for (std::size_t k = 1; k < d.size(); ++k) {
    hk *= h;
    spread += std::abs(d[k]) * hk;
  }
  double scale = 0.0;
  for (double v : d) scale += std::abs(v);
  const double slack = 4.0 * static_cast<double>(c.size() + 1) * DBL_EPSILON * scale;
  return {d[0] - spread - slack, d[0] + spread + slack};
}

inline MinResult<Rational> min_exact(const QPoly& g, const Rational& tol) {
  struct Candidate {
    Rational x, value, err;
  };
  std::vector<Candidate> candidates{{Rational(-1), g(Rational(-1)), Rational(0)},
                                    {Rational(1), g(Rational(1)), Rational(0)}};
  const QPoly dg = derivative(g);
  if (!dg.is_zero() && dg.degree() > 0) {
    const SturmChain chain(square_free_part(dg));
    const Rational slope = weighted_abs_sum(g, 1);
    const Rational curvature = weighted_abs_sum(g, 2);
    // |g(mid) - g(c)| for a critical point c within half a bracket of mid.
    auto error_for = [&](const Rational& width) {
      const Rational half = width / 2;
      return std::min(slope * half, curvature * half * half / 2);
    };
    Rational width(1);
    while (error_for(width) > tol) width /= 2;
    for (auto bracket : chain.isolate(Rational(-1), Rational(1))) {
      bracket = chain.refine(bracket, width);
      if (bracket.exact()) {
        candidates.push_back({bracket.lo, g(bracket.lo), Rational(0)});
      } else {
        const Rational mid = (bracket.lo + bracket.hi) / 2;
        candidates.push_back({mid, g(mid), error_for(bracket.hi - bracket.lo)});
      }
    }
  }
  const auto best = std::min_element(candidates.begin(), candidates.end(),
                                     [](const auto& a, const auto& b) { return a.value < b.value; });
  Rational lower = best->value;
  for (const auto& c : candidates) lower = std::min(lower, Rational(c.value - c.err));
  return {best->x, best->value, Rational(best->value - lower)};
}

inline MinResult<double> min_numeric(const AlgebraicPoly<double>& g) {
  const auto c = g.coefficients();
  double coeff_scale = 0.0;
  for (double v : c) coeff_scale += std::abs(v);
  const double rounding = 4.0 * static_cast<double>(c.size() + 1) * DBL_EPSILON * coeff_scale;

  double best_x = -1.0;
  double best_value = g(-1.0);
  auto consider = [&](double x) {
    const double v = g(x);
    if (v < best_value) {
      best_value = v;
      best_x = x;
    }
  };
  consider(1.0);

  const AlgebraicPoly<double> dg = derivative(g);
  double lower = best_value;
  if (!dg.is_zero() && dg.degree() > 0) {
    struct Piece {
      double a, b;
    };
    std::vector<Piece> pending;
    const int initial = 4 * static_cast<int>(g.degree() + 1);
    for (int i = 0; i < initial; ++i) {
      const double a = -1.0 + 2.0 * i / initial;
      const double b = i + 1 == initial ? 1.0 : -1.0 + 2.0 * (i + 1) / initial;
      pending.push_back({a, b});
      consider(a);
    }
    std::vector<Piece> tiny;
    while (!pending.empty()) {
      const Piece p = pending.back();
      pending.pop_back();
      const double m = 0.5 * (p.a + p.b);
      const double h = 0.5 * (p.b - p.a);
      const auto [glo, ghi] = enclose(g.coefficients(), m, h);
      if (glo > best_value) continue;  // cannot hold the minimum
      const auto [dlo, dhi] = enclose(dg.coefficients(), m, h);
      if (dlo > 0.0 || dhi < 0.0) {
        // Sign of g' certified: monotone piece, minimum at an endpoint.
        consider(p.a);
        consider(p.b);
        continue;
      }
      if (p.b - p.a <= kNumericBracketWidth) {
        consider(m);
        tiny.push_back(p);
        continue;
      }
      pending.push_back({p.a, m});
      pending.push_back({m, p.b});
    }
    for (const auto& p : tiny) {
      const double m = 0.5 * (p.a + p.b);
      const double h = 0.5 * (p.b - p.a);
      const auto [dlo, dhi] = enclose(dg.coefficients(), m, h);
      const double slope = std::max(std::abs(dlo), std::abs(dhi));
      lower = std::min(lower, g(m) - slope * h);
    }
  }
  lower = std::min(lower, best_value);
  return {best_x, best_value, (best_value - lower) + rounding};
}

}  // namespace detail

/// Global minimum of g over [-1, 1] to within `tol`.
///
/// Exact instantiation: critical points are isolated with a Sturm chain of
/// the square-free part of g' and refined until the mean-value error bound
/// is below tol. Binary64 instantiation: subdivision with certified enclosures
/// of g' down to brackets of width 1e-12; the reported radius includes a
/// Horner rounding allowance.
template <ScalarType Scalar>
MinResult<Scalar> min_on_interval(const AlgebraicPoly<Scalar>& g, const Scalar& tol) {
  if (!(tol > Scalar(0))) throw InputError("min_on_interval: tol must be positive");
  if constexpr (is_exact_v<Scalar>)
    return detail::min_exact(g, tol);
  else {
    auto result = detail::min_numeric(g);
    if (result.radius > tol)
      throw PrecisionError("min_on_interval: binary64 radius " + std::to_string(result.radius) +
                           " exceeds tol " + std::to_string(tol));
    return result;
  }
}

enum class CertMode { exact, numeric };
enum class Verdict { nonnegative, negative_witness, inconclusive };
enum class CertMethod { exact_sturm, numeric };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::nonnegative: return "nonnegative";
    case Verdict::negative_witness: return "negative-witness";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

inline std::string to_string(CertMethod m) {
  return m == CertMethod::exact_sturm ? "exact-sturm" : "numeric";
}

template <ScalarType Scalar>
struct Witness {
  double theta;        ///< arccos(x)
  Scalar x;            ///< cos(theta) where the witness was found
  Scalar value;        ///< g(x); exact in exact mode
  double value_at_theta;  ///< f(theta) re-evaluated in binary64
};

template <ScalarType Scalar>
struct NonnegCertificate {
  Verdict verdict = Verdict::inconclusive;
  CertMethod method = CertMethod::numeric;
  std::optional<Witness<Scalar>> witness;
  Scalar margin{0};        ///< certified lower bound for min f
  Scalar min_estimate{0};  ///< attained value closest to the minimum
  Scalar radius{0};
};

namespace detail {

/// Sum of |coefficients| of T_n in the monomial basis, for n = 0..N.
inline std::vector<double> chebyshev_abs_norms(std::size_t N) {
  std::vector<double> out(N + 1, 1.0);
  std::vector<double> prev{1.0}, cur{0.0, 1.0};
  for (std::size_t n = 1; n <= N; ++n) {
    double s = 0.0;
    for (double v : cur) s += std::abs(v);
    out[n] = s;
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t k = 0; k < cur.size(); ++k) next[k + 1] += 2.0 * cur[k];
    for (std::size_t k = 0; k < prev.size(); ++k) next[k] -= prev[k];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

inline NonnegCertificate<double> certify_numeric(const TrigPoly<double>& poly) {
  NonnegCertificate<double> cert;
  cert.method = CertMethod::numeric;
  if (poly.is_zero()) {
    cert.verdict = Verdict::nonnegative;
    return cert;
  }
  const auto g = to_algebraic(poly);
  // Monomial conversion error on top of the evaluation radius.
  const auto norms = chebyshev_abs_norms(poly.degree());
  double conversion = 0.0;
  for (std::size_t n = 0; n <= poly.degree(); ++n)
    conversion += std::abs(poly.coefficient(n)) * norms[n];
  conversion *= 4.0 * static_cast<double>(poly.degree() + 2) * DBL_EPSILON;
  const auto mr = min_numeric(g);
  cert.min_estimate = mr.value;
  cert.radius = mr.radius + conversion;
  cert.margin = mr.value - cert.radius;
  if (cert.margin >= 0.0) {
    cert.verdict = Verdict::nonnegative;
  } else if (mr.value + cert.radius < 0.0) {
    cert.verdict = Verdict::negative_witness;
    const double x = std::clamp(mr.x, -1.0, 1.0);
    const double theta = std::acos(x);
    cert.witness = Witness<double>{theta, x, mr.value, evaluate(poly, theta)};
  }
  return cert;
}

inline NonnegCertificate<Rational> certify_exact(const TrigPoly<Rational>& poly, const Rational& tol) {
  NonnegCertificate<Rational> cert;
  cert.method = CertMethod::exact_sturm;
  if (poly.is_zero()) {
    cert.verdict = Verdict::nonnegative;
    return cert;
  }
  const QPoly g = to_algebraic(poly);
  bool nonnegative = false;
  const QPoly q = odd_multiplicity_part(g);
  int sign_changes = 0;
  if (q.degree() > 0) {
    const SturmChain chain(q);
    sign_changes = chain.count_roots(Rational(-1), Rational(1)) - (q(Rational(1)) == 0 ? 1 : 0);
  }
  if (sign_changes == 0) {
    // g keeps one sign on [-1, 1]; read it at any point that is not a root.
    for (long k = 0;; ++k) {
      const Rational probe = k == 0 ? Rational(0) : Rational(k % 2 ? 1 : -1, (k + 3) / 2);
      const Rational v = g(probe);
      if (v != 0) {
        nonnegative = v > 0;
        break;
      }
    }
  }
  if (nonnegative) {
    const auto mr = min_on_interval<Rational>(g, tol);
    cert.verdict = Verdict::nonnegative;
    cert.min_estimate = mr.value;
    cert.radius = mr.radius;
    cert.margin = std::max(Rational(0), Rational(mr.value - mr.radius));
    return cert;
  }
  // A negative value exists; tighten until an attained value is below zero.
  Rational t = tol;
  auto mr = min_on_interval<Rational>(g, t);
  while (mr.value >= 0) {
    t /= 16;
    mr = min_on_interval<Rational>(g, t);
  }
  cert.verdict = Verdict::negative_witness;
  cert.min_estimate = mr.value;
  cert.radius = mr.radius;
  cert.margin = mr.value - mr.radius;
  const double theta = std::acos(std::clamp(to_double(mr.x), -1.0, 1.0));
  cert.witness = Witness<Rational>{theta, mr.x, mr.value, evaluate(poly, theta)};
  return cert;
}

}  // namespace detail

/// Certificate that f(theta) >= 0 for all real theta.
///
/// Exact mode gives an unconditional verdict: g = f(arccos x) changes sign on
/// [-1, 1] only at roots of odd multiplicity, which are counted with a Sturm
/// chain. Numeric mode answers nonnegative only when min - radius >= 0 and
/// negative only when min + radius < 0.
template <ScalarType Scalar>
NonnegCertificate<Scalar> certify_nonnegative(const TrigPoly<Scalar>& poly,
                                              CertMode mode = CertMode::exact,
                                              double tol = kDefaultCertifyTol) {
  if (!(tol > 0)) throw InputError("certify_nonnegative: tol must be positive");
  if constexpr (is_exact_v<Scalar>) {
    if (mode == CertMode::exact) return detail::certify_exact(poly, rational_from_double(tol));
    const auto c = detail::certify_numeric(to_double(poly));
    NonnegCertificate<Rational> out;
    out.verdict = c.verdict;
    out.method = c.method;
    out.margin = rational_from_double(c.margin);
    out.min_estimate = rational_from_double(c.min_estimate);
    out.radius = rational_from_double(c.radius);
    if (c.witness)
      out.witness = Witness<Rational>{c.witness->theta, rational_from_double(c.witness->x),
                                      rational_from_double(c.witness->value),
                                      c.witness->value_at_theta};
    return out;
  } else {
    if (mode == CertMode::exact)
      throw ModeError("certify_nonnegative: exact mode needs rational coefficients");
    return detail::certify_numeric(poly);
  }
}

}  // namespace trigbound
