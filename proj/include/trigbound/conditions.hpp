#pragma once

#include <optional>
#include <vector>

#include "trigbound/certify.hpp"
#include "trigbound/errors.hpp"
#include "trigbound/rational.hpp"
#include "trigbound/trig_poly.hpp"

namespace trigbound {

/// Relative tolerance for boundary comparisons in binary64 mode.
inline constexpr double kConditionFloatTol = 1e-12;

/// Admissibility of a cosine polynomial for the inverse-zeta bound:
///   I.   a_1 > 0
///   II.  sum_n |a_n| <= 2 a_1
///   III. a_n >= 0 for n >= 2
template <ScalarType Scalar>
struct ConditionReport {
  bool condI = false;
  bool condII = false;
  bool condIII = false;
  NonnegCertificate<Scalar> nonneg;
  std::optional<Scalar> ratio;     ///< a_0 / a_1, only when condI
  std::vector<Scalar> exponents;   ///< (a_0, a_2, ..., a_N) / a_1, only when condI
  Scalar slackII{0};               ///< 2 a_1 - sum |a_n|
  Scalar a1{0};
  Scalar abs_sum{0};               ///< sum_{n=0}^N |a_n|
  bool a0_positive = false;
  /// Zero-free-region admissibility (a_n >= 0 for all n, a_1 > a_0). Informational.
  bool zero_free_region_admissible = false;

  bool all_pass() const {
    return condI && condII && condIII && a0_positive && nonneg.verdict == Verdict::nonnegative;
  }
};

/// Evaluates Conditions I-III, certifies non-negativity and derives the
/// exponent vector. Exact comparisons for rationals; binary64 comparisons use
/// a tolerance of 1e-12 relative to sum |a_n|, and the raw slack is kept.
template <ScalarType Scalar>
ConditionReport<Scalar> check_conditions(const TrigPoly<Scalar>& poly,
                                         CertMode mode = is_exact_v<Scalar> ? CertMode::exact
                                                                            : CertMode::numeric,
                                         double tol = kDefaultCertifyTol) {
  ConditionReport<Scalar> report;
  const auto a = poly.coefficients();
  for (const auto& c : a) report.abs_sum += abs_value(c);
  Scalar eps(0);
  if constexpr (!is_exact_v<Scalar>) eps = kConditionFloatTol * report.abs_sum;

  report.a1 = poly.coefficient(1);
  report.condI = report.a1 > eps;
  report.slackII = Scalar(2) * report.a1 - report.abs_sum;
  report.condII = report.slackII >= -eps;
  report.condIII = true;
  for (std::size_t n = 2; n < a.size(); ++n)
    if (a[n] < -eps) report.condIII = false;
  report.a0_positive = poly.coefficient(0) > Scalar(0);

  bool all_nonneg = true;
  for (const auto& c : a)
    if (c < -eps) all_nonneg = false;
  report.zero_free_region_admissible = all_nonneg && report.a1 > poly.coefficient(0);

  report.nonneg = certify_nonnegative(poly, mode, tol);

  if (report.condI) {
    report.ratio = poly.coefficient(0) / report.a1;
    report.exponents.push_back(poly.coefficient(0) / report.a1);
    for (std::size_t n = 2; n < a.size(); ++n) report.exponents.push_back(a[n] / report.a1);
  }
  return report;
}

/// (sum |a_n| - a_1) / a_1: total exponent weight on the factors other than
/// 1/|zeta(sigma+it)|. At most 1 exactly when Condition II holds.
template <ScalarType Scalar>
Scalar exponent_budget(const ConditionReport<Scalar>& report) {
  if (!report.condI) throw ContractError("exponent_budget: Condition I fails, a0/a1 undefined");
  return (report.abs_sum - report.a1) / report.a1;
}

}  // namespace trigbound
