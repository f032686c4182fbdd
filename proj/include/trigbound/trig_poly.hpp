#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "trigbound/errors.hpp"
#include "trigbound/rational.hpp"

namespace trigbound {

/// Cosine series f(theta) = sum_{n=0}^{N} a_n cos(n theta).
///
/// Trailing zero coefficients are trimmed on construction so that a_N != 0
/// whenever the polynomial is non-zero. Non-negativity and a_0 > 0 are *not*
/// part of the type; they are checked properties (see certify.hpp and
/// conditions.hpp) because candidate polynomials routinely violate them.
template <ScalarType Scalar>
class TrigPoly {
 public:
  using scalar_type = Scalar;

  TrigPoly() = default;

  explicit TrigPoly(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) {
    for (const auto& c : coeffs_)
      if (!is_finite(c)) throw InputError("TrigPoly: non-finite coefficient");
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  TrigPoly(std::initializer_list<Scalar> coefficients)
      : TrigPoly(std::vector<Scalar>(coefficients)) {}

  /// Degree N; the zero polynomial has degree 0.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  std::span<const Scalar> coefficients() const { return coeffs_; }

  /// a_n, zero beyond the degree.
  Scalar coefficient(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Scalar(0); }

  TrigPoly scaled(const Scalar& factor) const {
    std::vector<Scalar> out(coeffs_);
    for (auto& c : out) c *= factor;
    return TrigPoly(std::move(out));
  }

  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

inline TrigPoly<double> to_double(const TrigPoly<Rational>& poly) {
  std::vector<double> out;
  out.reserve(poly.coefficients().size());
  for (const auto& c : poly.coefficients()) out.push_back(to_double(c));
  return TrigPoly<double>(std::move(out));
}

inline TrigPoly<double> to_double(const TrigPoly<double>& poly) { return poly; }

/// Exact image of a binary64 polynomial.
inline TrigPoly<Rational> to_rational(const TrigPoly<double>& poly) {
  std::vector<Rational> out;
  for (double c : poly.coefficients()) out.push_back(rational_from_double(c));
  return TrigPoly<Rational>(std::move(out));
}

/// Clenshaw summation of sum a_n T_n(x). Exact for rational x and coefficients.
template <ScalarType Scalar>
Scalar chebyshev_sum(std::span<const Scalar> coeffs, const Scalar& x) {
  if (coeffs.empty()) return Scalar(0);
  Scalar b1(0);
  Scalar b2(0);
  const Scalar two_x = Scalar(2) * x;
  for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
    Scalar b0 = coeffs[k] + two_x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs[0] + x * b1 - b2;
}

/// f(theta), via the backward cosine recurrence with x = cos(theta).
template <ScalarType Scalar>
double evaluate(const TrigPoly<Scalar>& poly, double theta) {
  if (!std::isfinite(theta)) throw InputError("evaluate: non-finite theta");
  const auto as_double = to_double(poly);
  return chebyshev_sum<double>(as_double.coefficients(), std::cos(theta));
}

/// Scaled copy with a_0 = 1, plus the factor 1/a_0 that was applied.
template <ScalarType Scalar>
struct Normalized {
  TrigPoly<Scalar> poly;
  Scalar factor;
};

template <ScalarType Scalar>
Normalized<Scalar> normalize(const TrigPoly<Scalar>& poly) {
  const Scalar a0 = poly.coefficient(0);
  if (!(a0 > Scalar(0))) throw ContractError("normalize: a0 must be positive");
  const Scalar factor = Scalar(1) / a0;
  std::vector<Scalar> out(poly.coefficients().begin(), poly.coefficients().end());
  out[0] = Scalar(1);
  for (std::size_t n = 1; n < out.size(); ++n) out[n] *= factor;
  return {TrigPoly<Scalar>(std::move(out)), factor};
}

}  // namespace trigbound
