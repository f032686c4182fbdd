#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "trigbound/errors.hpp"
#include "trigbound/rational.hpp"
#include "trigbound/trig_poly.hpp"

namespace trigbound {

/// Real polynomial c_0 + c_1 x + ... + c_N x^N in the monomial basis.
template <ScalarType Scalar>
class AlgebraicPoly {
 public:
  using scalar_type = Scalar;

  AlgebraicPoly() = default;

  explicit AlgebraicPoly(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) {
    for (const auto& c : coeffs_)
      if (!is_finite(c)) throw InputError("AlgebraicPoly: non-finite coefficient");
    trim();
  }

  AlgebraicPoly(std::initializer_list<Scalar> coefficients)
      : AlgebraicPoly(std::vector<Scalar>(coefficients)) {}

  static AlgebraicPoly constant(const Scalar& c) { return AlgebraicPoly(std::vector<Scalar>{c}); }

  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Scalar> coefficients() const { return coeffs_; }
  Scalar coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

  /// Horner evaluation.
  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const AlgebraicPoly&, const AlgebraicPoly&) = default;

  friend AlgebraicPoly operator+(const AlgebraicPoly& a, const AlgebraicPoly& b) {
    std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
    return AlgebraicPoly(std::move(out));
  }

  friend AlgebraicPoly operator-(const AlgebraicPoly& a, const AlgebraicPoly& b) {
    std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] -= b.coeffs_[k];
    return AlgebraicPoly(std::move(out));
  }

  friend AlgebraicPoly operator*(const AlgebraicPoly& a, const AlgebraicPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return AlgebraicPoly(std::move(out));
  }

  AlgebraicPoly scaled(const Scalar& factor) const {
    std::vector<Scalar> out(coeffs_);
    for (auto& c : out) c *= factor;
    return AlgebraicPoly(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

/// Formal derivative.
template <ScalarType Scalar>
AlgebraicPoly<Scalar> derivative(const AlgebraicPoly<Scalar>& g) {
  const auto c = g.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Scalar> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = Scalar(static_cast<long>(k)) * c[k];
  return AlgebraicPoly<Scalar>(std::move(out));
}

/// Monomial expansion of T_n, built with T_{k+1} = 2x T_k - T_{k-1}.
/// Integer coefficients, so the Rational instantiation is exact.
template <ScalarType Scalar>
AlgebraicPoly<Scalar> chebyshev_T_poly(std::size_t n) {
  AlgebraicPoly<Scalar> prev = AlgebraicPoly<Scalar>::constant(Scalar(1));
  if (n == 0) return prev;
  AlgebraicPoly<Scalar> cur({Scalar(0), Scalar(1)});
  const AlgebraicPoly<Scalar> two_x({Scalar(0), Scalar(2)});
  for (std::size_t k = 1; k < n; ++k) {
    AlgebraicPoly<Scalar> next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// g with g(cos theta) = f(theta).
template <ScalarType Scalar>
AlgebraicPoly<Scalar> to_algebraic(const TrigPoly<Scalar>& poly) {
  const auto a = poly.coefficients();
  if (a.empty()) return {};
  std::vector<Scalar> out(a.size(), Scalar(0));
  // Walk the T_n recurrence directly on coefficient vectors.
  std::vector<Scalar> prev{Scalar(1)};
  std::vector<Scalar> cur{Scalar(0), Scalar(1)};
  out[0] += a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    if (a[n] != Scalar(0))
      for (std::size_t k = 0; k < cur.size(); ++k) out[k] += a[n] * cur[k];
    std::vector<Scalar> next(cur.size() + 1, Scalar(0));
    for (std::size_t k = 0; k < cur.size(); ++k) next[k + 1] += Scalar(2) * cur[k];
    for (std::size_t k = 0; k < prev.size(); ++k) next[k] -= prev[k];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return AlgebraicPoly<Scalar>(std::move(out));
}

inline AlgebraicPoly<double> to_double(const AlgebraicPoly<Rational>& g) {
  std::vector<double> out;
  for (const auto& c : g.coefficients()) out.push_back(to_double(c));
  return AlgebraicPoly<double>(std::move(out));
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <ScalarType Scalar>
std::pair<AlgebraicPoly<Scalar>, AlgebraicPoly<Scalar>> divmod(const AlgebraicPoly<Scalar>& a,
                                                               const AlgebraicPoly<Scalar>& b) {
  if (b.is_zero()) throw InputError("divmod: division by the zero polynomial");
  std::vector<Scalar> rem(a.coefficients().begin(), a.coefficients().end());
  const auto bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {AlgebraicPoly<Scalar>{}, a};
  std::vector<Scalar> quot(rem.size() - db, Scalar(0));
  const Scalar lead = bc.back();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == Scalar(0)) continue;
    const Scalar factor = rem[i] / lead;
    quot[i - db] = factor;
    for (std::size_t k = 0; k <= db; ++k) rem[i - db + k] -= factor * bc[k];
    rem[i] = Scalar(0);
  }
  rem.resize(db);
  return {AlgebraicPoly<Scalar>(std::move(quot)), AlgebraicPoly<Scalar>(std::move(rem))};
}

/// Monic greatest common divisor (exact arithmetic only).
inline AlgebraicPoly<Rational> gcd(AlgebraicPoly<Rational> a, AlgebraicPoly<Rational> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.leading());
}

}  // namespace trigbound
