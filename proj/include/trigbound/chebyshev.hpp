#pragma once

#include <string>

#include "trigbound/errors.hpp"
#include "trigbound/rational.hpp"

namespace trigbound {

/// T_n(x) by the three-term recurrence T_{k+1} = 2x T_k - T_{k-1}.
/// Satisfies T_n(cos t) = cos(n t); any finite x is accepted.
template <ScalarType Scalar>
Scalar cheb_T(int n, const Scalar& x) {
  if (n < 0) throw InputError("cheb_T: negative order " + std::to_string(n));
  if (!is_finite(x)) throw InputError("cheb_T: non-finite argument");
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  Scalar cur = x;
  for (int k = 1; k < n; ++k) {
    Scalar next = Scalar(2) * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// U_n(x), second kind: U_0 = 1, U_1 = 2x, same recurrence.
/// Satisfies U_n(cos t) = sin((n+1) t) / sin t.
template <ScalarType Scalar>
Scalar cheb_U(int n, const Scalar& x) {
  if (n < 0) throw InputError("cheb_U: negative order " + std::to_string(n));
  if (!is_finite(x)) throw InputError("cheb_U: non-finite argument");
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  Scalar cur = Scalar(2) * x;
  for (int k = 1; k < n; ++k) {
    Scalar next = Scalar(2) * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace trigbound
