#pragma once

// Exact real-root counting and isolation with Sturm sequences.

#include <cstddef>
#include <vector>

#include "trigbound/algebraic_poly.hpp"
#include "trigbound/rational.hpp"

namespace trigbound {

using QPoly = AlgebraicPoly<Rational>;

/// p / gcd(p, p'): same distinct roots, all simple.
inline QPoly square_free_part(const QPoly& p) {
  if (p.degree() == 0) return p;
  QPoly d = gcd(p, derivative(p));
  return divmod(p, d).first;
}

/// Product of the square-free factors of odd multiplicity (Yun's algorithm).
/// Its real roots are exactly the points where p changes sign.
inline QPoly odd_multiplicity_part(const QPoly& p) {
  QPoly result = QPoly::constant(Rational(1));
  if (p.degree() == 0) return result;
  QPoly dp = derivative(p);
  QPoly a = gcd(p, dp);
  QPoly b = divmod(p, a).first;
  QPoly c = divmod(dp, a).first;
  QPoly d = c - derivative(b);
  for (std::size_t multiplicity = 1; b.degree() > 0; ++multiplicity) {
    QPoly factor = gcd(b, d);
    if (multiplicity % 2 == 1) result = result * factor;
    b = divmod(b, factor).first;
    c = divmod(d, factor).first;
    d = c - derivative(b);
  }
  return result;
}

/// Root bracket (lo, hi] holding exactly one root; lo == hi marks an exact root.
struct RootBracket {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

/// Sturm chain of a square-free polynomial.
///
/// The sign-variation count V is right-continuous for square-free input, so
/// V(a) - V(b) is the number of distinct roots in (a, b] for any a < b,
/// endpoints included.
class SturmChain {
 public:
  explicit SturmChain(const QPoly& square_free) {
    if (square_free.is_zero()) throw InputError("SturmChain: zero polynomial");
    chain_.push_back(normalized(square_free));
    if (square_free.degree() == 0) return;
    chain_.push_back(normalized(derivative(square_free)));
    while (chain_.back().degree() > 0) {
      QPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(normalized(r.scaled(Rational(-1))));
    }
  }

  const QPoly& base() const { return chain_.front(); }

  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& p : chain_) {
      const Rational v = p(x);
      const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Number of distinct roots in (a, b].
  int count_roots(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    return variations(a) - variations(b);
  }

  /// Brackets every root in (a, b], one root per bracket, sorted ascending.
  std::vector<RootBracket> isolate(const Rational& a, const Rational& b) const {
    std::vector<RootBracket> out;
    isolate_into(a, b, count_roots(a, b), out);
    return out;
  }

  /// Shrinks a single-root bracket to width <= max_width (or to an exact root).
  RootBracket refine(RootBracket bracket, const Rational& max_width) const {
    if (!bracket.exact() && base()(bracket.hi) == 0) return {bracket.hi, bracket.hi};
    while (!bracket.exact() && bracket.hi - bracket.lo > max_width) {
      const Rational mid = (bracket.lo + bracket.hi) / 2;
      if (base()(mid) == 0) return {mid, mid};
      if (count_roots(bracket.lo, mid) == 1)
        bracket.hi = mid;
      else
        bracket.lo = mid;
    }
    return bracket;
  }

 private:
  static QPoly normalized(const QPoly& p) {
    // Positive rescaling keeps every sign and limits coefficient growth.
    return p.scaled(Rational(1) / abs_value(p.leading()));
  }

  void isolate_into(const Rational& a, const Rational& b, int count,
                    std::vector<RootBracket>& out) const {
    if (count <= 0) return;
    if (count == 1) {
      out.push_back({a, b});
      return;
    }
    const Rational mid = (a + b) / 2;
    const int left = count_roots(a, mid);
    isolate_into(a, mid, left, out);
    isolate_into(mid, b, count - left, out);
  }

  std::vector<QPoly> chain_;
};

}  // namespace trigbound
