#pragma once

// Exact and floating scalar support shared by every module.

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include "trigbound/errors.hpp"

namespace trigbound {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
inline constexpr bool is_exact_v = std::is_same_v<Scalar, Rational>;

template <class Scalar>
concept ScalarType = std::is_same_v<Scalar, double> || std::is_same_v<Scalar, Rational>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline double abs_value(double x) { return std::abs(x); }
inline Rational abs_value(const Rational& x) { return boost::multiprecision::abs(x); }

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Rational&) { return true; }

/// Exact conversion of a finite binary64 value.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite value cannot be made rational");
  return Rational(x);
}

/// Parses "p/q", an integer, or a decimal literal such as "-1.25e-3".
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return InputError("not a rational literal: '" + std::string(text) + "'"); };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    auto valid_int = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
      if (s.empty()) return false;
      for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      return true;
    };
    if (!valid_int(num, true) || !valid_int(den, false)) throw fail();
    auto strip = [](std::string s) {
      s.erase(0, std::min(s.find_first_not_of('0'), s.size() - 1));
      return s;
    };
    std::string num_str(num);
    const bool neg = num_str[0] == '-';
    if (num_str[0] == '+' || neg) num_str.erase(0, 1);
    BigInt p(strip(num_str));
    if (neg) p = -p;
    BigInt q(strip(std::string(den)));
    if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
  }

  bool negative = false;
  std::size_t i = 0;
  if (text[i] == '-' || text[i] == '+') {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long long exponent = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw fail();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw fail();
    ++i;
    std::string exp_str(text.substr(i));
    if (exp_str.empty()) throw fail();
    std::size_t used = 0;
    long long e = 0;
    try {
      e = std::stoll(exp_str, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != exp_str.size() || std::llabs(e) > 100000) throw fail();
    exponent += e;
  }
  // A leading zero would make the string constructor read octal.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  BigInt mantissa(digits);
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::llabs(exponent)));
  Rational value = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  return negative ? Rational(-value) : value;
}

/// "p/q", or "p" when the denominator is one.
inline std::string format_rational(const Rational& x) {
  auto num = boost::multiprecision::numerator(x);
  auto den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Smallest-denominator rational within `tol` of `x` (Stern-Brocot descent
/// via continued fractions). `tol` must be positive.
inline Rational simplest_rational_within(double x, double tol) {
  if (!std::isfinite(x) || !(tol > 0)) throw InputError("simplest_rational_within: bad arguments");
  Rational lo = rational_from_double(x - tol);
  Rational hi = rational_from_double(x + tol);
  if (lo <= 0 && hi >= 0) return Rational(0);
  bool negative = hi < 0;
  if (negative) {
    Rational tmp = -hi;
    hi = -lo;
    lo = tmp;
  }
  // Simplest rational in [lo, hi] with 0 < lo.
  auto simplest = [](auto&& self, const Rational& a, const Rational& b) -> Rational {
    BigInt fl = boost::multiprecision::numerator(a) / boost::multiprecision::denominator(a);
    Rational floor_a(fl);
    if (floor_a == a) return a;
    if (Rational(fl + 1) <= b) return Rational(fl + 1);
    Rational frac_a = a - floor_a;
    Rational frac_b = b - floor_a;
    // 1/frac_b <= 1/x <= 1/frac_a
    Rational inner = self(self, Rational(1) / frac_b, Rational(1) / frac_a);
    return floor_a + Rational(1) / inner;
  };
  Rational r = simplest(simplest, lo, hi);
  return negative ? Rational(-r) : r;
}

}  // namespace trigbound
