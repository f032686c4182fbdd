#pragma once

// The extremal problem: maximize a_1 over cosine polynomials with a_0 = 1,
// f >= 0 and sum |a_n| <= 2 a_1, plus the exact checks that accompany it.

#include <chrono>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "trigbound/algebraic_poly.hpp"
#include "trigbound/certify.hpp"
#include "trigbound/conditions.hpp"
#include "trigbound/errors.hpp"
#include "trigbound/lp.hpp"
#include "trigbound/rational.hpp"
#include "trigbound/trig_poly.hpp"

namespace trigbound {

// ---------------------------------------------------------------------------
// Sequence lemma: max sum_{n>=2} a_n  s.t.  sum a_n (n^2 - 1) = 1, a_n >= 0.

struct LemmaResult {
  std::size_t degree = 0;
  std::vector<Rational> coefficients;  ///< a_2, ..., a_N
  Rational maximum;
  std::vector<std::size_t> support;    ///< indices n with a_n != 0
  /// 1/(n^2 - 1): objective at the vertex supported on {n} alone.
  std::vector<Rational> single_index_vertices;
};

inline LemmaResult lemma_maximize(std::size_t N) {
  if (N < 2) throw InputError("lemma_maximize: degree must be at least 2");
  LpProblem<Rational> prob;
  LpConstraint<Rational> row;
  row.relation = Relation::eq;
  row.rhs = 1;
  for (std::size_t n = 2; n <= N; ++n) {
    prob.objective.emplace_back(1);
    row.coeffs.emplace_back(static_cast<long>(n * n - 1));
  }
  prob.constraints.push_back(row);
  const auto sol = solve_lp(prob);
  if (sol.status != LpStatus::optimal) throw Error("lemma_maximize: LP not optimal");

  LemmaResult out;
  out.degree = N;
  out.coefficients = sol.x;
  out.maximum = sol.objective;
  for (std::size_t n = 2; n <= N; ++n) {
    if (sol.x[n - 2] != 0) out.support.push_back(n);
    out.single_index_vertices.emplace_back(1, static_cast<long>(n * n - 1));
  }
  // Closed form: a_2 = 1/3, everything else zero.
  std::vector<Rational> closed(N - 1, Rational(0));
  closed[0] = Rational(1, 3);
  if (out.maximum != Rational(1, 3) || out.coefficients != closed)
    throw std::logic_error("lemma_maximize: LP optimum disagrees with the closed form");
  return out;
}

// ---------------------------------------------------------------------------
// Cutting-plane solver for max a_1.

struct ExtremalOptions {
  int grid0 = 64;
  double tol = 1e-12;
  int max_rounds = 50;
  bool enforce_iii = false;
  /// Coefficients a_n, n >= 3, are snapped to the simplest rational within this distance.
  double snap_tol = 1e-6;
};

struct TraceRow {
  int round = 0;
  std::size_t grid_size = 0;
  double objective = 0;  ///< a_1 of this round's LP optimum
  double min_value = 0;  ///< attained minimum of the candidate on [-1, 1]
};

struct ExtremalResult {
  std::size_t requested_degree = 0;
  std::size_t effective_degree = 0;
  TrigPoly<Rational> poly;          ///< snapped optimum, a_0 = 1
  std::vector<double> pre_snap;     ///< last cutting-plane iterate (a_0 .. a_N)
  Rational objective;               ///< a_1
  Rational ratio;                   ///< a_0 / a_1
  NonnegCertificate<Rational> certificate;
  int iterations = 0;
  std::vector<TraceRow> trace;
  Rational saturationII;            ///< 2 a_1 - sum |a_n|
  Rational g_minus1;                ///< g(-1)
  Rational g_prime_minus1;          ///< g'(-1)
  double seconds = 0;
};

/// max_rounds was reached before the candidate certified within tol.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> last_iterate,
                   std::vector<TraceRow> trace)
      : Error(what), last_iterate_(std::move(last_iterate)), trace_(std::move(trace)) {}
  const std::vector<double>& last_iterate() const { return last_iterate_; }
  const std::vector<TraceRow>& trace() const { return trace_; }

 private:
  std::vector<double> last_iterate_;
  std::vector<TraceRow> trace_;
};

namespace detail {

/// cos(n theta) rounded to a multiple of 2^-40, so exact LP rows stay small.
inline Rational lp_entry(double c) {
  return rational_from_double(std::ldexp(std::nearbyint(std::ldexp(c, 40)), -40));
}

template <ScalarType LpScalar>
LpScalar to_lp(double c) {
  if constexpr (is_exact_v<LpScalar>)
    return lp_entry(c);
  else
    return c;
}

template <ScalarType LpScalar>
class CuttingPlaneLp {
 public:
  CuttingPlaneLp(std::size_t N, bool enforce_iii) : N_(N), enforce_iii_(enforce_iii) {
    const std::size_t vars = enforce_iii ? N : 2 * N - 1;
    prob_.objective.assign(vars, LpScalar(0));
    prob_.objective[0] = LpScalar(1);
    // Condition II with a_0 = 1:  -a_1 + sum_{n>=2} |a_n| <= -1.
    LpConstraint<LpScalar> cond2;
    cond2.coeffs.assign(vars, LpScalar(1));
    cond2.coeffs[0] = LpScalar(-1);
    cond2.relation = Relation::le;
    cond2.rhs = LpScalar(-1);
    prob_.constraints.push_back(std::move(cond2));
  }

  /// f(theta) >= 0 given the cosines cos(n theta), n = 1..N.
  void add_point(const std::vector<double>& cosines) {
    LpConstraint<LpScalar> row;
    row.coeffs.assign(prob_.objective.size(), LpScalar(0));
    row.coeffs[0] = to_lp<LpScalar>(cosines[0]);
    for (std::size_t n = 2; n <= N_; ++n) {
      const LpScalar c = to_lp<LpScalar>(cosines[n - 1]);
      row.coeffs[n - 1] = c;
      if (!enforce_iii_) row.coeffs[N_ + n - 2] = -c;
    }
    row.relation = Relation::ge;
    row.rhs = LpScalar(-1);
    prob_.constraints.push_back(std::move(row));
  }

  std::size_t points() const { return prob_.constraints.size() - 1; }

  /// Returns (a_0 .. a_N) of the LP optimum.
  std::vector<double> solve(double& objective) const {
    const auto sol = solve_lp(prob_);
    if (sol.status != LpStatus::optimal)
      throw Error("maximize_a1: cutting-plane LP is " + to_string(sol.status) +
                  " although the classical polynomial is feasible");
    std::vector<double> a(N_ + 1, 0.0);
    a[0] = 1.0;
    a[1] = to_double(sol.x[0]);
    for (std::size_t n = 2; n <= N_; ++n) {
      a[n] = to_double(sol.x[n - 1]);
      if (!enforce_iii_) a[n] -= to_double(sol.x[N_ + n - 2]);
    }
    objective = to_double(sol.objective);
    return a;
  }

 private:
  std::size_t N_;
  bool enforce_iii_;
  LpProblem<LpScalar> prob_;
};

inline std::vector<double> cosines_at(std::size_t N, double theta) {
  std::vector<double> out(N);
  for (std::size_t n = 1; n <= N; ++n) out[n - 1] = std::cos(static_cast<double>(n) * theta);
  return out;
}

/// cos(n j pi / grid) with the angle reduced exactly before evaluation.
inline std::vector<double> grid_cosines(std::size_t N, long j, long grid) {
  std::vector<double> out(N);
  for (std::size_t n = 1; n <= N; ++n) {
    const long k = (static_cast<long>(n) * j) % (2 * grid);
    if (k == 0)
      out[n - 1] = 1.0;
    else if (k == grid)
      out[n - 1] = -1.0;
    else if (2 * k == grid || 2 * k == 3 * grid)
      out[n - 1] = 0.0;
    else
      out[n - 1] = std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(grid));
  }
  return out;
}

/// Rational point on g(-1) = 0, g'(-1) = 0 nearest the float iterate: snap
/// a_3..a_N, then solve the two endpoint equations for a_1 and a_2.
inline TrigPoly<Rational> snap_to_endpoint_system(const std::vector<double>& a, double snap_tol) {
  const std::size_t N = a.size() - 1;
  std::vector<Rational> q(N + 1, Rational(0));
  q[0] = 1;
  Rational sum_alt(0);     // sum_{n>=3} (-1)^n a_n
  Rational sum_weight(0);  // sum_{n>=3} (-1)^n a_n (1 - n^2)
  for (std::size_t n = 3; n <= N; ++n) {
    q[n] = simplest_rational_within(a[n], snap_tol);
    const Rational signed_q = n % 2 == 0 ? q[n] : Rational(-q[n]);
    sum_alt += signed_q;
    sum_weight += signed_q * Rational(1 - static_cast<long>(n * n));
  }
  // g(-1)  = 1 - a_1 + a_2 + sum_alt = 0
  // g'(-1) = a_1 - 4 a_2 - sum_{n>=3} (-1)^n n^2 a_n = 0
  q[2] = (Rational(1) + sum_weight) / 3;
  q[1] = Rational(1) + q[2] + sum_alt;
  return TrigPoly<Rational>(std::move(q));
}

template <ScalarType LpScalar>
ExtremalResult maximize_a1_with(std::size_t N, const ExtremalOptions& opts) {
  if (N < 2) throw InputError("maximize_a1: degree must be at least 2");
  if (N > 64) throw InputError("maximize_a1: degree above 64 is not supported");
  if (opts.grid0 < 1 || !(opts.tol > 0) || opts.max_rounds < 1 || !(opts.snap_tol > 0))
    throw InputError("maximize_a1: invalid options");
  const auto start = std::chrono::steady_clock::now();

  // Enough points that the relaxation is bounded: at least 4N.
  const long grid = std::max<long>(opts.grid0, 4 * static_cast<long>(N));
  CuttingPlaneLp<LpScalar> lp(N, opts.enforce_iii);
  for (long j = 0; j <= grid; ++j) lp.add_point(grid_cosines(N, j, grid));

  ExtremalResult result;
  result.requested_degree = N;
  const Rational tol = rational_from_double(opts.tol);
  std::vector<double> a;
  bool converged = false;
  for (int round = 1; round <= opts.max_rounds; ++round) {
    double objective = 0;
    a = lp.solve(objective);
    const auto g = to_algebraic(to_rational(TrigPoly<double>(a)));
    const auto mr = min_on_interval<Rational>(g, tol / 2);
    result.trace.push_back({round, lp.points(), objective, to_double(mr.value)});
    result.iterations = round;
    if (mr.value - mr.radius >= -tol) {
      converged = true;
      break;
    }
    const double x = std::clamp(to_double(mr.x), -1.0, 1.0);
    lp.add_point(cosines_at(N, std::acos(x)));
  }
  if (!converged)
    throw ConvergenceError("maximize_a1: no certified candidate after " +
                               std::to_string(opts.max_rounds) + " rounds",
                           a, result.trace);

  result.pre_snap = a;
  result.poly = snap_to_endpoint_system(a, opts.snap_tol);
  result.effective_degree = result.poly.degree();
  result.objective = result.poly.coefficient(1);
  result.ratio = Rational(1) / result.objective;

  const auto report = check_conditions(result.poly, CertMode::exact, opts.tol);
  result.certificate = report.nonneg;
  result.saturationII = report.slackII;
  if (!report.condI || !report.condII || result.certificate.verdict != Verdict::nonnegative ||
      (opts.enforce_iii && !report.condIII))
    throw ConvergenceError("maximize_a1: snapped candidate fails exact certification", a,
                           result.trace);
  const auto g = to_algebraic(result.poly);
  result.g_minus1 = g(Rational(-1));
  result.g_prime_minus1 = derivative(g)(Rational(-1));
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace detail

/// Cutting-plane solution of max a_1 subject to a_0 = 1, f >= 0 and
/// Condition II (optionally Condition III), over degree <= N.
///
/// Each round solves the LP over the current grid, finds the global minimum
/// of the candidate exactly, and adds the minimizer as a new constraint until
/// the certified minimum is >= -tol. The final iterate is then snapped onto
/// g(-1) = g'(-1) = 0 and re-certified in exact arithmetic.
inline ExtremalResult maximize_a1(std::size_t N, const ExtremalOptions& opts = {}) {
  return detail::maximize_a1_with<Rational>(N, opts);
}

// ---------------------------------------------------------------------------
// Identities from the optimality argument, evaluated exactly.

struct ExtremalVerification {
  Rational r;                  ///< a_1 - 1
  Rational tail_abs_sum;       ///< sum_{n>=2} |a_n|
  bool r_equals_tail = false;  ///< r == sum_{n>=2} |a_n|
  Rational g_minus1;           ///< g(-1) from the algebraic form
  Rational g_minus1_formula;   ///< -r + sum_{n>=2} |a_n|
  Rational g_prime_minus1;     ///< g'(-1) from the algebraic form
  Rational g_prime_formula;    ///< 1 - sum_{n>=2} |a_n| (n^2 - 1)
  bool sign_pattern = false;   ///< a_n <= 0 for odd n >= 3, a_n >= 0 for even n >= 2
  bool odd_coefficients_zero = false;  ///< a_n == 0 for odd n > 2
  std::size_t effective_degree = 0;
  bool degree_even = false;
  std::vector<std::string> violations;
};

inline ExtremalVerification verify_extremal(const TrigPoly<Rational>& poly) {
  if (poly.coefficient(0) != 1) throw InputError("verify_extremal: normalize first (a0 must be 1)");
  ExtremalVerification v;
  const std::size_t N = poly.degree();
  v.effective_degree = N;
  v.r = poly.coefficient(1) - 1;
  Rational weighted(0);
  v.sign_pattern = true;
  v.odd_coefficients_zero = true;
  for (std::size_t n = 2; n <= N; ++n) {
    const Rational& an = poly.coefficients()[n];
    v.tail_abs_sum += abs_value(an);
    weighted += abs_value(an) * Rational(static_cast<long>(n * n - 1));
    if (n % 2 == 1) {
      if (an > 0) v.sign_pattern = false;
      if (an != 0) v.odd_coefficients_zero = false;
    } else if (an < 0) {
      v.sign_pattern = false;
    }
  }
  v.r_equals_tail = v.r == v.tail_abs_sum;
  const auto g = to_algebraic(poly);
  v.g_minus1 = g(Rational(-1));
  v.g_minus1_formula = v.tail_abs_sum - v.r;
  v.g_prime_minus1 = derivative(g)(Rational(-1));
  v.g_prime_formula = Rational(1) - weighted;
  v.degree_even = N % 2 == 0;

  if (!v.r_equals_tail) v.violations.push_back("r != sum_{n>=2} |a_n|");
  if (v.g_minus1 != 0) v.violations.push_back("g(-1) != 0");
  if (v.g_prime_minus1 < 0) v.violations.push_back("g'(-1) < 0");
  if (!v.sign_pattern) v.violations.push_back("sign pattern: odd a_n > 0 or even a_n < 0");
  if (v.r_equals_tail && v.sign_pattern && v.g_prime_minus1 != v.g_prime_formula)
    v.violations.push_back("g'(-1) != 1 - sum |a_n| (n^2 - 1)");
  if (N >= 2) {
    if (!v.odd_coefficients_zero) v.violations.push_back("nonzero odd coefficient above n = 2");
    if (!v.degree_even) v.violations.push_back("effective degree is odd");
  }
  return v;
}

// ---------------------------------------------------------------------------
// Exhaustive grid search, an optimizer-independent oracle for N = 2, 3.

struct BruteForceResult {
  std::size_t degree = 0;
  int resolution = 0;
  Rational best_a1;
  std::vector<Rational> best_coefficients;  ///< a_0 .. a_N
  std::size_t feasible_points = 0;
  /// Feasible points with a positive odd coefficient beyond a_1 (N = 3 only).
  std::size_t feasible_positive_odd = 0;
};

inline BruteForceResult brute_force_search(std::size_t N, int resolution) {
  if (N != 2 && N != 3) throw InputError("brute_force_search: degree must be 2 or 3");
  if (resolution < 1 || resolution > 400)
    throw InputError("brute_force_search: resolution must be in [1, 400]");
  const long R = resolution;
  const long samples = 4 * R;
  std::vector<std::vector<double>> cosines(samples);
  for (long i = 0; i < samples; ++i)
    cosines[i] = detail::cosines_at(N, std::numbers::pi * static_cast<double>(i) / static_cast<double>(samples - 1));

  BruteForceResult out;
  out.degree = N;
  out.resolution = resolution;
  long best[4] = {R, -1, 0, 0};
  // Coefficients are k / R; work with the integers k.
  for (long k1 = R; k1 <= 2 * R; ++k1) {
    const long budget = k1 - R;  // Condition II: |k2| + |k3| <= k1 - R
    const long k3_max = N == 3 ? budget : 0;
    for (long k3 = -k3_max; k3 <= k3_max; ++k3) {
      const long rest = budget - std::abs(k3);
      for (long k2 = -rest; k2 <= rest; ++k2) {
        // Endpoints exactly: f(0) = sum, f(pi) = R - k1 + k2 - k3.
        if (R - k1 + k2 - k3 < 0 || R + k1 + k2 + k3 < 0) continue;
        bool ok = true;
        for (long i = 1; i + 1 < samples && ok; ++i) {
          const auto& c = cosines[i];
          double f = static_cast<double>(R) + k1 * c[0] + k2 * c[1];
          if (N == 3) f += k3 * c[2];
          ok = f >= 0.0;
        }
        if (!ok) continue;
        ++out.feasible_points;
        if (k3 > 0) ++out.feasible_positive_odd;
        if (k1 > best[1]) {
          best[1] = k1;
          best[2] = k2;
          best[3] = k3;
        }
      }
    }
  }
  if (best[1] < 0) throw Error("brute_force_search: no feasible grid point");
  out.best_a1 = Rational(best[1], R);
  for (std::size_t n = 0; n <= N; ++n) out.best_coefficients.emplace_back(best[n], R);
  return out;
}

}  // namespace trigbound
