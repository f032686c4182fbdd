#pragma once

// Dense two-phase tableau simplex with Bland's anti-cycling rule.
// The Rational instantiation is exact; the binary64 one compares against a
// fixed pivot tolerance.

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "trigbound/errors.hpp"
#include "trigbound/rational.hpp"

namespace trigbound {

enum class Relation { le, ge, eq };
enum class LpStatus { optimal, infeasible, unbounded };

inline std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "?";
}

template <ScalarType Scalar>
struct LpConstraint {
  std::vector<Scalar> coeffs;
  Relation relation = Relation::le;
  Scalar rhs{0};
};

/// maximize objective . x  subject to constraints and x >= lower_bounds.
/// An empty lower_bounds vector means all zero.
template <ScalarType Scalar>
struct LpProblem {
  std::vector<Scalar> objective;
  std::vector<LpConstraint<Scalar>> constraints;
  std::vector<Scalar> lower_bounds;

  std::size_t num_vars() const { return objective.size(); }

  void validate() const {
    if (objective.empty()) throw InputError("LpProblem: no variables");
    if (!lower_bounds.empty() && lower_bounds.size() != objective.size())
      throw InputError("LpProblem: lower_bounds size mismatch");
    for (std::size_t i = 0; i < constraints.size(); ++i)
      if (constraints[i].coeffs.size() != objective.size())
        throw InputError("LpProblem: constraint " + std::to_string(i) + " has wrong width");
  }
};

template <ScalarType Scalar>
struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<Scalar> x;
  Scalar objective{0};
  std::size_t pivots = 0;
};

namespace detail {

template <ScalarType Scalar>
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), Scalar(0)), basis_(rows, 0) {}

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * (cols_ + 1) + c]; }
  Scalar& rhs(std::size_t r) { return at(r, cols_); }
  Scalar& cost(std::size_t c) { return at(rows_, c); }  ///< reduced-cost row
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const Scalar inv = Scalar(1) / at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) *= inv;
    at(r, c) = Scalar(1);
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const Scalar f = at(i, c);
      if (f == Scalar(0)) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (at(r, j) != Scalar(0)) at(i, j) -= f * at(r, j);
      at(i, c) = Scalar(0);
    }
    basis_[r] = c;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
  std::vector<std::size_t> basis_;
};

template <ScalarType Scalar>
bool positive(const Scalar& v) {
  if constexpr (is_exact_v<Scalar>)
    return v > 0;
  else
    return v > 1e-11;
}

template <ScalarType Scalar>
bool negative(const Scalar& v) {
  if constexpr (is_exact_v<Scalar>)
    return v < 0;
  else
    return v < -1e-11;
}

/// Runs Bland-rule iterations on the cost row; columns >= `allowed` never enter.
/// Returns false when unbounded.
template <ScalarType Scalar>
bool run_simplex(Tableau<Scalar>& t, std::size_t allowed, std::size_t& pivots) {
  for (;;) {
    std::size_t enter = t.cols();
    for (std::size_t j = 0; j < allowed; ++j)
      if (negative(t.cost(j))) {
        enter = j;
        break;
      }
    if (enter == t.cols()) return true;
    std::size_t leave = t.rows();
    Scalar best_ratio(0);
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (!positive(t.at(i, enter))) continue;
      const Scalar ratio = t.rhs(i) / t.at(i, enter);
      if (leave == t.rows() || ratio < best_ratio ||
          (ratio == best_ratio && t.basis()[i] < t.basis()[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == t.rows()) return false;
    t.pivot(leave, enter);
    ++pivots;
  }
}

}  // namespace detail

template <ScalarType Scalar>
LpSolution<Scalar> solve_lp(const LpProblem<Scalar>& prob) {
  prob.validate();
  const std::size_t n = prob.num_vars();
  const std::size_t m = prob.constraints.size();
  std::vector<Scalar> lower = prob.lower_bounds.empty() ? std::vector<Scalar>(n, Scalar(0))
                                                        : prob.lower_bounds;

  // Shift x = lower + y and make every right-hand side non-negative.
  struct Row {
    std::vector<Scalar> coeffs;
    Relation rel;
    Scalar rhs;
  };
  std::vector<Row> rows;
  rows.reserve(m);
  std::size_t slack_count = 0, art_count = 0;
  for (const auto& c : prob.constraints) {
    Row r{c.coeffs, c.relation, c.rhs};
    for (std::size_t j = 0; j < n; ++j) r.rhs -= r.coeffs[j] * lower[j];
    if (r.rhs < Scalar(0)) {
      for (auto& v : r.coeffs) v = -v;
      r.rhs = -r.rhs;
      if (r.rel == Relation::le)
        r.rel = Relation::ge;
      else if (r.rel == Relation::ge)
        r.rel = Relation::le;
    }
    if (r.rel != Relation::eq) ++slack_count;
    if (r.rel != Relation::le) ++art_count;
    rows.push_back(std::move(r));
  }

  const std::size_t art_begin = n + slack_count;
  const std::size_t total = art_begin + art_count;
  detail::Tableau<Scalar> t(m, total);
  std::size_t slack = n, art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = rows[i].coeffs[j];
    t.rhs(i) = rows[i].rhs;
    switch (rows[i].rel) {
      case Relation::le:
        t.at(i, slack) = Scalar(1);
        t.basis()[i] = slack++;
        break;
      case Relation::ge:
        t.at(i, slack++) = Scalar(-1);
        t.at(i, art) = Scalar(1);
        t.basis()[i] = art++;
        break;
      case Relation::eq:
        t.at(i, art) = Scalar(1);
        t.basis()[i] = art++;
        break;
    }
  }

  LpSolution<Scalar> sol;
  // Phase 1: maximize -sum(artificials).
  if (art_count > 0) {
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis()[i] < art_begin) continue;
      for (std::size_t j = 0; j <= total; ++j)
        if (j < art_begin || j == total) t.at(m, j) -= t.at(i, j);
    }
    detail::run_simplex(t, total, sol.pivots);
    Scalar residual(0);
    for (std::size_t i = 0; i < m; ++i)
      if (t.basis()[i] >= art_begin) residual += t.rhs(i);
    if (detail::positive(residual)) {
      sol.status = LpStatus::infeasible;
      return sol;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis()[i] < art_begin) continue;
      for (std::size_t j = 0; j < art_begin; ++j)
        if (detail::positive(t.at(i, j)) || detail::negative(t.at(i, j))) {
          t.pivot(i, j);
          ++sol.pivots;
          break;
        }
    }
  }

  // Phase 2 cost row: reduced costs of -objective.
  for (std::size_t j = 0; j <= total; ++j) t.cost(j) = Scalar(0);
  for (std::size_t j = 0; j < n; ++j) t.cost(j) = -prob.objective[j];
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t b = t.basis()[i];
    if (b >= n) continue;
    const Scalar cb = prob.objective[b];
    if (cb == Scalar(0)) continue;
    for (std::size_t j = 0; j <= total; ++j) t.cost(j) += cb * t.at(i, j);
  }
  if (!detail::run_simplex(t, art_begin, sol.pivots)) {
    sol.status = LpStatus::unbounded;
    return sol;
  }

  sol.status = LpStatus::optimal;
  sol.x = lower;
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis()[i] < n) sol.x[t.basis()[i]] += t.rhs(i);
  sol.objective = Scalar(0);
  for (std::size_t j = 0; j < n; ++j) sol.objective += prob.objective[j] * sol.x[j];
  return sol;
}

}  // namespace trigbound
