#pragma once

// JSON and CSV serialization for polynomials and reports.

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "trigbound/conditions.hpp"
#include "trigbound/errors.hpp"
#include "trigbound/extremal.hpp"
#include "trigbound/rational.hpp"
#include "trigbound/trig_poly.hpp"
#include "trigbound/zeta.hpp"

namespace trigbound::io {

using nlohmann::json;

struct PolyInput {
  TrigPoly<Rational> poly;
  bool from_float = false;  ///< some coefficient was a JSON number rather than a string
};

/// {"coefficients": ["3", "4", "1"]}. Strings are exact rationals; JSON
/// numbers are taken at their binary64 value. The coefficient array may also
/// sit under a "poly" object, which is how optimize writes it.
inline PolyInput poly_from_json(const json& doc) {
  const json* node = &doc;
  if (doc.is_object() && !doc.contains("coefficients") && doc.contains("poly")) node = &doc.at("poly");
  if (!node->is_object() || !node->contains("coefficients"))
    throw InputError("polynomial JSON needs a \"coefficients\" array");
  const json& arr = node->at("coefficients");
  if (!arr.is_array()) throw InputError("\"coefficients\" must be an array");
  PolyInput out;
  std::vector<Rational> coeffs;
  for (const auto& c : arr) {
    if (c.is_string()) {
      coeffs.push_back(parse_rational(c.get<std::string>()));
    } else if (c.is_number()) {
      coeffs.push_back(rational_from_double(c.get<double>()));
      out.from_float = true;
    } else {
      throw InputError("coefficient entries must be strings or numbers");
    }
  }
  out.poly = TrigPoly<Rational>(std::move(coeffs));
  return out;
}

inline PolyInput load_poly(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
  return poly_from_json(doc);
}

/// Rounds to 15 significant digits, so the shortest round-trip form that
/// the JSON writer emits has at most that many.
inline double round15(double x) {
  if (!std::isfinite(x) || x == 0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

inline json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round15(x);
}

/// p/q string under --exact, otherwise a 15-digit number.
inline json scalar(const Rational& x, bool exact) {
  if (exact) return format_rational(x);
  return number(to_double(x));
}
inline json scalar(double x, bool) { return number(x); }

template <ScalarType Scalar>
json coefficient_array(std::span<const Scalar> a) {
  json arr = json::array();
  for (const auto& c : a) {
    if constexpr (is_exact_v<Scalar>)
      arr.push_back(format_rational(c));
    else
      arr.push_back(format_rational(rational_from_double(c)));
  }
  return arr;
}

template <ScalarType Scalar>
json poly_json(const TrigPoly<Scalar>& poly) {
  return {{"coefficients", coefficient_array<Scalar>(poly.coefficients())}, {"degree", poly.degree()}};
}

template <ScalarType Scalar>
json certificate_json(const NonnegCertificate<Scalar>& c, bool exact) {
  json out = {{"verdict", to_string(c.verdict)},
              {"method", to_string(c.method)},
              {"margin", scalar(c.margin, exact)},
              {"min_estimate", scalar(c.min_estimate, exact)},
              {"radius", scalar(c.radius, exact)},
              {"witness", nullptr}};
  if (c.witness) {
    out["witness"] = {{"theta", number(c.witness->theta)},
                      {"x", scalar(c.witness->x, exact)},
                      {"value", scalar(c.witness->value, exact)},
                      {"f_theta", number(c.witness->value_at_theta)}};
  }
  return out;
}

template <ScalarType Scalar>
json conditions_json(const TrigPoly<Scalar>& poly, const ConditionReport<Scalar>& r, bool exact) {
  json out = {{"poly", poly_json(poly)},
              {"conditions", {{"I", r.condI}, {"II", r.condII}, {"III", r.condIII}}},
              {"a0_positive", r.a0_positive},
              {"nonnegative", r.nonneg.verdict == Verdict::nonnegative},
              {"all_pass", r.all_pass()},
              {"a1", scalar(r.a1, exact)},
              {"abs_sum", scalar(r.abs_sum, exact)},
              {"slack_II", scalar(r.slackII, exact)},
              {"ratio", nullptr},
              {"exponents", nullptr},
              {"exponent_budget", nullptr},
              {"zero_free_region_admissible", r.zero_free_region_admissible},
              {"certificate", certificate_json(r.nonneg, exact)}};
  if (r.ratio) out["ratio"] = scalar(*r.ratio, exact);
  if (r.condI) {
    json e = json::array();
    for (const auto& x : r.exponents) e.push_back(scalar(x, exact));
    out["exponents"] = e;
    out["exponent_budget"] = scalar(exponent_budget(r), exact);
  }
  return out;
}

inline json trace_json(const std::vector<TraceRow>& trace) {
  json arr = json::array();
  for (const auto& row : trace)
    arr.push_back({{"round", row.round},
                   {"grid_size", row.grid_size},
                   {"objective", number(row.objective)},
                   {"min_value", number(row.min_value)}});
  return arr;
}

inline json extremal_json(const ExtremalResult& r, bool exact) {
  json pre = json::array();
  for (double v : r.pre_snap) pre.push_back(number(v));
  return {{"requested_degree", r.requested_degree},
          {"effective_degree", r.effective_degree},
          {"poly", poly_json(r.poly)},
          {"objective", scalar(r.objective, exact)},
          {"ratio", scalar(r.ratio, exact)},
          {"ratio_exact", format_rational(r.ratio)},
          {"pre_snap", pre},
          {"saturation_II", scalar(r.saturationII, exact)},
          {"g_minus1", scalar(r.g_minus1, exact)},
          {"g_prime_minus1", scalar(r.g_prime_minus1, exact)},
          {"iterations", r.iterations},
          {"certificate", certificate_json(r.certificate, exact)},
          {"trace", trace_json(r.trace)},
          {"seconds", number(r.seconds)}};
}

inline json lemma_json(const LemmaResult& r, bool exact) {
  json coeffs = json::array();
  for (const auto& c : r.coefficients) coeffs.push_back(format_rational(c));
  json verts = json::array();
  for (const auto& v : r.single_index_vertices) verts.push_back(scalar(v, exact));
  return {{"degree", r.degree},
          {"maximum", scalar(r.maximum, exact)},
          {"maximum_exact", format_rational(r.maximum)},
          {"coefficients", coeffs},
          {"support", r.support},
          {"single_index_vertices", verts}};
}

inline json factors_json(const std::vector<BoundFactor>& factors, bool exact) {
  json arr = json::array();
  for (const auto& f : factors)
    arr.push_back({{"n", f.n},
                   {"exponent", scalar(f.exponent, exact)},
                   {"value", number(f.abs_value)},
                   {"radius", number(f.radius)}});
  return arr;
}

inline json bound_json(const TrigPoly<Rational>& poly, const SigmaT& s, const InverseBound& b, bool exact) {
  return {{"poly", poly_json(poly)},
          {"sigma", number(s.sigma())},
          {"t", number(s.t())},
          {"bound", number(b.bound)},
          {"radius", number(b.radius)},
          {"factors", factors_json(b.factors, exact)}};
}

inline json report_json(const BoundReport& r, bool exact) {
  json out = {{"sigma", number(r.sigma)},
              {"t", number(r.t)},
              {"trivial_upper_inv", number(r.trivial_upper_inv)},
              {"trivial_radius", number(r.trivial_radius)},
              {"trig_upper_inv", number(r.trig_upper_inv)},
              {"trig_radius", number(r.trig_radius)},
              {"ratio", number(r.ratio)},
              {"superior", to_string(r.superior)},
              {"factors", factors_json(r.factors, exact)},
              {"classical", nullptr}};
  if (r.classical) {
    const auto& d = *r.classical;
    out["classical"] = {{"threshold", number(d.threshold)},
                        {"threshold_radius", number(d.threshold_radius)},
                        {"zeta_2it", number(d.zeta_2it)},
                        {"zeta_2it_radius", number(d.zeta_2it_radius)},
                        {"limit_coefficient", number(d.limit_coefficient)},
                        {"limit_coefficient_radius", number(d.limit_coefficient_radius)}};
  }
  return out;
}

inline json scan_json(const TrigPoly<Rational>& poly, const DeltaRule& rule, const std::vector<ScanRow>& rows,
                      bool literature, bool exact) {
  json arr = json::array();
  for (const auto& row : rows) {
    json r = report_json(row.report, exact);
    r["literature_zeta1_bound"] = literature ? number(row.literature) : json(nullptr);
    arr.push_back(std::move(r));
  }
  return {{"poly", poly_json(poly)}, {"delta_rule", rule.name()}, {"rows", arr}};
}

inline std::string csv_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

/// t,sigma,trivial_inv,trig_inv,superior then factor_n for each exponent.
inline void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows, bool literature) {
  out << "t,sigma,trivial_inv,trig_inv,superior";
  if (!rows.empty())
    for (const auto& f : rows.front().report.factors) out << ",factor_" << f.n;
  if (literature) out << ",literature_zeta1_bound";
  out << '\n';
  for (const auto& row : rows) {
    const auto& r = row.report;
    out << csv_number(row.t) << ',' << csv_number(row.sigma) << ',' << csv_number(r.trivial_upper_inv) << ','
        << csv_number(r.trig_upper_inv) << ',' << to_string(r.superior);
    for (const auto& f : r.factors) out << ',' << csv_number(f.abs_value);
    if (literature) out << ',' << csv_number(row.literature);
    out << '\n';
  }
}

inline void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& trace) {
  out << "round,grid_size,objective,min_value\n";
  for (const auto& row : trace)
    out << row.round << ',' << row.grid_size << ',' << csv_number(row.objective) << ','
        << csv_number(row.min_value) << '\n';
}

}  // namespace trigbound::io
