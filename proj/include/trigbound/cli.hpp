#pragma once

// Command-line front end. run() never touches the process streams directly,
// so tests can drive it in-process.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trigbound/conditions.hpp"
#include "trigbound/errors.hpp"
#include "trigbound/extremal.hpp"
#include "trigbound/io.hpp"
#include "trigbound/zeta.hpp"

namespace trigbound::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct RunConfig {
  std::string subcommand;
  std::string poly_path;
  std::string mode = "exact";
  std::optional<double> tol;
  std::string format = "auto";
  bool exact = false;

  std::size_t degree = 0;
  bool enforce_iii = false;
  std::string trace_path;
  int grid0 = ExtremalOptions{}.grid0;
  int max_rounds = ExtremalOptions{}.max_rounds;

  double sigma = 0;
  double t = 0;

  double t_min = 0;
  double t_max = 0;
  int points = 0;
  std::string delta_rule = "inv_log";
  std::optional<double> delta;
  bool literature = false;
};

namespace detail {

inline void add_output_flags(CLI::App* sub, RunConfig& cfg, std::vector<std::string> formats) {
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(std::move(formats)));
  sub->add_flag("--exact", cfg.exact, "print rationals as p/q instead of 15-digit decimals");
}

inline void print_text(std::ostream& out, const io::json& doc) {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_string())
      out << key << ": " << value.get<std::string>() << '\n';
    else
      out << key << ": " << value.dump() << '\n';
  }
}

inline void emit(std::ostream& out, const RunConfig& cfg, const io::json& doc) {
  if (cfg.format == "text")
    print_text(out, doc);
  else
    out << doc.dump(2) << '\n';
}

inline int do_check(const RunConfig& cfg, std::ostream& out) {
  const auto input = io::load_poly(cfg.poly_path);
  const double tol = cfg.tol.value_or(kDefaultCertifyTol);
  if (cfg.mode == "numeric") {
    const auto poly = to_double(input.poly);
    const auto report = check_conditions(poly, CertMode::numeric, tol);
    emit(out, cfg, io::conditions_json(poly, report, cfg.exact));
    return report.all_pass() ? kOk : kFailure;
  }
  const auto report = check_conditions(input.poly, CertMode::exact, tol);
  emit(out, cfg, io::conditions_json(input.poly, report, cfg.exact));
  return report.all_pass() ? kOk : kFailure;
}

inline int do_optimize(const RunConfig& cfg, std::ostream& out) {
  ExtremalOptions opts;
  opts.enforce_iii = cfg.enforce_iii;
  opts.grid0 = cfg.grid0;
  opts.max_rounds = cfg.max_rounds;
  if (cfg.tol) opts.tol = *cfg.tol;
  const auto result = maximize_a1(cfg.degree, opts);
  if (!cfg.trace_path.empty()) {
    std::ofstream trace(cfg.trace_path);
    if (!trace) throw InputError("cannot write '" + cfg.trace_path + "'");
    io::write_trace_csv(trace, result.trace);
  }
  emit(out, cfg, io::extremal_json(result, cfg.exact));
  return kOk;
}

inline int do_lemma(const RunConfig& cfg, std::ostream& out) {
  emit(out, cfg, io::lemma_json(lemma_maximize(cfg.degree), cfg.exact));
  return kOk;
}

inline int do_bound(const RunConfig& cfg, std::ostream& out) {
  const auto input = io::load_poly(cfg.poly_path);
  const SigmaT s(cfg.sigma, cfg.t);
  emit(out, cfg, io::bound_json(input.poly, s, trig_inverse_bound(input.poly, s), cfg.exact));
  return kOk;
}

inline int do_compare(const RunConfig& cfg, std::ostream& out) {
  const auto input = io::load_poly(cfg.poly_path);
  const SigmaT s(cfg.sigma, cfg.t);
  auto doc = io::report_json(compare(input.poly, s), cfg.exact);
  doc["poly"] = io::poly_json(input.poly);
  emit(out, cfg, doc);
  return kOk;
}

inline int do_scan(const RunConfig& cfg, std::ostream& out) {
  const auto input = io::load_poly(cfg.poly_path);
  const auto rule = DeltaRule::parse(cfg.delta_rule, cfg.delta);
  const auto rows = scan_curve(input.poly, log_spaced(cfg.t_min, cfg.t_max, cfg.points), rule);
  if (cfg.format == "json")
    out << io::scan_json(input.poly, rule, rows, cfg.literature, cfg.exact).dump(2) << '\n';
  else
    io::write_scan_csv(out, rows, cfg.literature);
  return kOk;
}

}  // namespace detail

/// Runs one subcommand. `args` excludes the program name.
/// Exit codes: 0 success, 1 contract/domain/condition failure, 2 usage error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Certified non-negative cosine polynomials and inverse-zeta bounds", "trigbound"};
  app.require_subcommand(1, 1);

  auto* check = app.add_subcommand("check", "Conditions I-III and a non-negativity certificate");
  check->add_option("poly", cfg.poly_path, "polynomial JSON file")->required();
  check->add_option("--mode", cfg.mode, "certification mode")->check(CLI::IsMember({"exact", "numeric"}));
  check->add_option("--tol", cfg.tol, "certification tolerance")->check(CLI::PositiveNumber);
  detail::add_output_flags(check, cfg, {"auto", "json", "text"});

  auto* optimize = app.add_subcommand("optimize", "maximize a_1 over non-negative polynomials of degree <= N");
  optimize->add_option("--degree", cfg.degree, "degree N")->required()->check(CLI::Range(2, 64));
  optimize->add_flag("--enforce-iii", cfg.enforce_iii, "also impose a_n >= 0 for n >= 2");
  optimize->add_option("--emit-trace", cfg.trace_path, "write the cutting-plane trace as CSV");
  optimize->add_option("--grid0", cfg.grid0, "initial grid size")->check(CLI::Range(2, 100000));
  optimize->add_option("--max-rounds", cfg.max_rounds, "cutting-plane round limit")->check(CLI::Range(1, 10000));
  optimize->add_option("--tol", cfg.tol, "convergence tolerance")->check(CLI::PositiveNumber);
  detail::add_output_flags(optimize, cfg, {"auto", "json", "text"});

  auto* lemma = app.add_subcommand("lemma", "max sum a_n subject to sum a_n (n^2-1) = 1, a_n >= 0");
  lemma->add_option("--degree", cfg.degree, "degree N")->required()->check(CLI::Range(2, 100000));
  detail::add_output_flags(lemma, cfg, {"auto", "json", "text"});

  auto add_point = [&](CLI::App* sub) {
    sub->add_option("--poly", cfg.poly_path, "polynomial JSON file")->required();
    sub->add_option("--sigma", cfg.sigma, "real part sigma > 1")->required();
    sub->add_option("--t", cfg.t, "imaginary part t")->required();
    detail::add_output_flags(sub, cfg, {"auto", "json", "text"});
  };
  auto* bound = app.add_subcommand("bound", "trigonometric-polynomial upper bound on 1/|zeta(s)|");
  add_point(bound);
  auto* cmp = app.add_subcommand("compare", "trivial versus trigonometric-polynomial bound");
  add_point(cmp);

  auto* scan = app.add_subcommand("scan", "compare the bounds along sigma = 1 + delta(t)");
  scan->add_option("--poly", cfg.poly_path, "polynomial JSON file")->required();
  scan->add_option("--t-min", cfg.t_min, "smallest t")->required();
  scan->add_option("--t-max", cfg.t_max, "largest t")->required();
  scan->add_option("--points", cfg.points, "number of log-spaced t values")->required()->check(CLI::Range(1, 100000));
  scan->add_option("--delta-rule", cfg.delta_rule, "inv_log, loglog_over_log or fixed")
      ->check(CLI::IsMember({"inv_log", "loglog_over_log", "fixed"}));
  scan->add_option("--delta", cfg.delta, "delta for the fixed rule")->check(CLI::PositiveNumber);
  scan->add_flag("--literature", cfg.literature, "add the 1.731 log t / log log t reference column");
  detail::add_output_flags(scan, cfg, {"auto", "csv", "json"});

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsage;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  try {
    if (cfg.subcommand == "check") return detail::do_check(cfg, out);
    if (cfg.subcommand == "optimize") return detail::do_optimize(cfg, out);
    if (cfg.subcommand == "lemma") return detail::do_lemma(cfg, out);
    if (cfg.subcommand == "bound") return detail::do_bound(cfg, out);
    if (cfg.subcommand == "compare") return detail::do_compare(cfg, out);
    return detail::do_scan(cfg, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kFailure;
  } catch (const ContractError& e) {
    err << "contract error: " << e.what() << '\n';
    return kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace trigbound::cli
