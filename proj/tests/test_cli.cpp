#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "trigbound/cli.hpp"

using namespace trigbound;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(TRIGBOUND_SAMPLES_DIR) + "/" + name; }

fs::path temp_file(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "trigbound_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, CheckClassical) {
  const auto r = run({"check", sample("classical.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = io::json::parse(r.out);
  EXPECT_TRUE(doc["conditions"]["I"].get<bool>());
  EXPECT_TRUE(doc["conditions"]["II"].get<bool>());
  EXPECT_TRUE(doc["conditions"]["III"].get<bool>());
  EXPECT_EQ(doc["ratio"].get<double>(), 0.75);
  EXPECT_EQ(doc["certificate"]["verdict"], "nonnegative");
  const auto exact = io::json::parse(run({"check", sample("classical.json"), "--exact"}).out);
  EXPECT_EQ(exact["ratio"], "3/4");
  EXPECT_EQ(exact["exponents"], io::json::parse(R"(["3/4", "1/4"])"));
}

TEST(Cli, CheckFailureExitsOne) {
  const auto r = run({"check", sample("not_nonnegative.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(io::json::parse(r.out)["certificate"]["verdict"], "negative-witness");
}

TEST(Cli, CheckNumericMode) {
  const auto r = run({"check", sample("normalized.json"), "--mode", "numeric"});
  const auto doc = io::json::parse(r.out);
  EXPECT_EQ(doc["certificate"]["method"], "numeric");
  EXPECT_NE(doc["certificate"]["verdict"], "negative-witness");
}

TEST(Cli, TextFormat) {
  const auto r = run({"check", sample("classical.json"), "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all_pass: true"), std::string::npos);
}

TEST(Cli, OptimizeDegreeEight) {
  const auto r = run({"optimize", "--degree", "8", "--exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = io::json::parse(r.out);
  EXPECT_EQ(doc["poly"]["coefficients"], io::json::parse(R"(["1", "4/3", "1/3"])"));
  EXPECT_EQ(doc["ratio"], "3/4");
  EXPECT_EQ(doc["requested_degree"], 8);
}

TEST(Cli, OptimizeOutputRoundTripsThroughCheck) {
  for (const char* N : {"2", "5", "8"}) {
    for (bool exact : {false, true}) {
      std::vector<std::string> args = {"optimize", "--degree", N};
      if (exact) args.push_back("--exact");
      const auto opt = run(args);
      ASSERT_EQ(opt.code, 0);
      const auto path = temp_file(std::string("opt") + N + ".json");
      std::ofstream(path) << opt.out;
      const auto chk = run({"check", path.string()});
      EXPECT_EQ(chk.code, 0) << chk.out << chk.err;
    }
  }
}

TEST(Cli, EmitTrace) {
  const auto path = temp_file("trace.csv");
  const auto r = run({"optimize", "--degree", "4", "--emit-trace", path.string()});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "round,grid_size,objective,min_value");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, io::json::parse(r.out)["iterations"].get<int>());
}

TEST(Cli, WeightedSumSubcommand) {
  const auto r = run({"lemma", "--degree", "7", "--exact"});
  ASSERT_EQ(r.code, 0);
  const auto doc = io::json::parse(r.out);
  EXPECT_EQ(doc["maximum"], "1/3");
  EXPECT_EQ(doc["support"], io::json::parse("[2]"));
  EXPECT_EQ(run({"lemma", "--degree", "1"}).code, 2);
}

TEST(Cli, BoundDomainError) {
  const auto r = run({"bound", "--poly", sample("classical.json"), "--sigma", "0.9", "--t", "10"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("domain error"), std::string::npos);
}

TEST(Cli, BoundAndCompare) {
  const auto b = run({"bound", "--poly", sample("classical.json"), "--sigma", "1.5", "--t", "10"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(io::json::parse(b.out)["factors"].size(), 2u);
  const auto c = run({"compare", "--poly", sample("classical.json"), "--sigma", "1.0723824", "--t", "1e6"});
  ASSERT_EQ(c.code, 0);
  const auto doc = io::json::parse(c.out);
  EXPECT_EQ(doc["superior"], "true");
  EXPECT_TRUE(doc["classical"].is_object());
}

TEST(Cli, BoundRejectsInadmissiblePolynomial) {
  const auto r = run({"bound", "--poly", sample("not_nonnegative.json"), "--sigma", "1.5", "--t", "10"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("contract error"), std::string::npos);
}

TEST(Cli, ScanCsv) {
  const auto r = run({"scan", "--poly", sample("classical.json"), "--t-min", "1e3", "--t-max", "1e5", "--points", "3",
                      "--delta-rule", "inv_log", "--literature"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "t,sigma,trivial_inv,trig_inv,superior,factor_0,factor_2,literature_zeta1_bound");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(Cli, ScanJsonAndDeterminism) {
  const std::vector<std::string> args = {"scan",  "--poly",   sample("classical.json"), "--t-min", "100", "--t-max",
                                         "1000", "--points", "4",  "--format", "json"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(io::json::parse(a.out)["rows"].size(), 4u);
}

TEST(Cli, ScanRejectsSmallTForLogRules) {
  const auto r = run({"scan", "--poly", sample("classical.json"), "--t-min", "2", "--t-max", "10", "--points", "3",
                      "--delta-rule", "loglog_over_log"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, UsageErrors) {
  auto r = run({"check", sample("classical.json"), "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"optimize"}).code, 2);
  EXPECT_EQ(run({"check", sample("classical.json"), "--tol", "0"}).code, 2);
  EXPECT_EQ(run({"check", "/nonexistent/poly.json"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, PolyJsonParsing) {
  const auto p = io::poly_from_json(io::json::parse(R"({"coefficients": ["3", "4.0", "1/1", "0"]})"));
  EXPECT_FALSE(p.from_float);
  EXPECT_EQ(p.poly, (TrigPoly<Rational>{Rational(3), Rational(4), Rational(1)}));
  const auto f = io::poly_from_json(io::json::parse(R"({"coefficients": [0.5, 1]})"));
  EXPECT_TRUE(f.from_float);
  EXPECT_EQ(f.poly.coefficient(0), Rational(1, 2));
  EXPECT_THROW(io::poly_from_json(io::json::parse(R"({"coeffs": []})")), InputError);
  EXPECT_THROW(io::poly_from_json(io::json::parse(R"({"coefficients": ["x"]})")), InputError);
  EXPECT_THROW(io::poly_from_json(io::json::parse(R"({"coefficients": [true]})")), InputError);
}

TEST(Cli, FifteenSignificantDigits) {
  EXPECT_EQ(io::json(io::round15(1.0 / 3)).dump(), "0.333333333333333");
  EXPECT_EQ(io::csv_number(2.0 / 3), "0.666666666666667");
}
