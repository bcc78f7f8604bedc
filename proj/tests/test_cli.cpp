#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "fault_injection.hpp"
#include "json.hpp"
#include "powersum/cli.hpp"
#include "powersum/powersum_poly.hpp"

using namespace powersum;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("stirling subcommand") {
  CHECK(run({"stirling", "--kmax", "2"}).out == "1\n0 1\n0 1 1\n");
  CHECK(run({"--format", "json", "stirling", "--kmax", "0"}).out == "{\"kmax\":0,\"rows\":[[\"1\"]]}\n");
  const Result csv = run({"stirling", "--kmax", "4", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("\n4,0,1,7,6,1\n") != std::string::npos);
  CHECK(csv.out.rfind("k,j0,j1,j2,j3,j4\n", 0) == 0);
  CHECK(run({"stirling", "--kmax", "2", "--format", "latex"}).out ==
        "0 & 1 \\\\\n1 & 0 & 1 \\\\\n2 & 0 & 1 & 1 \\\\\n");
}

TEST_CASE("coeffs subcommand") {
  CHECK(run({"coeffs", "--k", "2"}).out == "0 -1/2 1/3\n");
  CHECK(run({"coeffs", "--k", "0", "--format", "json"}).out == "{\"k\":0,\"a\":[\"1\"]}\n");
  const std::string latex = run({"coeffs", "--k", "3", "--format", "latex"}).out;
  CHECK(latex.find("-\\frac{1}{4}") != std::string::npos);
  CHECK(latex.find("-\\frac{1}{2}") != std::string::npos);
  CHECK(run({"coeffs", "--k", "2", "--format", "csv"}).out == "j,a\n0,0\n1,-1/2\n2,1/3\n");
}

TEST_CASE("eval subcommand") {
  const Result all = run({"eval", "--k", "2", "--n", "3", "--formula", "all"});
  CHECK(all.code == 0);
  for (FormulaId f : kAllFormulas) {
    CHECK(all.out.find(std::string(to_string(f)) + " 14\n") != std::string::npos);
  }
  CHECK(all.out.find("agreement true") != std::string::npos);

  const json j = json::parse(run({"eval", "--k", "2", "--n", "3", "--format", "json"}).out);
  CHECK(j["agreement"] == true);
  CHECK(j["results"].size() == 6);

  const json k0 = json::parse(run({"eval", "--k", "0", "--n", "5", "--format", "json"}).out);
  CHECK(k0["results"].size() == 4);  // companion and factorized skipped

  CHECK(run({"eval", "--k", "3", "--n", "3", "--formula", "naive", "--format", "json"}).out ==
        "{\"k\":3,\"n\":3,\"formula\":\"naive\",\"value\":\"36\"}\n");

  const Result dom = run({"eval", "--k", "0", "--n", "5", "--formula", "companion"});
  CHECK(dom.code == cli::exit_code::domain);
  CHECK(dom.out.empty());
  CHECK_FALSE(dom.err.empty());

  const json big = json::parse(
      run({"eval", "--k", "1", "--n", "100000000000000000000", "--formula", "stirling", "--format", "json"}).out);
  CHECK(big["n"] == "100000000000000000000");
  CHECK(big["value"] == "5000000000000000000050000000000000000000");
}

TEST_CASE("poly subcommand") {
  CHECK(run({"poly", "--k", "2", "--formula", "stirling"}).out == "0 1/6 1/2 1/3\n");
  const json j = json::parse(run({"poly", "--k", "1", "--formula", "companion", "--format", "json"}).out);
  CHECK(j["k"] == 1);
  CHECK(j["coeffs"] == json({"0", "1/2", "1/2"}));
  CHECK(run({"poly", "--k", "0", "--formula", "stirling"}).out == "0 1\n");
  CHECK(run({"poly", "--k", "0", "--formula", "factorized"}).code == cli::exit_code::domain);
  CHECK(run({"poly", "--k", "2", "--formula", "naive"}).code == cli::exit_code::usage);
  CHECK(run({"poly", "--k", "3", "--format", "latex"}).out ==
        "S_{3}(n) = \\frac{1}{4}n^{4} + \\frac{1}{2}n^{3} + \\frac{1}{4}n^{2}\n");
}

TEST_CASE("verify subcommand") {
  const Result r = run({"verify", "--kmax", "10", "--nmax", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mismatches: 0") != std::string::npos);
  CHECK(run({"verify", "--kmax", "0", "--nmax", "0"}).code == 0);

  const json j = json::parse(run({"--format", "json", "verify", "--kmax", "3", "--nmax", "4"}).out);
  CHECK(j["checks_run"].is_number_unsigned());
  CHECK(j["checks_run"] == grid_check_count(3, 4) + identity_check_count(3));
  CHECK(j["mismatches"].is_array());
  CHECK(j["mismatches"].empty());
  CHECK(j["pass"] == true);
}

TEST_CASE("failing reports render their witnesses") {
  const auto report = verify_grid(2, 3, faults::grid_with_fault(FormulaId::stirling));
  REQUIRE_FALSE(report.pass());
  const json j = json::parse(cli::render_report(report, cli::OutputFormat::json));
  CHECK(j["pass"] == false);
  REQUIRE(j["mismatches"].size() == report.mismatches.size());
  const auto& first = j["mismatches"][0];
  CHECK(first["formula"] == "stirling");
  CHECK(first["k"] == report.mismatches[0].k);
  CHECK(first["n"] == *report.mismatches[0].index);
  CHECK(first["expected"] == std::get<Integer>(report.mismatches[0].expected).get_str());
  CHECK(first["actual"] == std::get<Integer>(report.mismatches[0].actual).get_str());
  CHECK(cli::render_report(report, cli::OutputFormat::plain).find("status: FAIL") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::exit_code::usage);
  CHECK(run({"frobnicate"}).code == cli::exit_code::usage);
  CHECK(run({"coeffs"}).code == cli::exit_code::usage);
  CHECK(run({"coeffs", "--k", "-1"}).code == cli::exit_code::usage);
  CHECK(run({"coeffs", "--k", "x"}).code == cli::exit_code::usage);
  CHECK(run({"coeffs", "--k", "2", "--format", "xml"}).code == cli::exit_code::usage);
  CHECK(run({"eval", "--k", "2", "--n", "-4"}).code == cli::exit_code::usage);
  CHECK(run({"eval", "--k", "2", "--n", "3", "--formula", "bernoulli"}).code == cli::exit_code::usage);
  CHECK(run({"--help"}).code == cli::exit_code::ok);
}

TEST_CASE("resource ceiling and its environment override") {
  CHECK(run({"stirling", "--kmax", "1001"}).code == cli::exit_code::ceiling);
  CHECK(run({"verify", "--kmax", "1001", "--nmax", "1"}).code == cli::exit_code::ceiling);
  CHECK(run({"eval", "--k", "1001", "--n", "1"}).code == cli::exit_code::ceiling);

  ::setenv("POWERSUM_CEILING", "3", 1);
  CHECK(run({"coeffs", "--k", "4"}).code == cli::exit_code::ceiling);
  CHECK(run({"coeffs", "--k", "3"}).code == cli::exit_code::ok);
  ::setenv("POWERSUM_CEILING", "10001", 1);
  CHECK(run({"coeffs", "--k", "3"}).code == cli::exit_code::usage);
  ::setenv("POWERSUM_CEILING", "1200", 1);
  CHECK(run({"eval", "--k", "1001", "--n", "1", "--formula", "naive"}).out ==
        "1\n");
  ::setenv("POWERSUM_CEILING", "lots", 1);
  CHECK(run({"coeffs", "--k", "3"}).code == cli::exit_code::usage);
  ::unsetenv("POWERSUM_CEILING");
  CHECK(run({"coeffs", "--k", "1001"}).code == cli::exit_code::ceiling);
}

TEST_CASE("json output round-trips against the library") {
  for (unsigned k = 0; k <= 8; ++k) {
    const json coeffs = json::parse(run({"coeffs", "--k", std::to_string(k), "--format", "json"}).out);
    const CoefficientRow row = coeff_row(k);
    REQUIRE(coeffs["a"].size() == row.coefficients.size());
    for (std::size_t j = 0; j <= k; ++j) {
      CHECK(Rational::parse(coeffs["a"][j].get<std::string>()) == row.coefficients[j]);
    }
    const json poly = json::parse(run({"poly", "--k", std::to_string(k), "--format", "json"}).out);
    const Polynomial p = powersum_poly(k, FormulaId::stirling);
    for (std::size_t d = 0; d < poly["coeffs"].size(); ++d) {
      CHECK(Rational::parse(poly["coeffs"][d].get<std::string>()) == p.coefficient(d));
    }
  }
}
