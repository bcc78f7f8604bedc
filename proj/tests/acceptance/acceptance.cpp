// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Every comparison is exact; the only tolerances are the wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fault_injection.hpp"
#include "json.hpp"
#include "powersum/cli.hpp"
#include "powersum/errors.hpp"
#include "powersum/powersum_poly.hpp"
#include "powersum/verify.hpp"

using namespace powersum;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0 = no stated budget
  std::function<Outcome()> body;
};

std::string describe(const VerificationReport& r) {
  std::ostringstream os;
  os << r.checks_run << " checks, " << r.mismatches.size() << " mismatches";
  return os.str();
}

Outcome oracle_grid() {
  Outcome o;
  const VerificationReport r = verify_grid(25, 300);
  o.require(r.checks_run == grid_check_count(25, 300), "checks_run does not match the domain count");
  o.require(r.pass(), "oracle mismatches: " + describe(r));
  o.detail = o.ok ? describe(r) : o.detail;
  return o;
}

Outcome coefficient_routes() {
  Outcome o;
  const StirlingTable table = stirling_table(50);
  std::size_t compared = 0;
  for (unsigned k = 0; k <= 50; ++k) {
    for (unsigned j = 0; j <= k; ++j, ++compared) {
      o.require(coeff_direct(k, j) == coeff_via_stirling(k, j, table),
                "a_{" + std::to_string(k) + "," + std::to_string(j) + "} differs");
    }
  }
  if (o.ok) o.detail = std::to_string(compared) + " coefficients equal";
  return o;
}

Outcome special_values() {
  Outcome o;
  for (unsigned k = 0; k <= 50; ++k) {
    o.require(coeff_direct(k, k) == Rational(sign_power(k), Integer(k + 1)),
              "a_{k,k} wrong at k=" + std::to_string(k));
    if (k >= 1) {
      o.require(coeff_direct(k, 1) == Rational(-1, 2), "a_{k,1} wrong at k=" + std::to_string(k));
    }
  }
  if (o.ok) o.detail = "a_{k,k} for k<=50, a_{k,1} for 1<=k<=50";
  return o;
}

Outcome stirling_routes() {
  Outcome o;
  const StirlingTable table = stirling_table(30);
  for (unsigned k = 0; k <= 30; ++k) {
    for (unsigned j = 0; j <= k; ++j) {
      o.require(stirling_explicit(k, j) == table.entry(k, j),
                "S(" + std::to_string(k) + "," + std::to_string(j) + ") differs");
    }
  }
  if (o.ok) o.detail = "496 entries equal";
  return o;
}

Outcome polynomial_identities() {
  Outcome o;
  for (unsigned k = 1; k <= 30; ++k) {
    const std::string at = " at k=" + std::to_string(k);
    std::vector<Polynomial> routes;
    for (FormulaId f : kClosedForms) routes.push_back(powersum_poly(k, f));
    for (std::size_t a = 0; a < routes.size(); ++a) {
      for (std::size_t b = a + 1; b < routes.size(); ++b) {
        o.require(routes[a] == routes[b], std::string(to_string(kClosedForms[a])) + " != " +
                                              std::string(to_string(kClosedForms[b])) + at);
      }
    }
    const Polynomial& p = routes.front();
    o.require(p.degree() == k + 1, "degree" + at);
    o.require(p.coefficient(0).is_zero(), "constant term" + at);
    o.require(!p.is_zero() && p.leading() == Rational(Integer(1), Integer(k + 1)), "leading coefficient" + at);
    o.require(p(Rational(1)) == Rational(1), "p(1)" + at);
  }
  if (o.ok) o.detail = "5 routes coefficient-identical, 1<=k<=30";
  return o;
}

Outcome transformation() {
  Outcome o;
  for (unsigned k = 1; k <= 30; ++k) {
    o.require(check_symmetry(k), "symmetry fails at k=" + std::to_string(k));
    o.require(check_transform_equivalence(k), "transform fails at k=" + std::to_string(k));
  }
  if (o.ok) o.detail = "1<=k<=30";
  return o;
}

Outcome factorization() {
  Outcome o;
  for (unsigned k = 1; k <= 30; ++k) {
    try {
      const Polynomial q = factor_out_s1(k);
      o.require(q * twice_s1_poly() == Rational(2) * powersum_poly(k, FormulaId::stirling),
                "quotient does not reconstruct at k=" + std::to_string(k));
    } catch (const InexactDivisionError& e) {
      o.require(false, e.what());
    }
  }
  if (o.ok) o.detail = "x^2+x divides 2 S_k exactly, 1<=k<=30";
  return o;
}

Outcome fault_sensitivity() {
  Outcome o;
  std::string counts;
  for (FormulaId f : kClosedForms) {
    const VerificationReport r = verify_grid(10, 50, faults::grid_with_fault(f));
    std::size_t attributed = 0;
    for (const auto& m : r.mismatches) attributed += m.formula == f ? 1 : 0;
    o.require(attributed >= 1, "fault in " + std::string(to_string(f)) + " went undetected");
    o.require(attributed == r.mismatches.size(),
              "fault in " + std::string(to_string(f)) + " blamed on another route");
    counts += std::string(counts.empty() ? "" : ", ") + std::string(to_string(f)) + "=" +
              std::to_string(attributed);
  }
  if (o.ok) o.detail = counts;
  return o;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str()};
}

Outcome cli_conformance() {
  using nlohmann::json;
  Outcome o;

  const CliRun ev = cli_run({"eval", "--k", "2", "--n", "3", "--formula", "stirling", "--format", "json"});
  const json e = json::parse(ev.out);
  o.require(ev.code == 0 && e["value"] == "14" && e["formula"] == "stirling" && e["k"] == 2 && e["n"] == 3,
            "eval json: " + ev.out);
  o.require(Integer(e["value"].get<std::string>()) == eval(FormulaId::stirling, 2, 3).value.value(),
            "eval value differs from library");

  const CliRun all = cli_run({"eval", "--k", "2", "--n", "3", "--formula", "all", "--format", "json"});
  const json a = json::parse(all.out);
  o.require(all.code == 0 && a["agreement"] == true, "eval all json: " + all.out);
  for (const auto& item : a["results"]) o.require(item["value"] == "14", "eval all: " + all.out);

  const CliRun co = cli_run({"coeffs", "--k", "2", "--format", "json"});
  const json c = json::parse(co.out);
  o.require(co.code == 0 && c["a"] == json({"0", "-1/2", "1/3"}), "coeffs json: " + co.out);
  const CoefficientRow row = coeff_row(2);
  for (std::size_t j = 0; j < row.coefficients.size(); ++j) {
    o.require(Rational::parse(c["a"][j].get<std::string>()) == row.coefficients[j], "coeffs differ from library");
  }

  const CliRun po = cli_run({"poly", "--k", "2", "--formula", "stirling", "--format", "json"});
  const json p = json::parse(po.out);
  o.require(po.code == 0 && p["coeffs"] == json({"0", "1/6", "1/2", "1/3"}), "poly json: " + po.out);
  const Polynomial s2 = powersum_poly(2, FormulaId::stirling);
  for (std::size_t d = 0; d < p["coeffs"].size(); ++d) {
    o.require(Rational::parse(p["coeffs"][d].get<std::string>()) == s2.coefficient(d), "poly differs from library");
  }

  const CliRun ve = cli_run({"verify", "--kmax", "4", "--nmax", "10", "--format", "json"});
  const json v = json::parse(ve.out);
  o.require(ve.code == cli::exit_code::ok && v["checks_run"].is_number() && v["mismatches"].is_array() &&
                v["pass"] == true,
            "verify json: " + ve.out);

  // Exit-code table. Code 1 needs a failing verification, which the CLI cannot
  // produce without injected faults; its rendering path is covered in test_cli.
  o.require(cli_run({"coeffs", "--k", "2"}).code == 0, "exit 0");
  o.require(cli_run({"coeffs", "--k", "nope"}).code == 2, "exit 2 on usage error");
  o.require(cli_run({"eval", "--k", "0", "--n", "5", "--formula", "companion"}).code == 3,
            "exit 3 on domain violation");
  o.require(cli_run({"stirling", "--kmax", "1001"}).code == 4, "exit 4 on ceiling");
  o.require(cli::exit_code::mismatch == 1, "exit 1 reserved for mismatches");
  if (o.ok) o.detail = "worked examples parse and match; exit codes 0/2/3/4 observed";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "oracle grid k<=25 n<=300", 60.0, oracle_grid},
      {2, "coefficient route equality k<=50", 5.0, coefficient_routes},
      {3, "special values a_{k,k}, a_{k,1}", 0.0, special_values},
      {4, "stirling two-route equality k<=30", 0.0, stirling_routes},
      {5, "polynomial identity suite 1<=k<=30", 30.0, polynomial_identities},
      {6, "symmetry and n -> -n-1 transformation", 0.0, transformation},
      {7, "factorization by 2 S_1", 0.0, factorization},
      {8, "fault-injection sensitivity", 0.0, fault_sensitivity},
      {9, "cli conformance", 0.0, cli_conformance},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.ok = false;
      o.detail = "exceeded the " + std::to_string(c.budget_seconds) + " s budget";
    }
    failures += o.ok ? 0 : 1;
    std::printf("[%s] %d. %s (%.3f s) -- %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                o.detail.c_str());
  }
  std::printf("%s: %zu/%zu criteria passed\n", failures == 0 ? "ACCEPTED" : "REJECTED",
              criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
