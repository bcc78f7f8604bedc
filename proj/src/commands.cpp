#include <algorithm>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "powersum/cli.hpp"
#include "powersum/errors.hpp"
#include "powersum/powersum_poly.hpp"

namespace powersum::cli {

namespace {

// POWERSUM_CEILING, when set, replaces the default k ceiling.
void apply_ceiling_from_env() {
  const char* raw = std::getenv("POWERSUM_CEILING");
  if (raw == nullptr) {
    set_resource_ceiling(kDefaultCeiling);
    return;
  }
  const Natural parsed = Natural::parse(raw);
  if (parsed > Natural(kHardCeiling)) {
    throw PreconditionError("POWERSUM_CEILING=" + parsed.str() + " exceeds " +
                            std::to_string(kHardCeiling));
  }
  set_resource_ceiling(static_cast<unsigned>(parsed.value().get_ui()));
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact power sums S_k(n) = 1^k + ... + n^k and their closed forms", "powersum"};
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, OutputFormat> formats{{"plain", OutputFormat::plain},
                                                    {"json", OutputFormat::json},
                                                    {"csv", OutputFormat::csv},
                                                    {"latex", OutputFormat::latex}};
  OutputFormat fmt = OutputFormat::plain;
  app.add_option("--format", fmt, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  unsigned kmax = 0;
  unsigned k = 0;
  unsigned nmax = 0;
  std::string n_text;
  std::string eval_formula;
  std::string poly_formula;

  auto* stirling = app.add_subcommand("stirling", "Triangle of Stirling numbers S(k, j)");
  stirling->add_option("--kmax", kmax, "Largest k")->required();

  auto* coeffs = app.add_subcommand("coeffs", "Coefficients a_{k,0..k}");
  coeffs->add_option("--k", k, "Power k")->required();

  std::vector<std::string> eval_names{"all"};
  for (FormulaId f : kAllFormulas) eval_names.emplace_back(to_string(f));
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate S_k(n) by one formula or all of them");
  eval_cmd->add_option("--k", k, "Power k")->required();
  eval_cmd->add_option("--n", n_text, "Upper limit n (any size)")->required();
  eval_cmd->add_option("--formula", eval_formula, "Formula or 'all'")
      ->default_val("all")
      ->check(CLI::IsMember(eval_names));

  std::vector<std::string> poly_names;
  for (FormulaId f : kClosedForms) poly_names.emplace_back(to_string(f));
  auto* poly = app.add_subcommand("poly", "S_k as a polynomial in n, coefficients low to high");
  poly->add_option("--k", k, "Power k")->required();
  poly->add_option("--formula", poly_formula, "Closed form to expand")
      ->default_val("stirling")
      ->check(CLI::IsMember(poly_names));

  auto* verify = app.add_subcommand("verify", "Differential and identity verification");
  verify->add_option("--kmax", kmax, "Largest k")->required();
  verify->add_option("--nmax", nmax, "Largest n")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }

  try {
    apply_ceiling_from_env();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }

  try {
    if (*stirling) {
      out << render_stirling(stirling_table(kmax), fmt);
    } else if (*coeffs) {
      out << render_coeffs(coeff_row(k), fmt);
    } else if (*eval_cmd) {
      const Natural n = Natural::parse(n_text);
      if (eval_formula == "all") {
        enforce_ceiling(k, "eval");
        std::vector<Evaluation> evals;
        for (FormulaId f : kAllFormulas) {
          if (in_domain(f, k)) evals.push_back(eval(f, k, n));
        }
        out << render_evaluations(k, n, evals, fmt);
      } else {
        out << render_evaluation(eval(*parse_formula(eval_formula), k, n), fmt);
      }
    } else if (*poly) {
      const FormulaId f = *parse_formula(poly_formula);
      out << render_poly(k, f, powersum_poly(k, f), fmt);
    } else if (*verify) {
      VerificationReport report = verify_grid(kmax, nmax);
      report.merge(verify_identities(kmax));
      out << render_report(report, fmt);
      return report.pass() ? exit_code::ok : exit_code::mismatch;
    }
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return exit_code::domain;
  } catch (const CeilingError& e) {
    err << "refused: " << e.what() << "\n";
    return exit_code::ceiling;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::internal;
  }
  return exit_code::ok;
}

}  // namespace powersum::cli
