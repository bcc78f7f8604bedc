#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "powersum/combinatorics.hpp"
#include "powersum/evaluator.hpp"
#include "powersum/polynomial.hpp"
#include "powersum/verify.hpp"

namespace powersum::cli {

enum class OutputFormat { plain, json, csv, latex };

std::optional<OutputFormat> parse_format(std::string_view name);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int mismatch = 1;
inline constexpr int usage = 2;
inline constexpr int domain = 3;
inline constexpr int ceiling = 4;
inline constexpr int internal = 5;
}  // namespace exit_code

std::string render_stirling(const StirlingTable& table, OutputFormat fmt);
std::string render_coeffs(const CoefficientRow& row, OutputFormat fmt);
std::string render_evaluation(const Evaluation& e, OutputFormat fmt);
/// Several routes at one (k, n) plus whether they all agree.
std::string render_evaluations(unsigned k, const Natural& n, const std::vector<Evaluation>& evals,
                               OutputFormat fmt);
std::string render_poly(unsigned k, FormulaId formula, const Polynomial& p, OutputFormat fmt);
std::string render_report(const VerificationReport& report, OutputFormat fmt);

/// Runs one command line (without the program name). Payload goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace powersum::cli
