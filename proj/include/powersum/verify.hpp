#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "powersum/combinatorics.hpp"
#include "powersum/evaluator.hpp"
#include "powersum/polynomial.hpp"

namespace powersum {

/// A route that threw instead of returning a value; the message is kept.
struct RouteFailure {
  std::string message;
  friend bool operator==(const RouteFailure&, const RouteFailure&) = default;
};

using Witness = std::variant<Integer, Rational, Polynomial, bool, RouteFailure>;

struct Mismatch {
  std::string check;                 // "oracle" for grid cells, otherwise the identity name
  std::optional<FormulaId> formula;  // route under test, if the check is per-route
  unsigned k = 0;
  std::optional<unsigned> index;     // n for grid cells, j for coefficient checks;
                                     // empty for polynomial-level checks
  Witness expected;
  Witness actual;
};

bool operator==(const Mismatch& a, const Mismatch& b);

struct VerificationReport {
  std::uint64_t checks_run = 0;
  std::vector<Mismatch> mismatches;
  std::chrono::duration<double, std::milli> elapsed{0};

  bool pass() const { return mismatches.empty(); }

  /// Sums counts and concatenates mismatches, then restores the canonical
  /// (check, formula, k, index) order. Associative and commutative.
  void merge(VerificationReport other);
  void normalize();
};

enum class Execution { serial, parallel };

/// Per-route inputs the grid evaluates with. `standard()` derives them from
/// the library; tests substitute perturbed rows to inject faults.
struct GridInputs {
  std::function<CoefficientRow(unsigned k)> samsonadze_row;
  std::function<std::vector<Integer>(unsigned k)> binomial_sums;
  std::function<std::vector<Integer>(unsigned k)> stirling_row;
  std::function<std::vector<Integer>(unsigned k)> companion_row;
  std::function<std::vector<Integer>(unsigned k)> factorized_row;

  static GridInputs standard();
};

struct IdentityInputs {
  std::function<Rational(unsigned k, unsigned j, const StirlingTable&)> coeff_via_stirling;

  static IdentityInputs standard();
};

/// Compares every closed form within its domain against power_sum_naive on
/// 0 <= k <= kmax, 0 <= n <= nmax. The naive route itself is not counted.
VerificationReport verify_grid(unsigned kmax, unsigned nmax, Execution exec = Execution::parallel);
VerificationReport verify_grid(unsigned kmax, unsigned nmax, const GridInputs& inputs,
                               Execution exec = Execution::parallel);

/// Number of (formula, k, n) triples verify_grid evaluates.
std::uint64_t grid_check_count(unsigned kmax, unsigned nmax);

/// Coefficient, Stirling, polynomial, symmetry, transformation and
/// factorization identities for every k <= kmax.
VerificationReport verify_identities(unsigned kmax, Execution exec = Execution::parallel);
VerificationReport verify_identities(unsigned kmax, const IdentityInputs& inputs,
                                     Execution exec = Execution::parallel);

std::uint64_t identity_check_count(unsigned kmax);

/// S_k interpolated from power_sum_naive at n = 0..k+1 (Newton forward
/// differences). Shares no code with the closed-form builders.
Polynomial interpolate_naive(unsigned k);

}  // namespace powersum
