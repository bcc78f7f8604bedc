#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "powersum/combinatorics.hpp"
#include "powersum/number.hpp"

namespace powersum {

enum class FormulaId { naive, samsonadze, binomial, stirling, companion, factorized };

inline constexpr std::array<FormulaId, 6> kAllFormulas{
    FormulaId::naive,    FormulaId::samsonadze, FormulaId::binomial,
    FormulaId::stirling, FormulaId::companion,  FormulaId::factorized};

inline constexpr std::array<FormulaId, 5> kClosedForms{
    FormulaId::samsonadze, FormulaId::binomial, FormulaId::stirling, FormulaId::companion,
    FormulaId::factorized};

std::string_view to_string(FormulaId f);
std::optional<FormulaId> parse_formula(std::string_view name);

/// companion and factorized need k >= 1; everything else accepts k >= 0.
constexpr bool in_domain(FormulaId f, unsigned k) {
  return k >= 1 || (f != FormulaId::companion && f != FormulaId::factorized);
}
/// Throws DomainError when !in_domain(f, k).
void require_domain(FormulaId f, unsigned k);

struct Evaluation {
  unsigned k = 0;
  Natural n;
  FormulaId formula = FormulaId::naive;
  Natural value;
};

/// 1^k + ... + n^k by direct summation. S_k(0) = 0.
Natural power_sum_naive(unsigned k, const Natural& n);

/// (-1)^k sum_j a_{k,j} n(n+1)...(n+j).
Natural eval_samsonadze(unsigned k, const Natural& n, const CoefficientRow& row);

/// T_j = sum_i (-1)^i C(j,i) i^k for j = 0..k.
std::vector<Integer> alternating_power_sums(unsigned k);

/// (-1)^k sum_j j! C(n+j, j+1) T_j / j!.
Natural eval_binomial(unsigned k, const Natural& n);
Natural eval_binomial(unsigned k, const Natural& n, std::span<const Integer> alternating_sums);

// The three Stirling-number routes accept either a table or the single row
// S(k, 0..k) they read from it.

/// sum_j (-1)^(k-j) j! S(k,j) C(n+j, j+1).
Natural eval_stirling(unsigned k, const Natural& n, const StirlingTable& table);
Natural eval_stirling(unsigned k, const Natural& n, std::span<const Integer> stirling_row);

/// sum_j j! S(k,j) C(n+1, j+1). k >= 1 only.
Natural eval_companion(unsigned k, const Natural& n, const StirlingTable& table);
Natural eval_companion(unsigned k, const Natural& n, std::span<const Integer> stirling_row);

/// 2 S_1(n) sum_{j>=1} (-1)^(k-j) (j-1)!/(j+1) S(k,j) C(n+j, j-1). k >= 1 only.
Natural eval_factorized(unsigned k, const Natural& n, const StirlingTable& table);
Natural eval_factorized(unsigned k, const Natural& n, std::span<const Integer> stirling_row);

/// Process-wide Stirling table covering at least kmax. Grows on demand; safe
/// under concurrent first use. Returned tables are never mutated.
std::shared_ptr<const StirlingTable> shared_stirling_table(unsigned kmax);

/// Dispatch by formula, building whatever tables or rows the route needs.
Evaluation eval(FormulaId formula, unsigned k, const Natural& n);

}  // namespace powersum
