#pragma once

#include "powersum/evaluator.hpp"
#include "powersum/polynomial.hpp"

namespace powersum {

/// x(x+1)...(x+j): monic, degree j+1.
Polynomial poly_rising_factorial(unsigned j);

/// C(x + shift, m) = (x+shift)(x+shift-1)...(x+shift-m+1) / m!; the constant 1 for m = 0.
Polynomial poly_binomial(unsigned shift, unsigned m);

/// S_k(x) assembled symbolically from one closed form. Throws DomainError for
/// companion/factorized at k = 0 and PreconditionError for the naive route,
/// which has no polynomial form.
Polynomial powersum_poly(unsigned k, FormulaId formula);

/// x^2 + x, i.e. 2 S_1(x).
Polynomial twice_s1_poly();

/// reflect(S_k) == (-1)^(k+1) S_k using the stirling route. k >= 1.
bool check_symmetry(unsigned k);

/// (-1)^(k+1) reflect(companion S_k) == stirling S_k. k >= 1.
bool check_transform_equivalence(unsigned k);

/// 2 S_k(x) / (x^2 + x); throws InexactDivisionError if not exact.
Polynomial factor_out_s1(unsigned k);

}  // namespace powersum
