#pragma once

// Deliberately broken verification inputs. Test-only; the CLI never sees these.

#include "powersum/verify.hpp"

namespace faults {

/// Standard grid inputs with exactly one route's row perturbed.
powersum::GridInputs grid_with_fault(powersum::FormulaId broken);

/// coeff_via_stirling without the (-1)^j factor: wrong at every odd j.
powersum::IdentityInputs identities_with_unsigned_coefficients();

}  // namespace faults
