#include "powersum/powersum_poly.hpp"

#include <string>

#include "powersum/errors.hpp"

namespace powersum {

namespace {

Polynomial linear(long constant) {
  return Polynomial(std::vector<Rational>{Rational(constant), Rational(1)});
}

Polynomial signed_if(bool negate, Polynomial p) { return negate ? -p : p; }

Polynomial samsonadze_poly(unsigned k) {
  const CoefficientRow row = coeff_row(k);
  Polynomial sum;
  for (unsigned j = 0; j <= k; ++j) sum += row.coefficients[j] * poly_rising_factorial(j);
  return signed_if(k % 2 == 1, std::move(sum));
}

Polynomial binomial_poly(unsigned k) {
  const auto alternating = alternating_power_sums(k);
  Polynomial sum;
  for (unsigned j = 0; j <= k; ++j) {
    const Integer jf = factorial(j);
    sum += (Rational(jf) * Rational(alternating[j], jf)) * poly_binomial(j, j + 1);
  }
  return signed_if(k % 2 == 1, std::move(sum));
}

Polynomial stirling_poly(unsigned k, const StirlingTable& table) {
  Polynomial sum;
  for (unsigned j = 0; j <= k; ++j) {
    const Rational c(factorial(j) * table.entry(k, j));
    sum += signed_if((k - j) % 2 == 1, c * poly_binomial(j, j + 1));
  }
  return sum;
}

Polynomial companion_poly(unsigned k, const StirlingTable& table) {
  Polynomial sum;
  for (unsigned j = 0; j <= k; ++j) {
    sum += Rational(factorial(j) * table.entry(k, j)) * poly_binomial(1, j + 1);
  }
  return sum;
}

Polynomial factorized_poly(unsigned k, const StirlingTable& table) {
  Polynomial inner;
  for (unsigned j = 1; j <= k; ++j) {
    const Rational c = Rational(factorial(j - 1), Integer(j + 1)) * Rational(table.entry(k, j));
    inner += signed_if((k - j) % 2 == 1, c * poly_binomial(j, j - 1));
  }
  return twice_s1_poly() * inner;
}

}  // namespace

Polynomial poly_rising_factorial(unsigned j) {
  Polynomial p = Polynomial::x();
  for (unsigned i = 1; i <= j; ++i) p *= linear(static_cast<long>(i));
  return p;
}

Polynomial poly_binomial(unsigned shift, unsigned m) {
  Polynomial p(Rational(1));
  for (unsigned i = 0; i < m; ++i) p *= linear(static_cast<long>(shift) - static_cast<long>(i));
  return p * Rational(Integer(1), factorial(m));
}

Polynomial twice_s1_poly() { return Polynomial(std::vector<Rational>{0, 1, 1}); }

Polynomial powersum_poly(unsigned k, FormulaId formula) {
  if (formula == FormulaId::naive) {
    throw PreconditionError("powersum_poly: the naive route has no polynomial form");
  }
  require_domain(formula, k);
  enforce_ceiling(k, "powersum_poly");
  switch (formula) {
    case FormulaId::samsonadze: return samsonadze_poly(k);
    case FormulaId::binomial: return binomial_poly(k);
    case FormulaId::stirling: return stirling_poly(k, *shared_stirling_table(k));
    case FormulaId::companion: return companion_poly(k, *shared_stirling_table(k));
    case FormulaId::factorized: return factorized_poly(k, *shared_stirling_table(k));
    case FormulaId::naive: break;
  }
  return {};
}

namespace {

void require_positive_k(unsigned k, const char* what) {
  if (k == 0) {
    throw DomainError(std::string(what) +
                      " requires k >= 1: S_0(x) = x is not symmetric under x -> -x-1");
  }
}

}  // namespace

bool check_symmetry(unsigned k) {
  require_positive_k(k, "check_symmetry");
  const Polynomial s = powersum_poly(k, FormulaId::stirling);
  const Polynomial expected = (k % 2 == 1) ? s : -s;  // (-1)^(k+1)
  return transform_reflect(s) == expected;
}

bool check_transform_equivalence(unsigned k) {
  require_positive_k(k, "check_transform_equivalence");
  Polynomial reflected = transform_reflect(powersum_poly(k, FormulaId::companion));
  if (k % 2 == 0) reflected = -reflected;
  return reflected == powersum_poly(k, FormulaId::stirling);
}

Polynomial factor_out_s1(unsigned k) {
  require_domain(FormulaId::factorized, k);
  return divide_exact(Rational(2) * powersum_poly(k, FormulaId::stirling), twice_s1_poly());
}

}  // namespace powersum
