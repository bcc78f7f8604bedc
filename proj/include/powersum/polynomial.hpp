#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powersum/number.hpp"

namespace powersum {

/// Dense univariate polynomial over the rationals. Coefficient d multiplies
/// x^d; trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and no degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  /// The indeterminate x.
  static Polynomial x();
  /// c * x^d.
  static Polynomial monomial(const Rational& c, std::size_t d);

  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of x^d, zero beyond the degree.
  Rational coefficient(std::size_t d) const;
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& leading() const;

  Rational operator()(const Rational& at) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form in the variable name, highest degree first.
  std::string str(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Rational poly_eval(const Polynomial& p, const Rational& at);

/// Quotient of p / divisor; throws InexactDivisionError on a nonzero
/// remainder and PreconditionError on a zero divisor.
Polynomial divide_exact(const Polynomial& p, const Polynomial& divisor);

/// q(x) = p(-x - 1).
Polynomial transform_reflect(const Polynomial& p);

}  // namespace powersum
