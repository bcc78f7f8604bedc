#include "powersum/number.hpp"

#include <ostream>

#include "powersum/errors.hpp"

namespace powersum {

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_decimal(s)) {
    throw PreconditionError("not a decimal integer: '" + std::string(s) + "'");
  }
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Natural::Natural(Integer v) : value_(std::move(v)) {
  if (sgn(value_) < 0) {
    throw PreconditionError("Natural must be nonnegative, got " + value_.get_str());
  }
}

Natural Natural::parse(std::string_view text) { return Natural(parse_integer(text)); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw PreconditionError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Integer Rational::to_integer(std::string_view context) const {
  if (!is_integer()) {
    throw IntegralityError(std::string(context) + ": expected an integer, got " + str());
  }
  return q_.get_num();
}

bool Rational::is_normalized() const {
  if (sgn(q_.get_den()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return g == 1;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.str(); }
std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer power(const Integer& base, unsigned exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer power(unsigned long base, unsigned exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(const Integer& m, unsigned long r) {
  if (sgn(m) < 0) throw PreconditionError("binomial: negative upper argument " + m.get_str());
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), m.get_mpz_t(), r);
  return out;
}

}  // namespace powersum
