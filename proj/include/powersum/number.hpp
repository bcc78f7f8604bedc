#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace powersum {

using Integer = mpz_class;

/// Nonnegative arbitrary-precision integer.
class Natural {
 public:
  Natural() = default;
  Natural(unsigned long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Natural(Integer v);

  /// Parses a decimal string; throws PreconditionError on anything else.
  static Natural parse(std::string_view text);

  const Integer& value() const { return value_; }
  std::string str() const { return value_.get_str(); }

  bool is_zero() const { return sgn(value_) == 0; }

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  Integer value_{0};
};

/// Exact fraction, always stored with a positive denominator and
/// gcd(|numerator|, denominator) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}                 // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}       // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  /// Parses "p" or "p/q"; the result is normalized.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// The integer value; throws IntegralityError when the denominator is not 1.
  Integer to_integer(std::string_view context = "rational") const;

  /// "p" when integral, otherwise "p/q".
  std::string str() const { return q_.get_str(); }

  /// Holds for every value this class produces; exposed for tests.
  bool is_normalized() const;

  const mpq_class& raw() const { return q_; }

  Rational operator-() const { return from_raw(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

 private:
  static Rational from_raw(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Natural& n);
std::ostream& operator<<(std::ostream& os, const Rational& r);

// Integer helpers. All exact; 0^0 = 1.
Integer power(const Integer& base, unsigned exponent);
Integer power(unsigned long base, unsigned exponent);
Integer factorial(unsigned n);
/// C(m, r) for m >= 0; zero when r > m.
Integer binomial(const Integer& m, unsigned long r);
/// (-1)^e as +1/-1.
inline int sign_power(unsigned e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace powersum
