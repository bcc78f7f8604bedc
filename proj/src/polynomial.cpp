#include "powersum/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "powersum/errors.hpp"

namespace powersum {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial Polynomial::x() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t d) {
  if (c.is_zero()) return {};
  std::vector<Rational> coeffs(d + 1);
  coeffs[d] = c;
  return Polynomial(std::move(coeffs));
}

Rational Polynomial::coefficient(std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : Rational();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

std::string Polynomial::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    const Rational& c = coeffs_[d];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (d == 0 || !unit) os << mag;
    if (d >= 1) {
      if (!unit) os << "*";
      os << var;
      if (d >= 2) os << "^" << d;
    }
  }
  return os.str();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Rational poly_eval(const Polynomial& p, const Rational& at) { return p(at); }

Polynomial divide_exact(const Polynomial& p, const Polynomial& divisor) {
  if (divisor.is_zero()) throw PreconditionError("divide_exact: zero divisor");
  if (p.is_zero()) return {};
  const std::size_t dd = *divisor.degree();
  const std::size_t pd = *p.degree();
  if (pd < dd) {
    throw InexactDivisionError("divide_exact: dividend degree below divisor degree");
  }
  std::vector<Rational> rem(p.coefficients().begin(), p.coefficients().end());
  std::vector<Rational> quot(pd - dd + 1);
  const Rational& lead = divisor.leading();
  for (std::size_t shift = pd - dd + 1; shift-- > 0;) {
    const Rational factor = rem[shift + dd] / lead;
    quot[shift] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t i = 0; i <= dd; ++i) rem[shift + i] -= factor * divisor.coefficients()[i];
  }
  const bool exact = std::all_of(rem.begin(), rem.end(), [](const Rational& r) { return r.is_zero(); });
  if (!exact) {
    throw InexactDivisionError("divide_exact: nonzero remainder " + Polynomial(rem).str());
  }
  return Polynomial(std::move(quot));
}

Polynomial transform_reflect(const Polynomial& p) {
  // Horner in the substituted variable -x - 1.
  const Polynomial sub(std::vector<Rational>{Rational(-1), Rational(-1)});
  Polynomial acc;
  const auto coeffs = p.coefficients();
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    acc *= sub;
    acc += Polynomial(coeffs[d]);
  }
  return acc;
}

}  // namespace powersum
