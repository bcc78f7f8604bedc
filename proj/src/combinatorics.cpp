#include "powersum/combinatorics.hpp"

#include <atomic>
#include <string>

#include "powersum/errors.hpp"

namespace powersum {

namespace {

std::atomic<unsigned> g_ceiling{kDefaultCeiling};

void require_j_le_k(unsigned k, unsigned j, const char* what) {
  if (j > k) {
    throw PreconditionError(std::string(what) + ": j=" + std::to_string(j) +
                            " exceeds k=" + std::to_string(k));
  }
}

}  // namespace

unsigned resource_ceiling() { return g_ceiling.load(std::memory_order_relaxed); }

void set_resource_ceiling(unsigned ceiling) {
  if (ceiling > kHardCeiling) {
    throw PreconditionError("ceiling " + std::to_string(ceiling) + " exceeds the hard limit " +
                            std::to_string(kHardCeiling));
  }
  g_ceiling.store(ceiling, std::memory_order_relaxed);
}

void enforce_ceiling(unsigned k, const char* what) {
  const unsigned ceiling = resource_ceiling();
  if (k > ceiling) {
    throw CeilingError(std::string(what) + ": k=" + std::to_string(k) +
                       " exceeds the resource ceiling " + std::to_string(ceiling));
  }
}

StirlingTable::StirlingTable(unsigned kmax) {
  enforce_ceiling(kmax, "stirling_table");
  rows_.reserve(kmax + 1);
  rows_.push_back({Integer(1)});
  for (unsigned k = 1; k <= kmax; ++k) {
    const auto& prev = rows_.back();
    std::vector<Integer> cur(k + 1);
    cur[0] = 0;
    for (unsigned j = 1; j <= k; ++j) {
      const Integer above = (j < k) ? prev[j] : Integer(0);
      cur[j] = j * above + prev[j - 1];
    }
    rows_.push_back(std::move(cur));
  }
}

const Integer& StirlingTable::entry(unsigned k, unsigned j) const {
  if (k > kmax()) {
    throw PreconditionError("StirlingTable::entry: k=" + std::to_string(k) + " beyond kmax=" +
                            std::to_string(kmax()));
  }
  require_j_le_k(k, j, "StirlingTable::entry");
  return rows_[k][j];
}

std::span<const Integer> StirlingTable::row(unsigned k) const {
  if (k > kmax()) {
    throw PreconditionError("StirlingTable::row: k=" + std::to_string(k) + " beyond kmax=" +
                            std::to_string(kmax()));
  }
  return rows_[k];
}

StirlingTable stirling_table(unsigned kmax) { return StirlingTable(kmax); }

Integer stirling_explicit(unsigned k, unsigned j) {
  require_j_le_k(k, j, "stirling_explicit");
  Integer sum = 0;
  for (unsigned i = 0; i <= j; ++i) {
    Integer term = binomial(Integer(j), i) * power(static_cast<unsigned long>(i), k);
    if ((j - i) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const Integer jf = factorial(j);
  if (!mpz_divisible_p(sum.get_mpz_t(), jf.get_mpz_t())) {
    throw IntegralityError("stirling_explicit(" + std::to_string(k) + "," + std::to_string(j) +
                           "): alternating sum not divisible by j!");
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), sum.get_mpz_t(), jf.get_mpz_t());
  return out;
}

Rational coeff_direct(unsigned k, unsigned j) {
  require_j_le_k(k, j, "coeff_direct");
  Rational sum;
  for (unsigned i = 0; i <= j; ++i) {
    Rational term(power(static_cast<unsigned long>(i), k), factorial(i) * factorial(j - i));
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum / Rational(static_cast<long>(j) + 1);
}

Rational coeff_via_stirling(unsigned k, unsigned j, const StirlingTable& table) {
  if (k > table.kmax()) {
    throw PreconditionError("coeff_via_stirling: k=" + std::to_string(k) + " beyond table kmax=" +
                            std::to_string(table.kmax()));
  }
  require_j_le_k(k, j, "coeff_via_stirling");
  return Rational(sign_power(j) * table.entry(k, j), Integer(j + 1));
}

bool CoefficientRow::satisfies_special_values() const {
  if (coefficients.size() != k + 1) return false;
  if (coefficients[k] != Rational(sign_power(k), Integer(k + 1))) return false;
  if (k >= 1) {
    if (coefficients[1] != Rational(-1, 2)) return false;
    if (!coefficients[0].is_zero()) return false;
  }
  return true;
}

CoefficientRow coeff_row(unsigned k) {
  enforce_ceiling(k, "coeff_row");
  CoefficientRow row{k, {}};
  row.coefficients.reserve(k + 1);
  for (unsigned j = 0; j <= k; ++j) row.coefficients.push_back(coeff_direct(k, j));
  return row;
}

}  // namespace powersum
