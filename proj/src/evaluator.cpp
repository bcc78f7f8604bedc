#include "powersum/evaluator.hpp"

#include <mutex>
#include <string>

#include "powersum/errors.hpp"

namespace powersum {

namespace {

std::string where(const char* route, unsigned k, const Natural& n) {
  return std::string(route) + "(k=" + std::to_string(k) + ", n=" + n.str() + ")";
}

Natural finish(const Integer& value, const char* route, unsigned k, const Natural& n) {
  if (sgn(value) < 0) {
    throw IntegralityError(where(route, k, n) + ": negative power sum " + value.get_str());
  }
  return Natural(value);
}

Natural finish(const Rational& value, const char* route, unsigned k, const Natural& n) {
  return finish(value.to_integer(where(route, k, n)), route, k, n);
}

void require_row(std::span<const Integer> row, unsigned k, const char* route) {
  if (row.size() != static_cast<std::size_t>(k) + 1) {
    throw PreconditionError(std::string(route) + ": expected a row of length " +
                            std::to_string(k + 1) + ", got " + std::to_string(row.size()));
  }
}

void require_table(const StirlingTable& table, unsigned k, const char* route) {
  if (k > table.kmax()) {
    throw PreconditionError(std::string(route) + ": k=" + std::to_string(k) +
                            " beyond table kmax=" + std::to_string(table.kmax()));
  }
}

}  // namespace

std::string_view to_string(FormulaId f) {
  switch (f) {
    case FormulaId::naive: return "naive";
    case FormulaId::samsonadze: return "samsonadze";
    case FormulaId::binomial: return "binomial";
    case FormulaId::stirling: return "stirling";
    case FormulaId::companion: return "companion";
    case FormulaId::factorized: return "factorized";
  }
  return "?";
}

std::optional<FormulaId> parse_formula(std::string_view name) {
  for (FormulaId f : kAllFormulas) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

void require_domain(FormulaId f, unsigned k) {
  if (!in_domain(f, k)) {
    throw DomainError(std::string(to_string(f)) + " formula requires k >= 1, got k=" +
                      std::to_string(k));
  }
}

Natural power_sum_naive(unsigned k, const Natural& n) {
  if (!n.value().fits_ulong_p()) {
    throw PreconditionError("power_sum_naive: n=" + n.str() + " too large to enumerate");
  }
  const unsigned long count = n.value().get_ui();
  Integer sum = 0;
  for (unsigned long i = 1; i <= count; ++i) sum += power(i, k);
  return Natural(sum);
}

Natural eval_samsonadze(unsigned k, const Natural& n, const CoefficientRow& row) {
  if (row.k != k || row.coefficients.size() != static_cast<std::size_t>(k) + 1) {
    throw PreconditionError("eval_samsonadze: coefficient row is for k=" + std::to_string(row.k) +
                            ", expected k=" + std::to_string(k));
  }
  Rational sum;
  Integer rising = n.value();  // n(n+1)...(n+j)
  for (unsigned j = 0; j <= k; ++j) {
    sum += row.coefficients[j] * Rational(rising);
    rising *= n.value() + (j + 1);
  }
  if (k % 2 == 1) sum = -sum;
  return finish(sum, "eval_samsonadze", k, n);
}

std::vector<Integer> alternating_power_sums(unsigned k) {
  std::vector<Integer> sums;
  sums.reserve(k + 1);
  for (unsigned j = 0; j <= k; ++j) {
    Integer t = 0;
    for (unsigned i = 0; i <= j; ++i) {
      Integer term = binomial(Integer(j), i) * power(static_cast<unsigned long>(i), k);
      if (i % 2 == 0) {
        t += term;
      } else {
        t -= term;
      }
    }
    sums.push_back(std::move(t));
  }
  return sums;
}

Natural eval_binomial(unsigned k, const Natural& n) {
  return eval_binomial(k, n, alternating_power_sums(k));
}

Natural eval_binomial(unsigned k, const Natural& n, std::span<const Integer> alternating_sums) {
  require_row(alternating_sums, k, "eval_binomial");
  Rational sum;
  for (unsigned j = 0; j <= k; ++j) {
    const Integer jf = factorial(j);
    sum += Rational(jf * binomial(n.value() + j, j + 1)) * Rational(alternating_sums[j], jf);
  }
  if (k % 2 == 1) sum = -sum;
  return finish(sum, "eval_binomial", k, n);
}

Natural eval_stirling(unsigned k, const Natural& n, const StirlingTable& table) {
  require_table(table, k, "eval_stirling");
  return eval_stirling(k, n, table.row(k));
}

Natural eval_stirling(unsigned k, const Natural& n, std::span<const Integer> stirling_row) {
  require_row(stirling_row, k, "eval_stirling");
  Integer sum = 0;
  for (unsigned j = 0; j <= k; ++j) {
    Integer term = factorial(j) * stirling_row[j] * binomial(n.value() + j, j + 1);
    if ((k - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return finish(sum, "eval_stirling", k, n);
}

Natural eval_companion(unsigned k, const Natural& n, const StirlingTable& table) {
  require_domain(FormulaId::companion, k);
  require_table(table, k, "eval_companion");
  return eval_companion(k, n, table.row(k));
}

Natural eval_companion(unsigned k, const Natural& n, std::span<const Integer> stirling_row) {
  require_domain(FormulaId::companion, k);
  require_row(stirling_row, k, "eval_companion");
  const Integer top = n.value() + 1;
  Integer sum = 0;
  for (unsigned j = 0; j <= k; ++j) {
    sum += factorial(j) * stirling_row[j] * binomial(top, j + 1);
  }
  return finish(sum, "eval_companion", k, n);
}

Natural eval_factorized(unsigned k, const Natural& n, const StirlingTable& table) {
  require_domain(FormulaId::factorized, k);
  require_table(table, k, "eval_factorized");
  return eval_factorized(k, n, table.row(k));
}

Natural eval_factorized(unsigned k, const Natural& n, std::span<const Integer> stirling_row) {
  require_domain(FormulaId::factorized, k);
  require_row(stirling_row, k, "eval_factorized");
  Rational inner;
  for (unsigned j = 1; j <= k; ++j) {
    Rational term = Rational(factorial(j - 1), Integer(j + 1)) *
                    Rational(stirling_row[j] * binomial(n.value() + j, j - 1));
    if ((k - j) % 2 == 0) {
      inner += term;
    } else {
      inner -= term;
    }
  }
  const Rational s1 = Rational(n.value() * (n.value() + 1), Integer(2));
  return finish(Rational(2) * s1 * inner, "eval_factorized", k, n);
}

std::shared_ptr<const StirlingTable> shared_stirling_table(unsigned kmax) {
  static std::mutex mutex;
  static std::shared_ptr<const StirlingTable> cached;
  std::lock_guard lock(mutex);
  if (!cached || cached->kmax() < kmax) {
    cached = std::make_shared<const StirlingTable>(kmax);
  }
  return cached;
}

Evaluation eval(FormulaId formula, unsigned k, const Natural& n) {
  require_domain(formula, k);
  enforce_ceiling(k, "eval");
  Evaluation out{k, n, formula, Natural{}};
  switch (formula) {
    case FormulaId::naive:
      out.value = power_sum_naive(k, n);
      break;
    case FormulaId::samsonadze:
      out.value = eval_samsonadze(k, n, coeff_row(k));
      break;
    case FormulaId::binomial:
      out.value = eval_binomial(k, n);
      break;
    case FormulaId::stirling:
      out.value = eval_stirling(k, n, *shared_stirling_table(k));
      break;
    case FormulaId::companion:
      out.value = eval_companion(k, n, *shared_stirling_table(k));
      break;
    case FormulaId::factorized:
      out.value = eval_factorized(k, n, *shared_stirling_table(k));
      break;
  }
  return out;
}

}  // namespace powersum
