#include "powersum/verify.hpp"

#include <algorithm>
#include <exception>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "powersum/errors.hpp"
#include "powersum/powersum_poly.hpp"

namespace powersum {

namespace {

using Clock = std::chrono::steady_clock;

auto sort_key(const Mismatch& m) {
  const int formula = m.formula ? static_cast<int>(*m.formula) : -1;
  const long index = m.index ? static_cast<long>(*m.index) : -1;
  return std::make_tuple(m.check, formula, m.k, index);
}

// One k's worth of route inputs, prepared before the cells fan out.
struct PreparedRow {
  unsigned k = 0;
  CoefficientRow samsonadze;
  std::vector<Integer> binomial;
  std::vector<Integer> stirling;
  std::vector<Integer> companion;
  std::vector<Integer> factorized;
};

PreparedRow prepare(unsigned k, const GridInputs& in) {
  PreparedRow row;
  row.k = k;
  row.samsonadze = in.samsonadze_row(k);
  row.binomial = in.binomial_sums(k);
  row.stirling = in.stirling_row(k);
  if (k >= 1) {
    row.companion = in.companion_row(k);
    row.factorized = in.factorized_row(k);
  }
  return row;
}

Natural evaluate(FormulaId f, const PreparedRow& row, const Natural& n) {
  switch (f) {
    case FormulaId::samsonadze: return eval_samsonadze(row.k, n, row.samsonadze);
    case FormulaId::binomial: return eval_binomial(row.k, n, row.binomial);
    case FormulaId::stirling: return eval_stirling(row.k, n, row.stirling);
    case FormulaId::companion: return eval_companion(row.k, n, row.companion);
    case FormulaId::factorized: return eval_factorized(row.k, n, row.factorized);
    case FormulaId::naive: break;
  }
  return power_sum_naive(row.k, n);
}

// All closed forms at one (k, n) cell.
void check_cell(const PreparedRow& row, unsigned n, VerificationReport& out) {
  const Natural nn(n);
  const Integer expected = power_sum_naive(row.k, nn).value();
  for (FormulaId f : kClosedForms) {
    if (!in_domain(f, row.k)) continue;
    ++out.checks_run;
    Witness actual;
    try {
      const Natural v = evaluate(f, row, nn);
      if (v.value() == expected) continue;
      actual = v.value();
    } catch (const std::exception& e) {
      actual = RouteFailure{e.what()};
    }
    out.mismatches.push_back(Mismatch{"oracle", f, row.k, n, expected, std::move(actual)});
  }
}

// Runs body(i, report) for i in [0, count), serially or across OpenMP threads,
// and merges per-thread reports.
template <typename Body>
VerificationReport fan_out(std::size_t count, Execution exec, Body&& body) {
  VerificationReport total;
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i, total);
  } else {
#pragma omp parallel
    {
      VerificationReport local;
#pragma omp for schedule(dynamic, 8) nowait
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
        body(static_cast<std::size_t>(i), local);
      }
#pragma omp critical(powersum_verify_merge)
      total.merge(std::move(local));
    }
  }
  total.normalize();
  return total;
}

template <typename T>
void expect_equal(VerificationReport& out, const char* check, std::optional<FormulaId> formula,
                  unsigned k, std::optional<unsigned> index, const T& expected, const T& actual) {
  ++out.checks_run;
  if (expected == actual) return;
  out.mismatches.push_back(Mismatch{check, formula, k, index, expected, actual});
}

// Runs a throwing check; an exception becomes a mismatch carrying the message.
template <typename Fn>
void guarded(VerificationReport& out, const char* check, std::optional<FormulaId> formula,
             unsigned k, std::optional<unsigned> index, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    ++out.checks_run;
    out.mismatches.push_back(
        Mismatch{check, formula, k, index, Witness{true}, RouteFailure{e.what()}});
  }
}

void check_identities_at(unsigned k, const StirlingTable& table, const IdentityInputs& in,
                         VerificationReport& out) {
  for (unsigned j = 0; j <= k; ++j) {
    guarded(out, "coeff_routes", std::nullopt, k, j, [&] {
      expect_equal(out, "coeff_routes", std::nullopt, k, j, coeff_direct(k, j),
                   in.coeff_via_stirling(k, j, table));
    });
    guarded(out, "stirling_routes", std::nullopt, k, j, [&] {
      expect_equal(out, "stirling_routes", std::nullopt, k, j, table.entry(k, j),
                   stirling_explicit(k, j));
    });
  }

  const Rational last = coeff_direct(k, k);
  expect_equal(out, "special_value_akk", std::nullopt, k, k,
               Rational(sign_power(k), Integer(k + 1)), last);
  if (k >= 1) {
    expect_equal(out, "special_value_ak1", std::nullopt, k, 1u, Rational(-1, 2), coeff_direct(k, 1));
    expect_equal(out, "special_value_ak0", std::nullopt, k, 0u, Rational(0), coeff_direct(k, 0));
  }

  const Polynomial reference = interpolate_naive(k);
  for (FormulaId f : kClosedForms) {
    if (!in_domain(f, k)) continue;
    guarded(out, "poly_equality", f, k, std::nullopt, [&] {
      expect_equal(out, "poly_equality", f, k, std::nullopt, reference, powersum_poly(k, f));
    });
  }

  guarded(out, "poly_shape", FormulaId::stirling, k, std::nullopt, [&] {
    const Polynomial p = powersum_poly(k, FormulaId::stirling);
    const auto deg = p.degree();
    expect_equal(out, "poly_degree", FormulaId::stirling, k, std::nullopt, Integer(k + 1),
                 Integer(deg ? static_cast<long>(*deg) : -1L));
    expect_equal(out, "poly_constant_term", FormulaId::stirling, k, std::nullopt, Rational(0),
                 p.coefficient(0));
    expect_equal(out, "poly_leading_coefficient", FormulaId::stirling, k, std::nullopt,
                 Rational(Integer(1), Integer(k + 1)), p.is_zero() ? Rational(0) : p.leading());
    expect_equal(out, "poly_value_at_one", FormulaId::stirling, k, std::nullopt, Rational(1),
                 p(Rational(1)));
  });

  if (k >= 1) {
    guarded(out, "symmetry", std::nullopt, k, std::nullopt,
            [&] { expect_equal(out, "symmetry", std::nullopt, k, std::nullopt, true, check_symmetry(k)); });
    guarded(out, "transform_equivalence", std::nullopt, k, std::nullopt, [&] {
      expect_equal(out, "transform_equivalence", std::nullopt, k, std::nullopt, true,
                   check_transform_equivalence(k));
    });
    guarded(out, "factorization", std::nullopt, k, std::nullopt, [&] {
      const Polynomial q = factor_out_s1(k);
      expect_equal(out, "factorization", std::nullopt, k, std::nullopt,
                   Rational(2) * powersum_poly(k, FormulaId::stirling), q * twice_s1_poly());
    });
  }
}

}  // namespace

bool operator==(const Mismatch& a, const Mismatch& b) {
  return a.check == b.check && a.formula == b.formula && a.k == b.k && a.index == b.index &&
         a.expected == b.expected && a.actual == b.actual;
}

void VerificationReport::merge(VerificationReport other) {
  checks_run += other.checks_run;
  mismatches.insert(mismatches.end(), std::make_move_iterator(other.mismatches.begin()),
                    std::make_move_iterator(other.mismatches.end()));
  elapsed += other.elapsed;
  normalize();
}

void VerificationReport::normalize() {
  std::stable_sort(mismatches.begin(), mismatches.end(),
                   [](const Mismatch& a, const Mismatch& b) { return sort_key(a) < sort_key(b); });
}

GridInputs GridInputs::standard() {
  auto row = [](unsigned k) {
    const auto table = shared_stirling_table(k);
    const auto r = table->row(k);
    return std::vector<Integer>(r.begin(), r.end());
  };
  return GridInputs{coeff_row, alternating_power_sums, row, row, row};
}

IdentityInputs IdentityInputs::standard() {
  return IdentityInputs{[](unsigned k, unsigned j, const StirlingTable& t) {
    return powersum::coeff_via_stirling(k, j, t);
  }};
}

std::uint64_t grid_check_count(unsigned kmax, unsigned nmax) {
  std::uint64_t per_n = 0;
  for (unsigned k = 0; k <= kmax; ++k) {
    for (FormulaId f : kClosedForms) per_n += in_domain(f, k) ? 1 : 0;
  }
  return per_n * (static_cast<std::uint64_t>(nmax) + 1);
}

VerificationReport verify_grid(unsigned kmax, unsigned nmax, Execution exec) {
  return verify_grid(kmax, nmax, GridInputs::standard(), exec);
}

VerificationReport verify_grid(unsigned kmax, unsigned nmax, const GridInputs& inputs,
                               Execution exec) {
  enforce_ceiling(kmax, "verify_grid");
  const auto start = Clock::now();
  std::vector<PreparedRow> rows;
  rows.reserve(kmax + 1);
  for (unsigned k = 0; k <= kmax; ++k) rows.push_back(prepare(k, inputs));

  const std::size_t width = static_cast<std::size_t>(nmax) + 1;
  // k outer, n inner; the final sort makes the order independent of scheduling.
  VerificationReport report = fan_out(rows.size() * width, exec, [&](std::size_t i, VerificationReport& out) {
    check_cell(rows[i / width], static_cast<unsigned>(i % width), out);
  });
  report.elapsed = Clock::now() - start;
  return report;
}

std::uint64_t identity_check_count(unsigned kmax) {
  std::uint64_t total = 0;
  for (unsigned k = 0; k <= kmax; ++k) {
    total += 2 * (static_cast<std::uint64_t>(k) + 1);  // coefficient and Stirling routes
    total += (k >= 1) ? 3 : 1;                          // special values
    for (FormulaId f : kClosedForms) total += in_domain(f, k) ? 1 : 0;
    total += 4;                                         // degree, constant, leading, p(1)
    total += (k >= 1) ? 3 : 0;                          // symmetry, transform, factorization
  }
  return total;
}

VerificationReport verify_identities(unsigned kmax, Execution exec) {
  return verify_identities(kmax, IdentityInputs::standard(), exec);
}

VerificationReport verify_identities(unsigned kmax, const IdentityInputs& inputs, Execution exec) {
  enforce_ceiling(kmax, "verify_identities");
  const auto start = Clock::now();
  const auto table = shared_stirling_table(kmax);
  VerificationReport report = fan_out(static_cast<std::size_t>(kmax) + 1, exec,
                                      [&](std::size_t k, VerificationReport& out) {
                                        check_identities_at(static_cast<unsigned>(k), *table, inputs, out);
                                      });
  report.elapsed = Clock::now() - start;
  return report;
}

Polynomial interpolate_naive(unsigned k) {
  // Values at n = 0..k+1 determine the degree k+1 polynomial.
  std::vector<Integer> diffs;
  diffs.reserve(k + 2);
  for (unsigned n = 0; n <= k + 1; ++n) diffs.push_back(power_sum_naive(k, Natural(n)).value());

  Polynomial result;
  Polynomial basis(Rational(1));  // C(x, m)
  for (unsigned m = 0; m <= k + 1; ++m) {
    result += Rational(diffs[0]) * basis;
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
    basis *= Polynomial(std::vector<Rational>{Rational(-static_cast<long>(m)), Rational(1)});
    basis *= Rational(Integer(1), Integer(m + 1));
  }
  return result;
}

}  // namespace powersum
