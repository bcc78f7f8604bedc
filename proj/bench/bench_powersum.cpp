#include <benchmark/benchmark.h>

#include "powersum/evaluator.hpp"
#include "powersum/verify.hpp"

using namespace powersum;

namespace {

void BM_GridSerial(benchmark::State& state) {
  const auto kmax = static_cast<unsigned>(state.range(0));
  const auto nmax = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto r = verify_grid(kmax, nmax, Execution::serial);
    benchmark::DoNotOptimize(r.checks_run);
  }
  state.counters["checks"] = static_cast<double>(grid_check_count(kmax, nmax));
}

void BM_GridParallel(benchmark::State& state) {
  const auto kmax = static_cast<unsigned>(state.range(0));
  const auto nmax = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto r = verify_grid(kmax, nmax, Execution::parallel);
    benchmark::DoNotOptimize(r.checks_run);
  }
  state.counters["checks"] = static_cast<double>(grid_check_count(kmax, nmax));
}

void BM_IdentitiesSerial(benchmark::State& state) {
  for (auto _ : state) {
    auto r = verify_identities(static_cast<unsigned>(state.range(0)), Execution::serial);
    benchmark::DoNotOptimize(r.checks_run);
  }
}

void BM_IdentitiesParallel(benchmark::State& state) {
  for (auto _ : state) {
    auto r = verify_identities(static_cast<unsigned>(state.range(0)), Execution::parallel);
    benchmark::DoNotOptimize(r.checks_run);
  }
}

// Cost of one evaluation per route at fixed k as n grows; the naive route is
// linear in n, the closed forms are not.
void BM_Route(benchmark::State& state, FormulaId f) {
  constexpr unsigned k = 12;
  const Natural n(static_cast<unsigned long>(state.range(0)));
  const auto table = shared_stirling_table(k);
  const CoefficientRow row = coeff_row(k);
  for (auto _ : state) {
    Natural v;
    switch (f) {
      case FormulaId::naive: v = power_sum_naive(k, n); break;
      case FormulaId::samsonadze: v = eval_samsonadze(k, n, row); break;
      case FormulaId::binomial: v = eval_binomial(k, n); break;
      case FormulaId::stirling: v = eval_stirling(k, n, *table); break;
      case FormulaId::companion: v = eval_companion(k, n, *table); break;
      case FormulaId::factorized: v = eval_factorized(k, n, *table); break;
    }
    benchmark::DoNotOptimize(v);
  }
}

}  // namespace

BENCHMARK(BM_GridSerial)->Args({10, 100})->Args({25, 300})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Args({10, 100})->Args({25, 300})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_IdentitiesSerial)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentitiesParallel)->Arg(30)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_CAPTURE(BM_Route, naive, FormulaId::naive)->Arg(100)->Arg(10000);
BENCHMARK_CAPTURE(BM_Route, samsonadze, FormulaId::samsonadze)->Arg(100)->Arg(10000);
BENCHMARK_CAPTURE(BM_Route, binomial, FormulaId::binomial)->Arg(100)->Arg(10000);
BENCHMARK_CAPTURE(BM_Route, stirling, FormulaId::stirling)->Arg(100)->Arg(10000);
BENCHMARK_CAPTURE(BM_Route, companion, FormulaId::companion)->Arg(100)->Arg(10000);
BENCHMARK_CAPTURE(BM_Route, factorized, FormulaId::factorized)->Arg(100)->Arg(10000);

BENCHMARK_MAIN();
