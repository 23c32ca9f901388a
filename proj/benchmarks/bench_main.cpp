#include <benchmark/benchmark.h>

#include "ramsum/asymptotics.hpp"
#include "ramsum/even_functions.hpp"
#include "ramsum/ramanujan.hpp"
#include "ramsum/sums_products.hpp"

using namespace ramsum;

namespace {

void BM_RamanujanSum(benchmark::State& state) {
  const Int n = state.range(0);
  for (auto _ : state)
    for (Int k = 0; k < 64; ++k) benchmark::DoNotOptimize(ramanujan_sum(n, k));
}
BENCHMARK(BM_RamanujanSum)->Arg(360)->Arg(720720)->Arg(999983);

void BM_RamanujanByDivisors(benchmark::State& state) {
  const Int n = state.range(0);
  for (auto _ : state)
    for (Int k = 0; k < 64; ++k) benchmark::DoNotOptimize(ramanujan_sum_by_divisors(n, k));
}
BENCHMARK(BM_RamanujanByDivisors)->Arg(360)->Arg(720720)->Arg(999983);

// E_G for G = (x^2 - 1, x), moduli (m, m + 2).
void BM_EG(benchmark::State& state, SumStrategy strategy) {
  const PolySystem g{parse_polynomial("x^2-1"), parse_polynomial("x")};
  const ModuliTuple m{state.range(0), state.range(0) + 2};
  for (auto _ : state) benchmark::DoNotOptimize(e_g(g, m, strategy));
}
BENCHMARK_CAPTURE(BM_EG, fast, SumStrategy::fast)->Arg(60)->Arg(600)->Arg(2000);
BENCHMARK_CAPTURE(BM_EG, direct, SumStrategy::direct)->Arg(60)->Arg(600);

void BM_RFunc(benchmark::State& state, SumStrategy strategy) {
  const Int m = state.range(0);
  const ModuliTuple t{m, 2 * m, 3 * m};
  for (auto _ : state) benchmark::DoNotOptimize(r_func(t, strategy));
}
BENCHMARK_CAPTURE(BM_RFunc, fast, SumStrategy::fast)->Arg(12)->Arg(60);
BENCHMARK_CAPTURE(BM_RFunc, direct, SumStrategy::direct)->Arg(12)->Arg(60);

void BM_GrSieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(g_r_sieve(3, state.range(0)));
}
BENCHMARK(BM_GrSieve)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Ta(benchmark::State& state, TStrategy strategy) {
  const ModuliTuple m{state.range(0), state.range(0) / 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(t_a(m, 5, strategy));
}
BENCHMARK_CAPTURE(BM_Ta, closed, TStrategy::closed)->Arg(12)->Arg(30);
BENCHMARK_CAPTURE(BM_Ta, spectral, TStrategy::spectral)->Arg(12)->Arg(30);
BENCHMARK_CAPTURE(BM_Ta, direct, TStrategy::direct)->Arg(12)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
