#include <benchmark/benchmark.h>

#include "eseq/epsilon.hpp"
#include "eseq/gauge.hpp"
#include "eseq/primes.hpp"
#include "eseq/series.hpp"

namespace {

using namespace eseq;

void BM_EpsilonSeries(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_series(n));
}
BENCHMARK(BM_EpsilonSeries)->Arg(50)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_EpsilonRecursion(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_recursion(n));
}
BENCHMARK(BM_EpsilonRecursion)->Arg(50)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_CompositionSumPartitions(benchmark::State& state) {
  const auto l = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_composition_sum(l, CompositionStrategy::Partitions));
}
BENCHMARK(BM_CompositionSumPartitions)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_CompositionSumNaive(benchmark::State& state) {
  const auto l = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_composition_sum(l, CompositionStrategy::NaiveCompositions));
}
BENCHMARK(BM_CompositionSumNaive)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ComposeFWithH(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PowerSeries f = series_f(n);
  const PowerSeries h = series_h(n);
  for (auto _ : state) benchmark::DoNotOptimize(ps_compose(f, h));
}
BENCHMARK(BM_ComposeFWithH)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_FactorEpsilon(benchmark::State& state) {
  const Rational q = epsilon(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(factor_rational(q));
}
BENCHMARK(BM_FactorEpsilon)->Arg(10)->Arg(19)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_AnTypeBound(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(an_type_lower_bound(n));
}
BENCHMARK(BM_AnTypeBound)->Arg(100)->Arg(500)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
