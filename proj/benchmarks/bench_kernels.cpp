// Microbenchmarks for the exact-arithmetic kernels: series algebra, the
// Stirling triangle, and the four Fubini routes.

#include <benchmark/benchmark.h>

#include <random>

#include "probfubini/egf.hpp"
#include "probfubini/fubini.hpp"
#include "probfubini/polylog.hpp"
#include "probfubini/stirling.hpp"

using namespace probfubini;

namespace {

TruncEGF random_series(int order, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  if (c[0].is_zero()) c[0] = Rational(1);
  return TruncEGF(std::move(c));
}

void BM_EgfMul(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const TruncEGF a = random_series(order, 1);
  const TruncEGF b = random_series(order, 2);
  for (auto _ : state) benchmark::DoNotOptimize(egf_mul(a, b));
}
BENCHMARK(BM_EgfMul)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_EgfInv(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const TruncEGF a = random_series(order, 3);
  for (auto _ : state) benchmark::DoNotOptimize(egf_inv(a));
}
BENCHMARK(BM_EgfInv)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_ProbStirlingTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DistSpec dist = DistSpec::geometric(Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(prob_stirling_table(dist, n));
}
BENCHMARK(BM_ProbStirlingTable)->Arg(8)->Arg(16)->Arg(24);

void BM_FubiniFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(FubiniFamily(DistSpec::geometric(Rational(1, 2)), n));
}
BENCHMARK(BM_FubiniFamily)->Arg(8)->Arg(12)->Arg(16);

void BM_FubiniDet(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const MomentProvider moments(DistSpec::std_exponential());
  moments.get(n);  // warm the cache; measure elimination, not moments
  for (auto _ : state) benchmark::DoNotOptimize(fubini_det_at(moments, n, Rational(1)));
}
BENCHMARK(BM_FubiniDet)->Arg(8)->Arg(16)->Arg(24);

void BM_FubiniTrudi(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const MomentProvider moments(DistSpec::std_exponential());
  moments.get(n);
  for (auto _ : state) benchmark::DoNotOptimize(fubini_trudi_at(moments, n, Rational(1)));
}
BENCHMARK(BM_FubiniTrudi)->Arg(8)->Arg(16)->Arg(24);

void BM_PolylogConv(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(polylog_conv(6, k, Rational(1, 2)));
}
BENCHMARK(BM_PolylogConv)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
