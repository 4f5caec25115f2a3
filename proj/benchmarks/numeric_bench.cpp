#include <benchmark/benchmark.h>

#include "zetap/numeric.hpp"

namespace {

// range(0) is -log10 of the tolerance.
double tolerance(const benchmark::State& state) {
  double tol = 1.0;
  for (int i = 0; i < state.range(0); ++i) tol /= 10;
  return tol;
}

void BM_SumZeta2(benchmark::State& state) {
  const double tol = tolerance(state);
  for (auto _ : state) benchmark::DoNotOptimize(zetap::sum_series(zetap::FunctionId::kZeta, 2.0, tol));
}
BENCHMARK(BM_SumZeta2)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_SumPsi1Direct(benchmark::State& state) {
  const double tol = tolerance(state);
  for (auto _ : state) benchmark::DoNotOptimize(zetap::sum_series(zetap::FunctionId::kPsi, 1.0, tol));
}
BENCHMARK(BM_SumPsi1Direct)->DenseRange(3, 6, 3)->Unit(benchmark::kMillisecond);

void BM_EulerPsi1(benchmark::State& state) {
  const double tol = tolerance(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zetap::euler_accelerated(zetap::FunctionId::kPsi, 1.0, tol));
  }
}
BENCHMARK(BM_EulerPsi1)->DenseRange(6, 30, 12)->Unit(benchmark::kMicrosecond);

void BM_CrosscheckAll(benchmark::State& state) {
  const auto pairs = zetap::resolved_pairs(12);
  for (auto _ : state) {
    for (const auto& [f, n] : pairs) benchmark::DoNotOptimize(zetap::crosscheck(f, n, 1e-9));
  }
}
BENCHMARK(BM_CrosscheckAll)->Unit(benchmark::kMillisecond);

void BM_Ln2PartialSums(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    zetap::for_each_ln2_partial_sum(n, [](std::uint64_t, const zetap::Ln2PartialSum& s) {
      benchmark::DoNotOptimize(s);
    });
  }
}
BENCHMARK(BM_Ln2PartialSums)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
