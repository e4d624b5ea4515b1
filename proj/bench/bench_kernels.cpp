#include <benchmark/benchmark.h>

#include <numbers>

#include "trigzeros/coeff_models.hpp"
#include "trigzeros/constants.hpp"
#include "trigzeros/grid_eval.hpp"
#include "trigzeros/kac_rice.hpp"
#include "trigzeros/quadrature.hpp"

using namespace trigzeros;

namespace {

PolySample bench_sample(int n) {
  return sample_coefficients(CoefficientModel::iid(PolyKind::Trig), n, 12345);
}

void BM_GridSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = bench_sample(n);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_grid_serial(s, 32 * n));
}

void BM_GridParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = bench_sample(n);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_grid_parallel(s, 32 * n));
}

void BM_GridFft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = bench_sample(n);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_grid_fft(s, 32 * n));
}

void kac_rice_bench(benchmark::State& state, Execution exec) {
  const int n = static_cast<int>(state.range(0));
  QuadConfig q;
  q.execution = exec;
  const auto model = CoefficientModel::periodic(PolyKind::Trig, 2);
  for (auto _ : state) benchmark::DoNotOptimize(expected_zeros_quadrature(model, n, q));
}

void BM_KacRiceSerial(benchmark::State& state) { kac_rice_bench(state, Execution::Serial); }
void BM_KacRiceParallel(benchmark::State& state) { kac_rice_bench(state, Execution::Parallel); }

void constant_bench(benchmark::State& state, Execution exec) {
  ConstantGrid g;
  g.panels_per_axis = 32;
  g.execution = exec;
  for (auto _ : state) benchmark::DoNotOptimize(compute_C(3, 1, g));
}

void BM_ConstantSerial(benchmark::State& state) { constant_bench(state, Execution::Serial); }
void BM_ConstantParallel(benchmark::State& state) { constant_bench(state, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_GridSerial)->Arg(100)->Arg(400)->Arg(1600)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GridParallel)->Arg(100)->Arg(400)->Arg(1600)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GridFft)->Arg(100)->Arg(400)->Arg(1600)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_KacRiceSerial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KacRiceParallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConstantSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConstantParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
