#include <benchmark/benchmark.h>

#include "eoa/eoa.hpp"

namespace {

using namespace eoa;

const FieldTable& gf4() {
  static const auto f = FieldTable::create(2, 2);
  return f;
}

// Dual of the GF(4) Hamming code with redundancy m: [(4^m - 1)/3, m]_4.
LinearCode dual_hamming(int m) { return dual_code(hamming_code(gf4(), m)); }

void BM_VerifyStrength(benchmark::State& state) {
  const auto entries = codewords(dual_hamming(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_strength(entries, 4, 2));
  state.SetLabel("N=" + std::to_string(entries.cols()) + " n=" + std::to_string(entries.rows()));
}
BENCHMARK(BM_VerifyStrength)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_EulerCycle(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(euler_cycle_full(gf4(), k));
}
BENCHMARK(BM_EulerCycle)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_VerifyEulerian(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto code = dual_hamming(m);
  const auto array =
      eulerian_oa_from_code(code, euler_cycle_full(gf4(), code.dimension()), 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_eulerian(array.entries(), gf4(), 2));
  state.SetLabel("N=" + std::to_string(array.entries().cols()));
}
BENCHMARK(BM_VerifyEulerian)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EulerianAverage(benchmark::State& state) {
  const auto code = dual_hamming(2);
  const auto array = eulerian_oa_from_code(code, euler_cycle_full(gf4(), 2), 2);
  const auto h = random_drift(5, 2, 2, static_cast<int>(state.range(0)), 1);
  const auto method = state.range(1) == 0 ? AveragingMethod::exact() : AveragingMethod::quadrature(24);
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_average(array, h, 0.1, method));
  state.SetLabel(method.name());
}
BENCHMARK(BM_EulerianAverage)
    ->Args({1, 0})
    ->Args({2, 0})
    ->Args({2, 1})
    ->Unit(benchmark::kMillisecond);

void BM_BangBangAverage(benchmark::State& state) {
  const auto code = dual_hamming(2);
  const auto oa = oa_from_code(code, dual_distance(code));
  const auto h = random_drift(5, 2, 2, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(bangbang_average(oa, gf4(), h));
}
BENCHMARK(BM_BangBangAverage)->Unit(benchmark::kMillisecond);

void BM_ExactEvolution(benchmark::State& state) {
  const auto array =
      eulerian_oa_from_code(identity_code(gf4(), 2), euler_cycle_full(gf4(), 2), 2);
  const auto h = random_drift(2, 2, 2, 2, 11);
  const auto schedule = euler_schedule(array, 0.002);
  for (auto _ : state) benchmark::DoNotOptimize(exact_evolution(h, schedule));
}
BENCHMARK(BM_ExactEvolution)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
