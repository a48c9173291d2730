// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS to vary threads.

#include <benchmark/benchmark.h>

#include <map>

#include "qwalk/dynamics.hpp"
#include "qwalk/revival.hpp"
#include "qwalk/spectral.hpp"

namespace {

using namespace qwalk;

// Grover walk from the origin after `t` steps: roughly 2 t^2 occupied sites.
const PositionState& spread_state(std::size_t t) {
  static std::map<std::size_t, PositionState> cache;
  auto it = cache.find(t);
  if (it == cache.end())
    it = cache.emplace(t, evolve(origin_symmetric_state(), builtin_coin("grover"), t)).first;
  return it->second;
}

void BM_StepReference(benchmark::State& state) {
  const auto& s = spread_state(static_cast<std::size_t>(state.range(0)));
  const auto coin = builtin_coin("grover");
  for (auto _ : state) benchmark::DoNotOptimize(reference::step(s, coin));
  state.counters["sites"] = static_cast<double>(s.size());
}

void BM_StepSerial(benchmark::State& state) {
  const auto& s = spread_state(static_cast<std::size_t>(state.range(0)));
  const auto coin = builtin_coin("grover");
  for (auto _ : state) benchmark::DoNotOptimize(step(s, coin, Execution::serial));
  state.counters["sites"] = static_cast<double>(s.size());
}

void BM_StepParallel(benchmark::State& state) {
  const auto& s = spread_state(static_cast<std::size_t>(state.range(0)));
  const auto coin = builtin_coin("grover");
  for (auto _ : state) benchmark::DoNotOptimize(step(s, coin, Execution::parallel));
  state.counters["sites"] = static_cast<double>(s.size());
}

template <Execution Exec>
void BM_ConstantScan(benchmark::State& state) {
  const auto coin = builtin_coin("grover");
  const auto grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(detect_constant_eigenvalues(coin, grid, 1e-8, Exec));
}

template <Execution Exec>
void BM_CharPoly(benchmark::State& state) {
  const auto coin = random_unitary_coin(1);
  const auto grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_profile(coin, grid, Exec));
}

template <Execution Exec>
void BM_EvolveMomentum(benchmark::State& state) {
  const auto coin = builtin_coin("grover");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evolve_momentum(revival_state(), coin, {50, n}, Exec));
}

}  // namespace

BENCHMARK(BM_StepReference)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StepSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StepParallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConstantScan<Execution::serial>)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConstantScan<Execution::parallel>)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharPoly<Execution::serial>)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharPoly<Execution::parallel>)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvolveMomentum<Execution::serial>)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvolveMomentum<Execution::parallel>)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
