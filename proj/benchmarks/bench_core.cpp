#include <benchmark/benchmark.h>

#include "pnc/netmap.hpp"
#include "pnc/scheme.hpp"
#include "pnc/simulation.hpp"
#include "pnc/special_functions.hpp"

using namespace pnc;

static void BM_SelectMap(benchmark::State& state) {
  const auto c = make_psk(4);
  const auto lib = build_library(c, enumerate_singular_states(c));
  double phase = 0.0;
  for (auto _ : state) {
    phase += 0.01;
    benchmark::DoNotOptimize(select_map(lib, std::polar(0.9, phase)));
  }
}
BENCHMARK(BM_SelectMap);

static void BM_BuildRemovalMap(benchmark::State& state) {
  const auto c = make_psk(4);
  const auto states = enumerate_singular_states(c);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_removal_map(c, states[i++ % states.size()]));
}
BENCHMARK(BM_BuildRemovalMap);

static void BM_MarcumQ1(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(marcum_q1(a, 0.8 * a + 1.0));
}
BENCHMARK(BM_MarcumQ1)->Arg(1)->Arg(10)->Arg(100);

// End-to-end trials per second for one scheme at 30 dB.
static void BM_Trials(benchmark::State& state) {
  const auto c = make_psk(4);
  const auto scheme = state.range(0) == 0 ? Scheme::FixedModulo : Scheme::AdaptiveAll;
  const auto policy = make_policy(scheme, c);
  SimulationConfig cfg;
  cfg.scheme = scheme;
  cfg.snr_db = {30.0};
  cfg.max_trials = 1 << 16;
  cfg.target_errors = 1u << 30;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_ser(cfg, policy));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * (1 << 16));
}
BENCHMARK(BM_Trials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
