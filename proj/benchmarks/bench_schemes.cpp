#include <benchmark/benchmark.h>

#include <cstdint>

#include "hawkes/hawkes.hpp"

using namespace hawkes;

namespace {

SchemeConfig exponential_config(SchemeVariant v, std::size_t n) {
  SchemeConfig cfg;
  cfg.kernel = KernelSpec::exponential(4.0, 5.0);
  cfg.baseline = Baseline::constant(10.0);
  cfg.horizon = 2.0;
  cfg.steps = n;
  cfg.variant = v;
  return cfg;
}

// 64 paths per iteration so the 8-lane batching is exercised as in real runs.
constexpr std::size_t kPaths = 64;

void run_paths(benchmark::State& state, const SchemeConfig& cfg) {
  const GridScheme scheme(cfg);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    double total = 0.0;
    scheme.simulate_range(seed++, 0, kPaths, [&](std::uint64_t, PathRecord&& rec) { total += rec.total_lambda(); });
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kPaths));
  state.SetComplexityN(static_cast<std::int64_t>(cfg.steps));
}

void BM_GenericIVi(benchmark::State& state) {
  run_paths(state, exponential_config(SchemeVariant::IVi, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GenericIVi)->RangeMultiplier(2)->Range(1 << 8, 1 << 12)->Complexity();

void BM_MarkovIVi(benchmark::State& state) {
  run_paths(state, exponential_config(SchemeVariant::MarkovIVi, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_MarkovIVi)->RangeMultiplier(2)->Range(1 << 8, 1 << 14)->Complexity(benchmark::oN);

void BM_ResolventFractional(benchmark::State& state) {
  SchemeConfig cfg;
  cfg.kernel = KernelSpec::fractional_hurst(0.1, 0.1);
  cfg.baseline = Baseline::constant(5.0);
  cfg.horizon = 30.0;
  cfg.steps = static_cast<std::size_t>(state.range(0));
  cfg.variant = SchemeVariant::ResolventIVi;
  run_paths(state, cfg);
}
BENCHMARK(BM_ResolventFractional)->Arg(80)->Arg(320)->Arg(1280);

void BM_Population(benchmark::State& state) {
  const KernelSpec k = KernelSpec::exponential(4.0, 5.0);
  const Baseline g = Baseline::constant(10.0);
  std::uint64_t path = 0;
  std::size_t events = 0;
  for (auto _ : state) {
    RngStream r(1, path++);
    events += simulate_population(k, g, 2.0, r).times.size();
  }
  state.counters["events_per_path"] =
      benchmark::Counter(static_cast<double>(events) / static_cast<double>(state.iterations()));
}
BENCHMARK(BM_Population);

void BM_Ogata(benchmark::State& state) {
  const KernelSpec k = KernelSpec::exponential(4.0, 5.0);
  const Baseline g = Baseline::constant(10.0);
  std::uint64_t path = 0;
  SamplerStats total;
  for (auto _ : state) {
    RngStream r(2, path++);
    SamplerStats st;
    benchmark::DoNotOptimize(simulate_ogata(k, g, 2.0, r, std::nullopt, &st));
    total.events += st.events;
    total.candidates += st.candidates;
  }
  const double it = static_cast<double>(state.iterations());
  state.counters["events_per_path"] = benchmark::Counter(static_cast<double>(total.events) / it);
  state.counters["candidates_per_path"] = benchmark::Counter(static_cast<double>(total.candidates) / it);
}
BENCHMARK(BM_Ogata);

void BM_InverseGaussian(benchmark::State& state) {
  RngStream r(3, 0);
  const IGParams p{2.0, 5.0};
  for (auto _ : state) benchmark::DoNotOptimize(sample_inverse_gaussian(r, p));
}
BENCHMARK(BM_InverseGaussian);

void BM_Poisson(benchmark::State& state) {
  RngStream r(4, 0);
  const double mean = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_poisson(r, mean));
}
BENCHMARK(BM_Poisson)->Arg(1)->Arg(30)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
