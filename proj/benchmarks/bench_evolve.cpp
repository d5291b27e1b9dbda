#include <benchmark/benchmark.h>

#include <cmath>

#include "qpse/dynamics.hpp"
#include "qpse/states.hpp"

using namespace qpse;

namespace {

void BM_FreeEvolve(benchmark::State& state) {
  const auto psi =
      make_state(StateSpec::make_gaussian({0.0}, {1.0}, {0.0}),
                 GridSpec::centered(1, static_cast<std::size_t>(state.range(0)),
                                    60.0));
  EvolutionSpec spec;
  spec.dt = 0.01;
  spec.steps = 100;
  spec.record_every = 100;
  for (auto _ : state) {
    auto snaps = evolve(psi, spec);
    benchmark::DoNotOptimize(snaps.back().psi.amplitudes.data());
  }
  state.SetItemsProcessed(state.iterations() * spec.steps * state.range(0));
}
BENCHMARK(BM_FreeEvolve)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14)
    ->Unit(benchmark::kMillisecond);

void BM_HarmonicEvolve(benchmark::State& state) {
  const auto psi = make_state(
      StateSpec::make_gaussian({2.0}, {1.0 / std::sqrt(2.0)}, {0.0}),
      GridSpec::centered(1, static_cast<std::size_t>(state.range(0)), 60.0));
  EvolutionSpec spec;
  spec.potential = EvolutionSpec::Potential::harmonic;
  spec.omega = 1.0;
  spec.dt = 0.05;
  spec.steps = 100;
  spec.record_every = 100;
  for (auto _ : state) {
    auto snaps = evolve(psi, spec);
    benchmark::DoNotOptimize(snaps.back().psi.amplitudes.data());
  }
  state.SetItemsProcessed(state.iterations() * spec.steps * state.range(0));
}
BENCHMARK(BM_HarmonicEvolve)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14)
    ->Unit(benchmark::kMillisecond);

void BM_EntropySeries(benchmark::State& state) {
  const auto psi =
      make_state(StateSpec::make_gaussian({0.0}, {1.0}, {0.0}),
                 GridSpec::centered(1, static_cast<std::size_t>(state.range(0)),
                                    60.0));
  EvolutionSpec spec;
  spec.dt = 0.01;
  spec.steps = 50;
  spec.record_every = 5;
  const auto snaps = evolve(psi, spec);
  for (auto _ : state) {
    auto series = entropy_series(snaps);
    benchmark::DoNotOptimize(series.rows.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long>(snaps.size()) * state.range(0));
}
BENCHMARK(BM_EntropySeries)->Arg(1 << 12);

}  // namespace

BENCHMARK_MAIN();
