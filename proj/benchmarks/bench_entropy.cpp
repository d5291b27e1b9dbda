#include <benchmark/benchmark.h>

#include "qpse/entropy.hpp"
#include "qpse/states.hpp"

using namespace qpse;

namespace {

void BM_ContinuousEntropy1D(benchmark::State& state) {
  const auto psi =
      make_state(StateSpec::make_hermite({2}, 1.0),
                 GridSpec::centered(1, static_cast<std::size_t>(state.range(0)),
                                    40.0));
  for (auto _ : state) {
    auto rep = continuous_entropy(psi);
    benchmark::DoNotOptimize(rep.s_total);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ContinuousEntropy1D)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

void BM_ContinuousEntropy3D(benchmark::State& state) {
  const auto psi = make_state(
      StateSpec::make_gaussian({0.0}, {1.0}, {0.0}),
      GridSpec::centered(3, static_cast<std::size_t>(state.range(0)), 40.0));
  for (auto _ : state) {
    auto rep = continuous_entropy(psi);
    benchmark::DoNotOptimize(rep.s_total);
  }
  const auto n = state.range(0);
  state.SetItemsProcessed(state.iterations() * n * n * n);
}
BENCHMARK(BM_ContinuousEntropy3D)->Arg(1 << 5)->Arg(1 << 6)->Arg(1 << 7)
    ->Unit(benchmark::kMillisecond);

void BM_JointEntropyPair(benchmark::State& state) {
  const auto psi = make_two_particle(
      StateSpec::make_pair_gaussian(1.0, 0.8),
      GridSpec::centered(2, static_cast<std::size_t>(state.range(0)), 40.0));
  for (auto _ : state) {
    auto rep = joint_entropy_two_particle(psi);
    benchmark::DoNotOptimize(rep.s_total);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) *
                          state.range(0));
}
BENCHMARK(BM_JointEntropyPair)->Arg(1 << 8)->Arg(1 << 9);

}  // namespace

BENCHMARK_MAIN();
