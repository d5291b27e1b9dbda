#include <benchmark/benchmark.h>

#include "qpse/spectral.hpp"
#include "qpse/states.hpp"

using namespace qpse;

namespace {

WaveFunction packet(int dim, std::size_t n) {
  return make_state(StateSpec::make_gaussian({0.0}, {1.0}, {0.5}),
                    GridSpec::centered(dim, n, 40.0));
}

void BM_ToKSpace1D(benchmark::State& state) {
  const auto psi = packet(1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto phi = to_k_space(psi);
    benchmark::DoNotOptimize(phi.amplitudes.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ToKSpace1D)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

void BM_ToKSpace2D(benchmark::State& state) {
  const auto psi = packet(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto phi = to_k_space(psi);
    benchmark::DoNotOptimize(phi.amplitudes.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) *
                          state.range(0));
}
BENCHMARK(BM_ToKSpace2D)->Arg(1 << 7)->Arg(1 << 9);

void BM_RoundTrip1D(benchmark::State& state) {
  const auto psi = packet(1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto back = from_k_space(to_k_space(psi));
    benchmark::DoNotOptimize(back.amplitudes.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RoundTrip1D)->Arg(1 << 14);

}  // namespace

BENCHMARK_MAIN();
