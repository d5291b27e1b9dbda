#pragma once

#include <vector>

#include "qpse/entropy.hpp"
#include "qpse/grid.hpp"

namespace qpse {

// Strang-split propagator setup. Unitary per step up to roundoff, so any
// norm drift flags a bug rather than method error.
struct EvolutionSpec {
  enum class Potential { free, harmonic };
  Potential potential = Potential::free;
  double omega = 1.0;      // harmonic frequency (V = omega^2 x^2 / 2)
  double dt = 0.01;
  long steps = 100;
  long record_every = 10;  // snapshot cadence; t = 0 is always recorded
};

struct Snapshot {
  double t = 0.0;
  WaveFunction psi;
};

// Half-kick / drift / half-kick evolution of a normalized state. Aborts
// with EdgeMassExceeded once periodic wraparound mass passes 1e-8.
// Harmonic runs require dt <= 0.1/omega.
std::vector<Snapshot> evolve(const WaveFunction& psi, const EvolutionSpec& spec);

struct SeriesRow {
  double t = 0.0;
  double s_r = 0.0;
  double s_k = 0.0;
  double s_total = 0.0;
  double bbm_margin = 0.0;
  double norm_residual = 0.0;
};

// One entropy row per snapshot plus monotonicity statistics for the
// entropy-law conjecture (reported, never asserted).
struct EntropySeries {
  std::vector<SeriesRow> rows;
  long decreasing_steps = 0;   // recorded steps where s_total dropped
  double max_decrease = 0.0;   // largest single-step drop (>= 0)
};

EntropySeries entropy_series(const std::vector<Snapshot>& snapshots);

}  // namespace qpse
