#pragma once

#include "qpse/grid.hpp"
#include "qpse/spectral.hpp"

namespace qpse {

// Differential entropies in nats. s_total = s_r + s_k + s_spin as one sum.
// bbm_margin = s_r + s_k - d(1 + ln pi), the entropic-uncertainty slack;
// >= -1e-6 for any normalized state resolved on its grid.
struct EntropyReport {
  double s_r = 0.0;
  double s_k = 0.0;
  double s_spin = 0.0;
  double s_total = 0.0;
  double norm_residual_r = 0.0;
  double norm_residual_k = 0.0;
  double bbm_margin = 0.0;
};

inline constexpr double kBbmSlack = 1e-6;  // quadrature allowance for the bound

// -sum rho ln rho * dV with 0 ln 0 = 0 (cells below 1e-300 contribute 0).
// Requires the density to integrate to 1 within 1e-8 (NotNormalized).
double differential_entropy(const DensityField& rho);

// S_r + S_k of a normalized state; s_spin = 0 here (spin handled separately)
EntropyReport continuous_entropy(const WaveFunction& psi);

// Two particles on one axis each: psi2 on a 2D (x1, x2) grid, d = 2 bound
EntropyReport joint_entropy_two_particle(const WaveFunction& psi2);

// s_r + s_k - dim (1 + ln pi); callers treat >= -1e-6 as satisfying the bound
double bbm_check(const EntropyReport& report, int dim);

}  // namespace qpse
