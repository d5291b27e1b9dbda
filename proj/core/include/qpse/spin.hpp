#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qpse {

// Spin sector description. theta_alpha parameterizes the entangled pair
// cos(theta)|+->  - sin(theta)|-+>; only meaningful in entangled_pair mode.
struct SpinSpec {
  enum class Mode { single, entangled_pair };
  double s = 0.0;  // 0 or 1/2
  Mode mode = Mode::single;
  double theta_alpha = 0.0;
};

// 2s ln 2pi for s in {0, 1/2}; UnsupportedSpin otherwise (massive spin-1
// has extra reachability structure and no settled value).
double spin_entropy_single(double s);

// Entangled two-fermion spin entropy
//   2 ln 2pi - (cos^2 t ln cos^2 t + sin^2 t ln sin^2 t),
// range [2 ln 2pi, 2 ln 2pi + ln 2], symmetric about pi/4.
double spin_entropy_entangled_pair(double theta_alpha);

// Entropy of the azimuthal density rho(phi) = |a_- + a_+ e^{i phi}|^2 / 2pi
// of a spin-1/2 state with amplitudes alphas = (a_-, a_+), midpoint rule on
// phi_cells over [0, 2pi). Uniform (eigenstate) gives the extremal value
// ln 2pi; any genuine superposition modulates rho and lands strictly below.
double azimuthal_density_entropy(const std::vector<std::complex<double>>& alphas,
                                 std::size_t phi_cells = 4096);

// Entropy of the other particle's state after measuring one member of an
// entangled pair: the uniform azimuthal value ln 2pi (derived constant;
// no apparatus is modeled).
double collapse_remainder();

}  // namespace qpse
