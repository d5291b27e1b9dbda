#pragma once

#include "qpse/grid.hpp"

namespace qpse {

// Amplitudes in the spatial-frequency representation, on the conjugate grid
// dk = 2pi/(N dx) with k centered (DC in the middle). The source spatial
// grid rides along so the transform inverts without extra bookkeeping.
struct KAmplitude {
  GridSpec kgrid;
  GridSpec xgrid;
  std::vector<cplx> amplitudes;
  double time_tag = 0.0;
};

// Conjugate k-grid of a spatial grid: dk = 2pi/(N dx), origin -(N/2) dk.
// N dx dk = 2pi holds by construction (same expression both ways).
GridSpec conjugate_grid(const GridSpec& xgrid);

// true iff kgrid was built as conjugate_grid(xgrid) (bitwise comparison)
bool conjugate_pair(const GridSpec& xgrid, const GridSpec& kgrid);

// Continuum-convention unitary Fourier pair,
//   phi(k) = (2pi)^{-d/2} integral psi(x) e^{-ik.x} d^d x,
// realized as phi_m = (dx/sqrt(2pi))^d e^{-i k_m . x0} FFT[(-1)^{sum n} psi_n].
// Discrete Parseval sum|phi|^2 dk^d = sum|psi|^2 dx^d holds to roundoff.
KAmplitude to_k_space(const WaveFunction& psi);

// exact inverse of to_k_space; GridMismatch if kgrid is not the conjugate
// of the stored spatial grid
WaveFunction from_k_space(const KAmplitude& phi);

// Born rule on the k side, cell volume dk^dim
DensityField density(const KAmplitude& phi);

namespace detail {

// in-place centered transform between conjugate grids (no normalization
// checks; building block for the public API, spinor fields and propagators)
void dft(const GridSpec& xgrid, const GridSpec& kgrid, std::vector<cplx>& a,
         bool forward);

}  // namespace detail
}  // namespace qpse
