#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qpse/errors.hpp"

namespace qpse {

using cplx = std::complex<double>;

// Uniform periodic grid, cubic across axes: N samples per axis at
// x_i = origin + i*dx. Natural units hbar = m = 1 throughout, so momentum
// and spatial frequency coincide and entropies are dimensionless.
struct GridSpec {
  int dim;          // 1, 2 or 3
  std::size_t n;    // samples per axis, power of two, >= 8
  double origin;    // leftmost sample coordinate (same every axis)
  double spacing;   // dx > 0

  GridSpec(int dim_, std::size_t n_, double origin_, double spacing_);

  // Box of length `extent` centered on zero: dx = extent/N, origin = -(N/2)dx.
  static GridSpec centered(int dim_, std::size_t n_, double extent_);

  std::size_t size() const;     // N^dim
  double cell_volume() const;   // dx^dim
  double extent() const { return static_cast<double>(n) * spacing; }
  double coord(std::size_t i) const {
    return origin + static_cast<double>(i) * spacing;
  }

  bool operator==(const GridSpec&) const = default;
};

// psi sampled on grid; row-major, axis 0 slowest.
struct WaveFunction {
  GridSpec grid;
  std::vector<cplx> amplitudes;
  double time_tag = 0.0;
};

// nonnegative density samples; integrates to 1 for normalized sources
struct DensityField {
  GridSpec grid;
  std::vector<double> values;
  double cell_volume = 1.0;
};

// Riemann sum f * dx^dim. Throws NonFinite on NaN/inf entries.
double integrate(const std::vector<double>& f, const GridSpec& grid);

// total probability mass sum |psi|^2 dx^dim
double norm_mass(const WaveFunction& psi);

// Scales amplitudes by a positive real so the mass is 1 (phases untouched).
// Throws ZeroNorm when the input mass is numerically zero (< 1e-250).
WaveFunction normalize(WaveFunction psi);

// Born rule rho = |psi|^2. Requires mass within 1e-8 of 1 (NotNormalized).
DensityField density(const WaveFunction& psi);

// Probability mass in the outermost cell layer; proxy for periodic
// wraparound contamination. States are expected to hold < 1e-12 here.
double edge_mass(const WaveFunction& psi);

namespace detail {

// flat index of the per-axis reflection i -> (N - i) mod N, the parity map
// that fixes the centered-grid origin sample
std::size_t reflected_flat_index(const GridSpec& g, std::size_t flat);

// sum of rho * dV over cells touching the box boundary (any axis index
// 0 or N-1)
double boundary_mass(const GridSpec& g, const std::vector<double>& rho);

}  // namespace detail
}  // namespace qpse
