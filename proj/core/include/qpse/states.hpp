#pragma once

#include <utility>
#include <vector>

#include "qpse/grid.hpp"
#include "qpse/spinor.hpp"

namespace qpse {

// Parametric description of every test state. Gaussians are parameterized
// by the density std sigma (so sigma_x sigma_k = 1/2 is the coherent case);
// hermite uses the oscillator length a = sigma sqrt(2) so that n = 0
// reproduces the sigma-Gaussian. Spinor packets live at m = 1 (natural
// units fix the mass).
struct StateSpec {
  enum class Kind {
    gaussian,
    hermite,
    superposition,
    two_particle_gaussian,
    spinor_packet
  };
  enum class Branch { positive, negative };

  Kind kind = Kind::gaussian;

  // gaussian: per-axis (size dim, or size 1 broadcast to all axes)
  std::vector<double> center{0.0};
  std::vector<double> sigma{1.0};
  std::vector<double> k0{0.0};

  // hermite: per-axis index (size dim or 1); width shared via sigma[0]
  std::vector<int> hermite_index{0};

  // superposition: coefficients renormalized after synthesis
  std::vector<std::pair<cplx, StateSpec>> terms;

  // two_particle_gaussian: x1-x2 correlation, |r| < 1
  double pair_sigma = 1.0;
  double pair_r = 0.0;

  // spinor_packet (1D): envelope center/sigma/k0 from the fields above
  Branch branch = Branch::positive;
  cplx weight_up{1.0, 0.0};
  cplx weight_down{0.0, 0.0};

  static StateSpec make_gaussian(std::vector<double> center,
                                 std::vector<double> sigma,
                                 std::vector<double> k0);
  static StateSpec make_hermite(std::vector<int> index, double sigma);
  static StateSpec make_superposition(
      std::vector<std::pair<cplx, StateSpec>> terms);
  static StateSpec make_pair_gaussian(double sigma, double r);
  static StateSpec make_spinor(double center, double sigma, double k0,
                               Branch branch, cplx w_up, cplx w_down);
};

// Normalized state on the grid. Throws GridTooSmall when the boundary layer
// carries more than 1e-12 probability (clipped tails), Error on bad params.
WaveFunction make_state(const StateSpec& spec, const GridSpec& grid);

// psi(x1,x2) ~ exp(-[x1^2 + x2^2 - 2 r x1 x2] / (4 sigma^2 (1 - r^2))) on a
// 2D grid; r = 0 factorizes into the product state. GridTooSmall when the
// narrow principal width sigma sqrt(1-|r|) is unresolved or tails clip.
WaveFunction make_two_particle(const StateSpec& spec, const GridSpec& grid2d);

// Free Dirac packet u(k0) g(x) e^{i k0 x} in the standard representation,
// m = 1: positive branch u = (chi, k0 sigma_z/(E+1) chi), negative branch
// the mirrored structure; chi from the spin weights. AliasedMomentum when
// |k0| >= half the Nyquist frequency.
SpinorField make_spinor_packet(const StateSpec& spec, const GridSpec& grid);

}  // namespace qpse
