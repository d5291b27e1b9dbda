#include <doctest.h>

#include <cmath>

#include "qpse/entropy.hpp"
#include "qpse/states.hpp"
#include "support/oracles.hpp"

using namespace qpse;
using namespace qpse::testing;

TEST_CASE("uniform density has entropy ln of the support volume") {
  const auto g = GridSpec::centered(1, 256, 8.0);
  DensityField rho{g, std::vector<double>(256, 1.0 / 8.0), g.cell_volume()};
  CHECK(std::abs(differential_entropy(rho) - std::log(8.0)) < 1e-13);
}

TEST_CASE("differential entropy requires unit mass") {
  const auto g = GridSpec::centered(1, 256, 8.0);
  DensityField rho{g, std::vector<double>(256, 1.0), g.cell_volume()};
  CHECK_THROWS_AS(differential_entropy(rho), NotNormalized);
}

TEST_CASE("empty cells contribute zero, not NaN") {
  const auto g = GridSpec::centered(1, 256, 8.0);
  DensityField rho{g, std::vector<double>(256, 0.0), g.cell_volume()};
  for (std::size_t i = 64; i < 192; ++i) rho.values[i] = 1.0 / 4.0;
  CHECK(std::abs(differential_entropy(rho) - std::log(4.0)) < 1e-13);
}

TEST_CASE("Gaussian entropies match closed forms on both sides") {
  const auto g = GridSpec::centered(1, 2048, 40.0);
  for (double sigma : {0.5, 1.0, 2.0}) {
    const auto rep = continuous_entropy(
        make_state(StateSpec::make_gaussian({0.0}, {sigma}, {0.0}), g));
    CHECK(std::abs(rep.s_r - gaussian_entropy(sigma)) < 1e-12);
    CHECK(std::abs(rep.s_k - gaussian_entropy(0.5 / sigma)) < 1e-12);
    CHECK(std::abs(rep.bbm_margin) < 1e-12);  // exact saturation
    CHECK(rep.s_spin == 0.0);
    CHECK(rep.s_total == rep.s_r + rep.s_k);
    CHECK(std::abs(rep.norm_residual_r) < 1e-12);
    CHECK(std::abs(rep.norm_residual_k) < 1e-12);
  }
}

TEST_CASE("sigma = 1 coherent packet reproduces frozen constants") {
  const auto rep = continuous_entropy(
      make_state(StateSpec::make_gaussian({0.0}, {1.0}, {0.0}),
                 GridSpec::centered(1, 2048, 40.0)));
  CHECK(std::abs(rep.s_r - kHalfLn2PiE) < 1e-13);
  CHECK(std::abs(rep.s_k - kGaussKSide) < 1e-13);
  CHECK(std::abs(rep.s_total - kOnePlusLnPi) < 1e-13);
}

TEST_CASE("excited oscillator state approaches its analytic total") {
  // The -rho ln rho quadrature carries an O(h^3 ln h) error at density
  // nodes, so the value converges like the cube of the k-step: halving
  // dk (doubling the box at matched dx) divides the error by ~8.
  const double coarse =
      continuous_entropy(make_state(StateSpec::make_hermite({1}, 1.0),
                                    GridSpec::centered(1, 16384, 160.0)))
          .s_total;
  const double fine =
      continuous_entropy(make_state(StateSpec::make_hermite({1}, 1.0),
                                    GridSpec::centered(1, 65536, 320.0)))
          .s_total;
  CHECK(std::abs(coarse - kHermite1Total) < 5e-5);
  CHECK(std::abs(fine - kHermite1Total) < 5e-6);
  CHECK(std::abs(fine - kHermite1Total) <
        std::abs(coarse - kHermite1Total) / 4.0);
  // eighth-order Richardson step pins the analytic value tightly
  const double extrapolated = fine + (fine - coarse) / 7.0;
  CHECK(std::abs(extrapolated - kHermite1Total) < 1e-7);
}

TEST_CASE("bbm margin formula is s_r + s_k minus the dimension bound") {
  EntropyReport rep;
  rep.s_r = 3.0;
  rep.s_k = 4.0;
  CHECK(std::abs(bbm_check(rep, 2) - (7.0 - 2.0 * kOnePlusLnPi)) < 1e-15);
}

TEST_CASE("3D coherent state saturates the bound") {
  const auto rep = continuous_entropy(
      make_state(StateSpec::make_gaussian({0.0}, {1.0}, {0.0}),
                 GridSpec::centered(3, 64, 24.0)));
  CHECK(std::abs(rep.s_total - 3.0 * kOnePlusLnPi) < 1e-10);
  CHECK(std::abs(rep.bbm_margin) < 1e-10);
}

TEST_CASE("two-particle entropy requires a 2D grid") {
  CHECK_THROWS_AS(
      joint_entropy_two_particle(
          make_state(StateSpec::make_gaussian({0.0}, {1.0}, {0.0}),
                     GridSpec::centered(1, 256, 40.0))),
      Error);
}

TEST_CASE("correlated pair reproduces the bivariate closed form") {
  const auto rep = joint_entropy_two_particle(
      make_two_particle(StateSpec::make_pair_gaussian(1.0, 0.8),
                        GridSpec::centered(2, 512, 40.0)));
  CHECK(std::abs(rep.s_r - kPairR08Sr) < 1e-12);
  CHECK(std::abs(rep.s_k - kPairR08Sk) < 1e-12);
  CHECK(std::abs(rep.s_total - kPairR08Total) < 1e-12);
  CHECK(rep.bbm_margin > -kBbmSlack);
}
