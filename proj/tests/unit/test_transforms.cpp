#include <doctest.h>

#include <cmath>
#include <complex>

#include "qpse/entropy.hpp"
#include "qpse/errors.hpp"
#include "qpse/spectral.hpp"
#include "qpse/states.hpp"
#include "qpse/transforms.hpp"
#include "support/oracles.hpp"

using namespace qpse;
using namespace qpse::testing;
using Kind = TransformSpec::Kind;

namespace {

double max_pointwise_diff(const WaveFunction& a, const WaveFunction& b) {
  REQUIRE(a.amplitudes.size() == b.amplitudes.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    worst = std::max(worst, std::abs(a.amplitudes[i] - b.amplitudes[i]));
  return worst;
}

}  // namespace

TEST_CASE("whole-step shift is an exact sample rotation") {
  const auto g = GridSpec::centered(1, 512, 40.0);
  const auto psi = make_state(StateSpec::make_hermite({2}, 1.0), g);
  const long j = 13;
  const auto shifted = translate(psi, Kind::translate_x, j * g.spacing);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.n; ++i) {
    const std::size_t src = (i + g.n - static_cast<std::size_t>(j)) % g.n;
    worst = std::max(worst,
                     std::abs(shifted.amplitudes[i] - psi.amplitudes[src]));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("fractional shift reproduces the analytic displaced Gaussian") {
  const auto g = GridSpec::centered(1, 1024, 40.0);
  const auto psi =
      make_state(StateSpec::make_gaussian({0.0}, {1.0}, {0.0}), g);
  const double x0 = 0.6181;
  const auto shifted = translate(psi, Kind::translate_x, x0);
  const auto target =
      make_state(StateSpec::make_gaussian({x0}, {1.0}, {0.0}), g);
  CHECK(max_pointwise_diff(shifted, target) < 1e-12);

  const auto base = continuous_entropy(psi);
  const auto rep = continuous_entropy(shifted);
  CHECK(std::abs(rep.s_r - base.s_r) < 1e-9);
  CHECK(std::abs(rep.s_k - base.s_k) < 1e-9);
}

TEST_CASE("momentum boost multiplies by the plane-wave phase") {
  const auto g = GridSpec::centered(1, 1024, 40.0);
  const auto psi =
      make_state(StateSpec::make_gaussian({0.0}, {1.0}, {0.0}), g);
  const double k0 = 1.375;
  const auto boosted = translate(psi, Kind::translate_k, k0);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.n; ++i) {
    const cplx expect =
        psi.amplitudes[i] * std::polar(1.0, k0 * g.coord(i));
    worst = std::max(worst, std::abs(boosted.amplitudes[i] - expect));
  }
  CHECK(worst < 1e-12);

  const auto base = continuous_entropy(psi);
  const auto rep = continuous_entropy(boosted);
  CHECK(std::abs(rep.s_r - base.s_r) < 1e-9);
  CHECK(std::abs(rep.s_k - base.s_k) < 1e-9);
}

TEST_CASE("boost near the Nyquist edge is refused") {
  const auto g = GridSpec::centered(1, 256, 40.0);
  const auto psi =
      make_state(StateSpec::make_gaussian({0.0}, {1.0}, {0.0}), g);
  const double nyquist = M_PI / g.spacing;
  CHECK_THROWS_AS(translate(psi, Kind::translate_k, 0.95 * nyquist),
                  AliasedMomentum);
}

TEST_CASE("dilation shuttles entropy between the two sides") {
  const auto g = GridSpec::centered(1, 2048, 40.0);
  const auto psi = make_state(StateSpec::make_hermite({1}, 1.0), g);
  const auto base = continuous_entropy(psi);
  for (double a : {0.25, 0.5, 2.0, 4.0}) {
    const auto rep = continuous_entropy(dilate(psi, a));
    CHECK(std::abs((rep.s_r - base.s_r) - std::log(a)) < 1e-12);
    CHECK(std::abs((rep.s_k - base.s_k) + std::log(a)) < 1e-12);
    CHECK(std::abs(rep.s_total - base.s_total) < 1e-12);
  }
}

TEST_CASE("dilation edge cases: identity, inverse, bad scale") {
  const auto g = GridSpec::centered(1, 512, 40.0);
  const auto psi =
      make_state(StateSpec::make_gaussian({0.0}, {1.0}, {0.0}), g);
  CHECK(max_pointwise_diff(dilate(psi, 1.0), psi) < 1e-15);
  const auto round_trip = dilate(dilate(psi, 2.0), 0.5);
  CHECK(round_trip.grid == psi.grid);
  CHECK(max_pointwise_diff(round_trip, psi) < 1e-13);
  CHECK_THROWS_AS(dilate(psi, 0.0), Error);
  CHECK_THROWS_AS(dilate(psi, -2.0), Error);
}

TEST_CASE("parity is an involution and fixes even states") {
  const auto g = GridSpec::centered(1, 512, 40.0);
  const auto even = make_state(StateSpec::make_hermite({2}, 1.0), g);
  CHECK(max_pointwise_diff(parity(even), even) < 1e-14);

  const auto psi =
      make_state(StateSpec::make_gaussian({0.7}, {1.0}, {0.5}), g);
  CHECK(max_pointwise_diff(parity(parity(psi)), psi) == 0.0);
}

TEST_CASE("conjugation reflects the momentum density") {
  const auto g = GridSpec::centered(1, 1024, 40.0);
  const auto psi =
      make_state(StateSpec::make_gaussian({0.0}, {1.0}, {1.25}), g);
  const auto conj = conjugate(psi);

  const auto rho = density(to_k_space(psi));
  const auto rho_c = density(to_k_space(conj));
  double worst = 0.0;
  for (std::size_t i = 0; i < rho.values.size(); ++i) {
    const std::size_t j = detail::reflected_flat_index(rho.grid, i);
    worst = std::max(worst, std::abs(rho_c.values[j] - rho.values[i]));
  }
  CHECK(worst < 1e-12);

  const auto base = continuous_entropy(psi);
  const auto rep = continuous_entropy(conj);
  CHECK(std::abs(rep.s_k - base.s_k) < 1e-9);
  CHECK(std::abs(rep.s_r - base.s_r) < 1e-12);
}

TEST_CASE("x and k shifts commute at the density level") {
  const auto g = GridSpec::centered(1, 1024, 40.0);
  const auto psi =
      make_state(StateSpec::make_gaussian({0.0}, {0.8}, {0.0}), g);
  const auto xk = translate(translate(psi, Kind::translate_x, 0.37),
                            Kind::translate_k, 0.91);
  const auto kx = translate(translate(psi, Kind::translate_k, 0.91),
                            Kind::translate_x, 0.37);
  const auto rho_a = density(xk);
  const auto rho_b = density(kx);
  double worst = 0.0;
  for (std::size_t i = 0; i < rho_a.values.size(); ++i)
    worst = std::max(worst, std::abs(rho_a.values[i] - rho_b.values[i]));
  CHECK(worst < 1e-10);
}

TEST_CASE("Lorentz scalar integral is frame independent") {
  const auto g = GridSpec::centered(1, 65536, 65536.0 * 2.0 * M_PI / 24.0);
  const auto phi = to_k_space(
      make_state(StateSpec::make_gaussian({0.0}, {1.0}, {0.0}), g));

  const auto idle = lorentz_boost_report(phi, 0.0, 1.0);
  CHECK(idle.delta == 0.0);
  CHECK(idle.i_rest == idle.i_boosted);

  const auto rep = lorentz_boost_report(phi, 0.5, 1.0);
  CHECK(rep.delta < 1e-8);
  CHECK(std::abs(rep.boosted_probability - 1.0) < 1e-8);
  CHECK(lorentz_measure_check(phi, 0.5, 1.0) == rep.delta);
}

TEST_CASE("Lorentz check requires a positive mass") {
  const auto g = GridSpec::centered(1, 1024, 40.0);
  const auto phi = to_k_space(
      make_state(StateSpec::make_gaussian({0.0}, {1.0}, {0.0}), g));
  CHECK_THROWS_AS(lorentz_boost_report(phi, 0.5, 0.0), Error);
  CHECK_THROWS_AS(lorentz_boost_report(phi, 0.5, -1.0), Error);
}
