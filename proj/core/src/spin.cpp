#include "qpse/spin.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpse/errors.hpp"

namespace qpse {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double xlnx(double x) { return x > 1e-300 ? x * std::log(x) : 0.0; }

}  // namespace

double spin_entropy_single(double s) {
  if (s == 0.0) return 0.0;
  if (s == 0.5) return std::log(kTwoPi);
  throw UnsupportedSpin("spin_entropy_single: s = " + std::to_string(s) +
                        " (only 0 and 1/2 are supported)");
}

double spin_entropy_entangled_pair(double theta_alpha) {
  if (!std::isfinite(theta_alpha))
    throw Error("spin_entropy_entangled_pair: theta must be finite");
  const double c = std::cos(theta_alpha);
  const double sn = std::sin(theta_alpha);
  return 2.0 * std::log(kTwoPi) - (xlnx(c * c) + xlnx(sn * sn));
}

double azimuthal_density_entropy(const std::vector<std::complex<double>>& alphas,
                                 std::size_t phi_cells) {
  if (alphas.size() != 2)
    throw UnsupportedSpin(
        "azimuthal_density_entropy: expects the two m = -1/2, +1/2 amplitudes");
  const double w = std::norm(alphas[0]) + std::norm(alphas[1]);
  if (std::abs(w - 1.0) > 1e-10)
    throw NotNormalized("azimuthal_density_entropy: sum |alpha|^2 = " +
                        std::to_string(w) + " is not 1 within 1e-10");
  const double dphi = kTwoPi / static_cast<double>(phi_cells);
  double s = 0.0;
  for (std::size_t j = 0; j < phi_cells; ++j) {
    const double phi = (static_cast<double>(j) + 0.5) * dphi;
    const std::complex<double> amp =
        alphas[0] + alphas[1] * std::complex<double>(std::cos(phi), std::sin(phi));
    s -= xlnx(std::norm(amp) / kTwoPi);
  }
  return s * dphi;
}

double collapse_remainder() { return std::log(kTwoPi); }

}  // namespace qpse
