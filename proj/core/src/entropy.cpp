#include "qpse/entropy.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpse/parallel.hpp"

namespace qpse {

double differential_entropy(const DensityField& rho) {
  const double mass = integrate(rho.values, rho.grid);
  if (std::abs(mass - 1.0) > 1e-8)
    throw NotNormalized("differential_entropy: density mass " +
                        std::to_string(mass) + " is not 1 within 1e-8");
  const double* v = rho.values.data();
  const double s = blocked_sum(rho.values.size(), [v](std::size_t i) {
    const double x = v[i];
    return x > 1e-300 ? -x * std::log(x) : 0.0;  // x ln x -> 0
  });
  return s * rho.cell_volume;
}

EntropyReport continuous_entropy(const WaveFunction& psi) {
  EntropyReport rep;
  {
    const DensityField rho_r = density(psi);
    rep.norm_residual_r = std::abs(integrate(rho_r.values, rho_r.grid) - 1.0);
    rep.s_r = differential_entropy(rho_r);
  }
  {
    const KAmplitude phi = to_k_space(psi);
    const DensityField rho_k = density(phi);
    rep.norm_residual_k = std::abs(integrate(rho_k.values, rho_k.grid) - 1.0);
    rep.s_k = differential_entropy(rho_k);
  }
  rep.s_spin = 0.0;
  rep.s_total = rep.s_r + rep.s_k + rep.s_spin;
  rep.bbm_margin = bbm_check(rep, psi.grid.dim);
  return rep;
}

EntropyReport joint_entropy_two_particle(const WaveFunction& psi2) {
  if (psi2.grid.dim != 2)
    throw Error("joint_entropy_two_particle: expects a 2D (x1, x2) grid, got dim " +
                std::to_string(psi2.grid.dim));
  return continuous_entropy(psi2);  // same quadrature, d = 2 bound
}

double bbm_check(const EntropyReport& report, int dim) {
  return report.s_r + report.s_k -
         static_cast<double>(dim) * (1.0 + std::log(std::numbers::pi));
}

}  // namespace qpse
