#pragma once

#include <Eigen/Dense>
#include <array>

#include "qpse/entropy.hpp"
#include "qpse/grid.hpp"

namespace qpse {

// Dirac matrices, standard representation, metric (+,-,-,-):
// gamma0 = diag(I, -I), gamma^i = [[0, sigma_i], [-sigma_i, 0]], and the
// discrete-symmetry factors C = i g2 g0, P = g0, T = i g1 g3.
struct GammaSet {
  Eigen::Matrix4cd gamma0, gamma1, gamma2, gamma3;
  Eigen::Matrix4cd C, P, T;
  static const GammaSet& standard();
};

// 4-component field on a 1D grid, total density sum_a |psi_a|^2 integrating
// to 1. Any normalized field qualifies for the density identities: the CPT
// algebra is pointwise and needs no equation of motion.
struct SpinorField {
  GridSpec grid;
  std::array<std::vector<cplx>, 4> components;
  double time_tag = 0.0;
};

double spinor_mass(const SpinorField& f);
SpinorField normalize(SpinorField f);

// rho_r(x) = sum_a |psi_a(x)|^2
DensityField spinor_density(const SpinorField& f);
// rho_k(k) = sum_a |phi_a(k)|^2, componentwise Fourier transform
DensityField spinor_k_density(const SpinorField& f);

// charge conjugation: psi -> C (gamma0)^T psi*, pointwise
SpinorField apply_c(const SpinorField& f);
// parity: spatial reflection, then gamma0
SpinorField apply_p(const SpinorField& f);
// time reversal: conjugation, then T; time tag negated
SpinorField apply_t(const SpinorField& f);
// composition of all three (T after P after C)
SpinorField apply_cpt(const SpinorField& f);

// S_r + S_k of the summed component densities, with s_spin = ln 2pi (s = 1/2)
EntropyReport spinor_entropy(const SpinorField& f);

}  // namespace qpse
