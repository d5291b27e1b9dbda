#pragma once

#include "qpse/grid.hpp"
#include "qpse/spectral.hpp"

namespace qpse {

// One transformation request. amount carries x0 (translate_x), k0
// (translate_k), the scale a > 0 (dilate) or the rapidity eta
// (lorentz_boost_k); mass applies to the Lorentz check only.
struct TransformSpec {
  enum class Kind {
    translate_x,
    translate_k,
    dilate,
    parity,
    conjugate,
    lorentz_boost_k
  };
  Kind kind = Kind::translate_x;
  double amount = 0.0;
  double mass = 1.0;
};

// translate_x: psi(x) -> psi(x - x0). Whole-grid-step shifts are exact
// array rotations; fractional shifts go through the k-space phase
// e^{-i k x0} (band-limited method; needs edge-decayed states).
// translate_k: psi -> e^{i k0 x} psi, a momentum boost. AliasedMomentum
// when the boosted k-density puts > 1e-10 mass within 10% of the Nyquist
// edge. Shifts along every axis by the same amount.
WaveFunction translate(const WaveFunction& psi, TransformSpec::Kind kind,
                       double amount);

// exact dilation x -> a x as a grid relabeling: dx' = a dx, amplitudes
// scaled by a^{-dim/2}; S_r gains dim ln a, S_k loses it, total invariant
WaveFunction dilate(const WaveFunction& psi, double a);

// r -> -r via the centering-respecting index reflection
WaveFunction parity(const WaveFunction& psi);

// psi -> psi* (time-reversal kernel for scalar states)
WaveFunction conjugate(const WaveFunction& psi);

// Lorentz momentum-measure check for a 1D k-amplitude at mass m > 0.
// The scalar density omega_k |phi(k)|^2 is integrated against the exact
// invariant cell measure asinh(k/m)|_cell (= integral dk/omega over the
// cell) in the rest frame and in the boosted frame, where
// k' = k cosh eta - omega sinh eta, omega' is recomputed from the mass
// shell, and phi'(k') = sqrt(omega/omega') phi(k). Analytically I = I'.
struct LorentzReport {
  double i_rest = 0.0;          // scalar-density integral, rest frame
  double i_boosted = 0.0;       // same integral evaluated in the boosted frame
  double delta = 0.0;           // |i_rest - i_boosted|
  double boosted_probability = 0.0;  // sum |phi'|^2 dk' (plain cell widths)
};

LorentzReport lorentz_boost_report(const KAmplitude& phi, double rapidity,
                                   double mass);

// |I - I'| from lorentz_boost_report
double lorentz_measure_check(const KAmplitude& phi, double rapidity,
                             double mass);

}  // namespace qpse
