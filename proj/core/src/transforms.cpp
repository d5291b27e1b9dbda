#include "qpse/transforms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpse/parallel.hpp"

namespace qpse {

namespace {

// rotate every axis by the integer step j (new[n] = old[n - j] cyclically)
WaveFunction rotate_steps(const WaveFunction& psi, long long j) {
  const std::size_t n = psi.grid.n;
  const long long nn = static_cast<long long>(n);
  const std::size_t shift = static_cast<std::size_t>(((j % nn) + nn) % nn);
  WaveFunction out{psi.grid, std::vector<cplx>(psi.amplitudes.size()),
                   psi.time_tag};
  const cplx* src = psi.amplitudes.data();
  cplx* dst = out.amplitudes.data();
  const int dim = psi.grid.dim;
  parallel_for(out.amplitudes.size(),
               [src, dst, n, shift, dim](std::size_t i0, std::size_t i1) {
                 for (std::size_t i = i0; i < i1; ++i) {
                   std::size_t rest = i;
                   std::size_t from = 0;
                   std::size_t stride = 1;
                   for (int a = 0; a < dim; ++a) {
                     const std::size_t ia = rest % n;
                     rest /= n;
                     from += ((ia + n - shift) % n) * stride;
                     stride *= n;
                   }
                   dst[i] = src[from];
                 }
               });
  return out;
}

// phase multiply exp(i sign * amount * sum_axes coord)
void axis_phase(WaveFunction& psi, double amount, double sign) {
  const std::size_t n = psi.grid.n;
  const int dim = psi.grid.dim;
  std::vector<cplx> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double arg = sign * amount * psi.grid.coord(i);
    table[i] = cplx(std::cos(arg), std::sin(arg));
  }
  cplx* p = psi.amplitudes.data();
  const cplx* tab = table.data();
  parallel_for(psi.amplitudes.size(),
               [p, tab, n, dim](std::size_t i0, std::size_t i1) {
                 for (std::size_t i = i0; i < i1; ++i) {
                   std::size_t rest = i;
                   cplx f = tab[rest % n];
                   for (int a = 1; a < dim; ++a) {
                     rest /= n;
                     f *= tab[rest % n];
                   }
                   p[i] *= f;
                 }
               });
}

// mass of the k-density within 10% of the Nyquist edge on any axis
double nyquist_band_mass(const KAmplitude& phi) {
  const std::size_t n = phi.kgrid.n;
  const int dim = phi.kgrid.dim;
  const double edge = 0.9 * (static_cast<double>(n / 2) * phi.kgrid.spacing);
  const cplx* a = phi.amplitudes.data();
  const GridSpec kg = phi.kgrid;
  const double s =
      blocked_sum(phi.amplitudes.size(), [a, kg, n, dim, edge](std::size_t i) {
        std::size_t rest = i;
        for (int ax = 0; ax < dim; ++ax) {
          const double k = kg.coord(rest % n);
          if (std::abs(k) >= edge) return std::norm(a[i]);
          rest /= n;
        }
        return 0.0;
      });
  return s * phi.kgrid.cell_volume();
}

}  // namespace

WaveFunction translate(const WaveFunction& psi, TransformSpec::Kind kind,
                       double amount) {
  if (kind == TransformSpec::Kind::translate_x) {
    const double steps = amount / psi.grid.spacing;
    const long long j = static_cast<long long>(std::llround(steps));
    if (amount == static_cast<double>(j) * psi.grid.spacing)
      return rotate_steps(psi, j);  // exact cyclic shift
    KAmplitude phi = to_k_space(psi);
    // shift theorem: psi(x - x0) <-> e^{-i k x0} phi(k)
    WaveFunction shifted{phi.kgrid, std::move(phi.amplitudes), phi.time_tag};
    axis_phase(shifted, amount, -1.0);
    KAmplitude back{phi.kgrid, phi.xgrid, std::move(shifted.amplitudes),
                    phi.time_tag};
    return normalize(from_k_space(back));
  }
  if (kind == TransformSpec::Kind::translate_k) {
    WaveFunction out = psi;
    axis_phase(out, amount, +1.0);  // e^{i k0 x}
    const KAmplitude phi = to_k_space(out);
    const double band = nyquist_band_mass(phi);
    if (band > 1e-10)
      throw AliasedMomentum(
          "translate_k: boosted k-density carries mass " +
          std::to_string(band) + " within 10% of the Nyquist edge");
    return normalize(std::move(out));
  }
  throw Error("translate: kind must be translate_x or translate_k");
}

WaveFunction dilate(const WaveFunction& psi, double a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw Error("dilate: scale must be finite and > 0");
  WaveFunction out{GridSpec(psi.grid.dim, psi.grid.n, psi.grid.origin * a,
                            psi.grid.spacing * a),
                   psi.amplitudes, psi.time_tag};
  const double scale = std::pow(a, -0.5 * psi.grid.dim);
  for (auto& z : out.amplitudes) z *= scale;
  return out;
}

WaveFunction parity(const WaveFunction& psi) {
  WaveFunction out{psi.grid, std::vector<cplx>(psi.amplitudes.size()),
                   psi.time_tag};
  const cplx* src = psi.amplitudes.data();
  cplx* dst = out.amplitudes.data();
  const GridSpec g = psi.grid;
  parallel_for(out.amplitudes.size(),
               [src, dst, g](std::size_t i0, std::size_t i1) {
                 for (std::size_t i = i0; i < i1; ++i)
                   dst[i] = src[detail::reflected_flat_index(g, i)];
               });
  return out;
}

WaveFunction conjugate(const WaveFunction& psi) {
  WaveFunction out = psi;
  for (auto& z : out.amplitudes) z = std::conj(z);
  return out;
}

LorentzReport lorentz_boost_report(const KAmplitude& phi, double rapidity,
                                   double mass) {
  if (phi.kgrid.dim != 1)
    throw Error("lorentz_boost_report: 1D k-amplitudes only");
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw Error("lorentz_boost_report: mass must be finite and > 0");
  if (!std::isfinite(rapidity))
    throw Error("lorentz_boost_report: rapidity must be finite");

  const std::size_t n = phi.kgrid.n;
  const double dk = phi.kgrid.spacing;
  const double ch = std::cosh(rapidity);
  const double sh = std::sinh(rapidity);

  double i_rest = 0.0, i_boost = 0.0, prob = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx amp = phi.amplitudes[i];
    if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag()))
      throw NonFinite("lorentz_boost_report: non-finite k-amplitude");
    const double rho = std::norm(amp);
    const double k = phi.kgrid.coord(i);
    const double lo = k - 0.5 * dk, hi = k + 0.5 * dk;
    const double w = std::sqrt(k * k + mass * mass);

    // invariant cell measure: integral over the cell of dk/omega
    const double mu = std::asinh(hi / mass) - std::asinh(lo / mass);
    i_rest += (w * rho) * mu;

    // boost midpoint and edges; omega' independently off the mass shell
    const double kp = k * ch - w * sh;
    const double wp = std::sqrt(kp * kp + mass * mass);
    const double lop =
        lo * ch - std::sqrt(lo * lo + mass * mass) * sh;
    const double hip =
        hi * ch - std::sqrt(hi * hi + mass * mass) * sh;
    const double mup = std::asinh(hip / mass) - std::asinh(lop / mass);
    const double rhop = (w / wp) * rho;  // |phi'(k')|^2
    i_boost += (wp * rhop) * mup;
    prob += rhop * (hip - lop);
  }

  LorentzReport rep;
  rep.i_rest = i_rest;
  rep.i_boosted = i_boost;
  rep.delta = std::abs(i_rest - i_boost);
  rep.boosted_probability = prob;
  return rep;
}

double lorentz_measure_check(const KAmplitude& phi, double rapidity,
                             double mass) {
  return lorentz_boost_report(phi, rapidity, mass).delta;
}

}  // namespace qpse
