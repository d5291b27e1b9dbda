#include "qpse/spinor.hpp"

#include <cmath>
#include <numbers>

#include "qpse/parallel.hpp"
#include "qpse/spectral.hpp"
#include "qpse/spin.hpp"

namespace qpse {

namespace {

void check_field(const SpinorField& f) {
  if (f.grid.dim != 1)
    throw Error("spinor field: 1D grids only");
  for (const auto& c : f.components)
    if (c.size() != f.grid.size())
      throw Error("spinor field: component size does not match grid");
}

// out_a(x) = sum_b M(a,b) src_b(x'), with optional conjugation of the source
// and optional spatial reflection x' = -x (index map respecting centering)
SpinorField matrix_map(const SpinorField& in, const Eigen::Matrix4cd& m,
                       bool conj_src, bool reflect) {
  check_field(in);
  SpinorField out{in.grid, {}, in.time_tag};
  const std::size_t size = in.grid.size();
  for (auto& c : out.components) c.assign(size, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j =
        reflect ? detail::reflected_flat_index(in.grid, i) : i;
    for (int a = 0; a < 4; ++a) {
      cplx acc(0.0, 0.0);
      for (int b = 0; b < 4; ++b) {
        const cplx coeff = m(a, b);
        if (coeff == cplx(0.0, 0.0)) continue;
        const cplx src = in.components[static_cast<std::size_t>(b)][j];
        acc += coeff * (conj_src ? std::conj(src) : src);
      }
      out.components[static_cast<std::size_t>(a)][i] = acc;
    }
  }
  return out;
}

}  // namespace

const GammaSet& GammaSet::standard() {
  static const GammaSet g = [] {
    using M = Eigen::Matrix4cd;
    const cplx I(0.0, 1.0);
    M g0 = M::Zero(), g1 = M::Zero(), g2 = M::Zero(), g3 = M::Zero();
    g0(0, 0) = 1;  g0(1, 1) = 1;  g0(2, 2) = -1; g0(3, 3) = -1;
    // gamma^i = [[0, sigma_i], [-sigma_i, 0]]
    g1(0, 3) = 1;  g1(1, 2) = 1;  g1(2, 1) = -1; g1(3, 0) = -1;
    g2(0, 3) = -I; g2(1, 2) = I;  g2(2, 1) = I;  g2(3, 0) = -I;
    g3(0, 2) = 1;  g3(1, 3) = -1; g3(2, 0) = -1; g3(3, 1) = 1;
    GammaSet out;
    out.gamma0 = g0;
    out.gamma1 = g1;
    out.gamma2 = g2;
    out.gamma3 = g3;
    out.C = I * g2 * g0;
    out.P = g0;
    out.T = I * g1 * g3;
    return out;
  }();
  return g;
}

double spinor_mass(const SpinorField& f) {
  check_field(f);
  double s = 0.0;
  for (const auto& c : f.components) {
    const cplx* p = c.data();
    s += blocked_sum(c.size(), [p](std::size_t i) { return std::norm(p[i]); });
  }
  return s * f.grid.cell_volume();
}

SpinorField normalize(SpinorField f) {
  const double mass = spinor_mass(f);
  if (!std::isfinite(mass)) throw NonFinite("spinor normalize: non-finite mass");
  if (mass < 1e-250)
    throw ZeroNorm("spinor normalize: field has numerically zero mass");
  const double scale = 1.0 / std::sqrt(mass);
  for (auto& c : f.components)
    for (auto& z : c) z *= scale;
  return f;
}

DensityField spinor_density(const SpinorField& f) {
  check_field(f);
  DensityField rho{f.grid, std::vector<double>(f.grid.size(), 0.0),
                   f.grid.cell_volume()};
  for (const auto& c : f.components)
    for (std::size_t i = 0; i < c.size(); ++i) rho.values[i] += std::norm(c[i]);
  return rho;
}

DensityField spinor_k_density(const SpinorField& f) {
  check_field(f);
  const GridSpec kg = conjugate_grid(f.grid);
  DensityField rho{kg, std::vector<double>(f.grid.size(), 0.0),
                   kg.cell_volume()};
  for (const auto& c : f.components) {
    std::vector<cplx> a = c;
    detail::dft(f.grid, kg, a, true);
    for (std::size_t i = 0; i < a.size(); ++i) rho.values[i] += std::norm(a[i]);
  }
  return rho;
}

SpinorField apply_c(const SpinorField& f) {
  const GammaSet& g = GammaSet::standard();
  const Eigen::Matrix4cd m = g.C * g.gamma0.transpose();  // = i gamma2
  return normalize(matrix_map(f, m, /*conj_src=*/true, /*reflect=*/false));
}

SpinorField apply_p(const SpinorField& f) {
  const GammaSet& g = GammaSet::standard();
  return normalize(matrix_map(f, g.P, /*conj_src=*/false, /*reflect=*/true));
}

SpinorField apply_t(const SpinorField& f) {
  const GammaSet& g = GammaSet::standard();
  SpinorField out = matrix_map(f, g.T, /*conj_src=*/true, /*reflect=*/false);
  out.time_tag = -out.time_tag;
  return normalize(std::move(out));
}

SpinorField apply_cpt(const SpinorField& f) {
  return apply_t(apply_p(apply_c(f)));
}

EntropyReport spinor_entropy(const SpinorField& f) {
  EntropyReport rep;
  {
    const DensityField rho_r = spinor_density(f);
    rep.norm_residual_r = std::abs(integrate(rho_r.values, rho_r.grid) - 1.0);
    rep.s_r = differential_entropy(rho_r);
  }
  {
    const DensityField rho_k = spinor_k_density(f);
    rep.norm_residual_k = std::abs(integrate(rho_k.values, rho_k.grid) - 1.0);
    rep.s_k = differential_entropy(rho_k);
  }
  rep.s_spin = spin_entropy_single(0.5);
  rep.s_total = rep.s_r + rep.s_k + rep.s_spin;
  rep.bbm_margin = bbm_check(rep, f.grid.dim);
  return rep;
}

}  // namespace qpse
