#include "qpse/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpse/parallel.hpp"

namespace qpse {

namespace {

constexpr double kEdgeMassLimit = 1e-12;

// broadcast a per-axis parameter list (size 1 or dim) to exactly dim entries
template <class T>
std::vector<T> per_axis(std::vector<T> v, int dim, const char* what) {
  if (v.size() == 1) v.resize(static_cast<std::size_t>(dim), v[0]);
  if (v.size() != static_cast<std::size_t>(dim))
    throw Error(std::string("make_state: ") + what + " needs 1 or dim entries");
  return v;
}

// one axis of a Gaussian packet: (2 pi s^2)^{-1/4} e^{-(x-c)^2/4s^2} e^{i k x}
std::vector<cplx> gaussian_axis(const GridSpec& g, double c, double s,
                                double k) {
  if (!(s > 0.0)) throw Error("make_state: sigma must be > 0");
  std::vector<cplx> out(g.n);
  const double pref =
      std::pow(2.0 * std::numbers::pi * s * s, -0.25);
  for (std::size_t i = 0; i < g.n; ++i) {
    const double x = g.coord(i);
    const double env = pref * std::exp(-(x - c) * (x - c) / (4.0 * s * s));
    out[i] = env * cplx(std::cos(k * x), std::sin(k * x));
  }
  return out;
}

// oscillator eigenfunction (a sqrt(pi) 2^n n!)^{-1/2} H_n(x/a) e^{-x^2/2a^2},
// displaced by c and boosted by k; a = sigma sqrt(2)
std::vector<cplx> hermite_axis(const GridSpec& g, int n, double sigma,
                               double c, double k) {
  if (!(sigma > 0.0)) throw Error("make_state: sigma must be > 0");
  if (n < 0) throw Error("make_state: hermite index must be >= 0");
  const double a = sigma * std::numbers::sqrt2;
  double norm = a * std::sqrt(std::numbers::pi);
  for (int j = 1; j <= n; ++j) norm *= 2.0 * static_cast<double>(j);
  const double pref = 1.0 / std::sqrt(norm);
  std::vector<cplx> out(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    const double x = g.coord(i);
    const double y = (x - c) / a;
    double hm1 = 0.0, h = 1.0;  // H_0
    for (int j = 0; j < n; ++j) {  // H_{j+1} = 2y H_j - 2j H_{j-1}
      const double next = 2.0 * y * h - 2.0 * static_cast<double>(j) * hm1;
      hm1 = h;
      h = next;
    }
    const double env = pref * h * std::exp(-0.5 * y * y);
    out[i] = env * cplx(std::cos(k * x), std::sin(k * x));
  }
  return out;
}

// tensor product of per-axis factor tables into the flat row-major array
std::vector<cplx> separable_fill(const GridSpec& g,
                                 const std::vector<std::vector<cplx>>& axes) {
  std::vector<cplx> out(g.size());
  const std::size_t n = g.n;
  const int dim = g.dim;
  cplx* p = out.data();
  parallel_for(out.size(), [&axes, p, n, dim](std::size_t i0, std::size_t i1) {
    for (std::size_t i = i0; i < i1; ++i) {
      std::size_t rest = i;
      cplx v(1.0, 0.0);
      for (int ax = dim - 1; ax >= 0; --ax) {  // fastest axis = last
        v *= axes[static_cast<std::size_t>(ax)][rest % n];
        rest /= n;
      }
      p[i] = v;
    }
  });
  return out;
}

std::vector<cplx> synth(const StateSpec& spec, const GridSpec& grid);

std::vector<cplx> synth_superposition(const StateSpec& spec,
                                      const GridSpec& grid) {
  if (spec.terms.empty())
    throw Error("make_state: superposition needs at least one term");
  std::vector<cplx> acc(grid.size(), cplx(0.0, 0.0));
  for (const auto& [coeff, term] : spec.terms) {
    WaveFunction part{grid, synth(term, grid), 0.0};
    part = normalize(std::move(part));  // coefficients weight unit states
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] += coeff * part.amplitudes[i];
  }
  return acc;
}

std::vector<cplx> synth(const StateSpec& spec, const GridSpec& grid) {
  switch (spec.kind) {
    case StateSpec::Kind::gaussian: {
      const auto c = per_axis(spec.center, grid.dim, "center");
      const auto s = per_axis(spec.sigma, grid.dim, "sigma");
      const auto k = per_axis(spec.k0, grid.dim, "k0");
      std::vector<std::vector<cplx>> axes;
      for (int a = 0; a < grid.dim; ++a)
        axes.push_back(gaussian_axis(grid, c[static_cast<std::size_t>(a)],
                                     s[static_cast<std::size_t>(a)],
                                     k[static_cast<std::size_t>(a)]));
      return separable_fill(grid, axes);
    }
    case StateSpec::Kind::hermite: {
      const auto idx = per_axis(spec.hermite_index, grid.dim, "hermite index");
      const auto c = per_axis(spec.center, grid.dim, "center");
      const auto s = per_axis(spec.sigma, grid.dim, "sigma");
      const auto k = per_axis(spec.k0, grid.dim, "k0");
      std::vector<std::vector<cplx>> axes;
      for (int a = 0; a < grid.dim; ++a)
        axes.push_back(hermite_axis(grid, idx[static_cast<std::size_t>(a)],
                                    s[static_cast<std::size_t>(a)],
                                    c[static_cast<std::size_t>(a)],
                                    k[static_cast<std::size_t>(a)]));
      return separable_fill(grid, axes);
    }
    case StateSpec::Kind::superposition:
      return synth_superposition(spec, grid);
    default:
      throw Error("make_state: kind not synthesizable on a plain grid");
  }
}

void check_edges(const WaveFunction& psi, const char* what) {
  const double em = edge_mass(psi);
  if (em > kEdgeMassLimit)
    throw GridTooSmall(std::string(what) + ": boundary probability mass " +
                       std::to_string(em) +
                       " exceeds 1e-12; enlarge the box or refine the grid");
}

}  // namespace

StateSpec StateSpec::make_gaussian(std::vector<double> center,
                                   std::vector<double> sigma,
                                   std::vector<double> k0) {
  StateSpec s;
  s.kind = Kind::gaussian;
  s.center = std::move(center);
  s.sigma = std::move(sigma);
  s.k0 = std::move(k0);
  return s;
}

StateSpec StateSpec::make_hermite(std::vector<int> index, double sigma) {
  StateSpec s;
  s.kind = Kind::hermite;
  s.hermite_index = std::move(index);
  s.sigma = {sigma};
  s.center = {0.0};
  s.k0 = {0.0};
  return s;
}

StateSpec StateSpec::make_superposition(
    std::vector<std::pair<cplx, StateSpec>> terms) {
  StateSpec s;
  s.kind = Kind::superposition;
  s.terms = std::move(terms);
  return s;
}

StateSpec StateSpec::make_pair_gaussian(double sigma, double r) {
  StateSpec s;
  s.kind = Kind::two_particle_gaussian;
  s.pair_sigma = sigma;
  s.pair_r = r;
  return s;
}

StateSpec StateSpec::make_spinor(double center, double sigma, double k0,
                                 Branch branch, cplx w_up, cplx w_down) {
  StateSpec s;
  s.kind = Kind::spinor_packet;
  s.center = {center};
  s.sigma = {sigma};
  s.k0 = {k0};
  s.branch = branch;
  s.weight_up = w_up;
  s.weight_down = w_down;
  return s;
}

WaveFunction make_state(const StateSpec& spec, const GridSpec& grid) {
  if (spec.kind == StateSpec::Kind::two_particle_gaussian)
    return make_two_particle(spec, grid);
  if (spec.kind == StateSpec::Kind::spinor_packet)
    throw Error("make_state: spinor packets are fields; use make_spinor_packet");
  WaveFunction psi{grid, synth(spec, grid), 0.0};
  psi = normalize(std::move(psi));
  check_edges(psi, "make_state");
  return psi;
}

WaveFunction make_two_particle(const StateSpec& spec, const GridSpec& grid2d) {
  if (spec.kind != StateSpec::Kind::two_particle_gaussian)
    throw Error("make_two_particle: spec kind must be two_particle_gaussian");
  if (grid2d.dim != 2)
    throw Error("make_two_particle: needs a 2D (x1, x2) grid");
  const double s = spec.pair_sigma;
  const double r = spec.pair_r;
  if (!(s > 0.0)) throw Error("make_two_particle: sigma must be > 0");
  if (!(std::abs(r) < 1.0))
    throw Error("make_two_particle: correlation must satisfy |r| < 1");
  // narrow principal axis has std sigma sqrt(1-|r|); below ~2 cells the
  // covariance is effectively singular on this grid
  if (s * std::sqrt(1.0 - std::abs(r)) < 2.0 * grid2d.spacing)
    throw GridTooSmall(
        "make_two_particle: narrow width sigma*sqrt(1-|r|) under-resolved "
        "(near-singular covariance); refine the grid or reduce |r|");

  const double denom = 4.0 * s * s * (1.0 - r * r);
  std::vector<cplx> amps(grid2d.size());
  const std::size_t n = grid2d.n;
  cplx* p = amps.data();
  const GridSpec g = grid2d;
  parallel_for(amps.size(), [p, n, g, r, denom](std::size_t i0, std::size_t i1) {
    for (std::size_t i = i0; i < i1; ++i) {
      const double x2 = g.coord(i % n);        // fast axis
      const double x1 = g.coord((i / n) % n);  // slow axis
      p[i] = std::exp(-(x1 * x1 + x2 * x2 - 2.0 * r * x1 * x2) / denom);
    }
  });
  WaveFunction psi{grid2d, std::move(amps), 0.0};
  psi = normalize(std::move(psi));
  check_edges(psi, "make_two_particle");
  return psi;
}

SpinorField make_spinor_packet(const StateSpec& spec, const GridSpec& grid) {
  if (spec.kind != StateSpec::Kind::spinor_packet)
    throw Error("make_spinor_packet: spec kind must be spinor_packet");
  if (grid.dim != 1) throw Error("make_spinor_packet: 1D grids only");
  const double c = spec.center.at(0);
  const double s = spec.sigma.at(0);
  const double k0 = spec.k0.at(0);
  const double nyquist = std::numbers::pi / grid.spacing;
  if (std::abs(k0) >= 0.5 * nyquist)
    throw AliasedMomentum("make_spinor_packet: |k0| = " + std::to_string(k0) +
                          " is not resolved (needs |k0| < pi/dx * 0.5)");

  const std::vector<cplx> g = gaussian_axis(grid, c, s, k0);
  const double energy = std::sqrt(k0 * k0 + 1.0);  // m = 1
  const double q = k0 / (energy + 1.0);

  // sigma_z spinor structure: chi_up -> +, chi_down -> -
  const cplx wu = spec.weight_up, wd = spec.weight_down;
  cplx upper[2], lower[2];
  if (spec.branch == StateSpec::Branch::positive) {
    upper[0] = wu;
    upper[1] = wd;
    lower[0] = q * wu;
    lower[1] = -q * wd;
  } else {
    upper[0] = q * wu;
    upper[1] = -q * wd;
    lower[0] = wu;
    lower[1] = wd;
  }

  SpinorField f{grid, {}, 0.0};
  const cplx coef[4] = {upper[0], upper[1], lower[0], lower[1]};
  for (int a = 0; a < 4; ++a) {
    auto& comp = f.components[static_cast<std::size_t>(a)];
    comp.resize(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) comp[i] = coef[a] * g[i];
  }
  f = normalize(std::move(f));
  const DensityField rho = spinor_density(f);
  if (detail::boundary_mass(grid, rho.values) > kEdgeMassLimit)
    throw GridTooSmall(
        "make_spinor_packet: boundary probability mass exceeds 1e-12");
  return f;
}

}  // namespace qpse
