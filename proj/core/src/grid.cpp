#include "qpse/grid.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "qpse/parallel.hpp"

namespace qpse {

namespace {

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void check_sizes(const GridSpec& g, std::size_t have, const char* what) {
  if (have != g.size())
    throw Error(std::string(what) + ": array size " + std::to_string(have) +
                " does not match grid size " + std::to_string(g.size()));
}

}  // namespace

GridSpec::GridSpec(int dim_, std::size_t n_, double origin_, double spacing_)
    : dim(dim_), n(n_), origin(origin_), spacing(spacing_) {
  if (dim < 1 || dim > 3)
    throw Error("GridSpec: dim must be 1, 2 or 3, got " + std::to_string(dim));
  if (n < 8 || !power_of_two(n))
    throw Error("GridSpec: points per axis must be a power of two >= 8, got " +
                std::to_string(n));
  if (!(spacing > 0.0) || !std::isfinite(spacing) || !std::isfinite(origin))
    throw Error("GridSpec: spacing must be finite and > 0, origin finite");
}

GridSpec GridSpec::centered(int dim_, std::size_t n_, double extent_) {
  const double dx = extent_ / static_cast<double>(n_);
  return GridSpec(dim_, n_, -(static_cast<double>(n_ / 2) * dx), dx);
}

std::size_t GridSpec::size() const {
  std::size_t s = 1;
  for (int a = 0; a < dim; ++a) s *= n;
  return s;
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim; ++a) v *= spacing;
  return v;
}

double integrate(const std::vector<double>& f, const GridSpec& grid) {
  check_sizes(grid, f.size(), "integrate");
  const double* p = f.data();
  std::atomic<bool> finite{true};
  const double s = blocked_sum(f.size(), [p, &finite](std::size_t i) {
    if (!std::isfinite(p[i])) finite.store(false, std::memory_order_relaxed);
    return p[i];
  });
  if (!finite.load()) throw NonFinite("integrate: non-finite sample in integrand");
  return s * grid.cell_volume();
}

double norm_mass(const WaveFunction& psi) {
  check_sizes(psi.grid, psi.amplitudes.size(), "norm_mass");
  const cplx* a = psi.amplitudes.data();
  const double s = blocked_sum(psi.amplitudes.size(),
                               [a](std::size_t i) { return std::norm(a[i]); });
  return s * psi.grid.cell_volume();
}

WaveFunction normalize(WaveFunction psi) {
  const double mass = norm_mass(psi);
  if (!std::isfinite(mass)) throw NonFinite("normalize: non-finite mass");
  if (mass < 1e-250)
    throw ZeroNorm("normalize: wavefunction has numerically zero mass");
  const double scale = 1.0 / std::sqrt(mass);
  cplx* a = psi.amplitudes.data();
  parallel_for(psi.amplitudes.size(), [a, scale](std::size_t i0, std::size_t i1) {
    for (std::size_t i = i0; i < i1; ++i) a[i] *= scale;
  });
  return psi;
}

DensityField density(const WaveFunction& psi) {
  const double mass = norm_mass(psi);
  if (std::abs(mass - 1.0) > 1e-8)
    throw NotNormalized("density: wavefunction mass " + std::to_string(mass) +
                        " is not 1 within 1e-8");
  DensityField rho{psi.grid, std::vector<double>(psi.amplitudes.size()),
                   psi.grid.cell_volume()};
  const cplx* a = psi.amplitudes.data();
  double* v = rho.values.data();
  parallel_for(psi.amplitudes.size(), [a, v](std::size_t i0, std::size_t i1) {
    for (std::size_t i = i0; i < i1; ++i) v[i] = std::norm(a[i]);
  });
  return rho;
}

double edge_mass(const WaveFunction& psi) {
  check_sizes(psi.grid, psi.amplitudes.size(), "edge_mass");
  std::vector<double> rho(psi.amplitudes.size());
  const cplx* a = psi.amplitudes.data();
  double* v = rho.data();
  parallel_for(rho.size(), [a, v](std::size_t i0, std::size_t i1) {
    for (std::size_t i = i0; i < i1; ++i) v[i] = std::norm(a[i]);
  });
  return detail::boundary_mass(psi.grid, rho);
}

namespace detail {

std::size_t reflected_flat_index(const GridSpec& g, std::size_t flat) {
  const std::size_t n = g.n;
  std::size_t out = 0;
  std::size_t stride = 1;
  for (int a = 0; a < g.dim; ++a) {  // walk axes fastest-first
    const std::size_t ia = flat % n;
    flat /= n;
    const std::size_t ra = (n - ia) % n;
    out += ra * stride;
    stride *= n;
  }
  return out;
}

double boundary_mass(const GridSpec& g, const std::vector<double>& rho) {
  check_sizes(g, rho.size(), "boundary_mass");
  const std::size_t n = g.n;
  const double* v = rho.data();
  const int dim = g.dim;
  const double s = blocked_sum(rho.size(), [v, n, dim](std::size_t i) {
    std::size_t rest = i;
    for (int a = 0; a < dim; ++a) {
      const std::size_t ia = rest % n;
      if (ia == 0 || ia == n - 1) return v[i];
      rest /= n;
    }
    return 0.0;
  });
  return s * g.cell_volume();
}

}  // namespace detail
}  // namespace qpse
