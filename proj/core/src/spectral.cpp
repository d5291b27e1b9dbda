#include "qpse/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "qpse/parallel.hpp"

namespace qpse {

namespace {

std::mutex planner_mutex;  // the FFTW planner is not thread-safe; execution is

// Multiplies a[i] by the product over axes of table[index_along_axis].
// The grid is cubic, so one per-axis table serves every axis.
void apply_axis_product(const GridSpec& g, std::vector<cplx>& a,
                        const std::vector<cplx>& table) {
  const std::size_t n = g.n;
  const int dim = g.dim;
  cplx* p = a.data();
  const cplx* tab = table.data();
  parallel_for(a.size(), [p, tab, n, dim](std::size_t i0, std::size_t i1) {
    for (std::size_t i = i0; i < i1; ++i) {
      std::size_t rest = i;
      cplx f = tab[rest % n];
      for (int ax = 1; ax < dim; ++ax) {
        rest /= n;
        f *= tab[rest % n];
      }
      p[i] *= f;
    }
  });
}

void run_fftw(const GridSpec& g, std::vector<cplx>& a, int sign) {
  fftw_complex* buf = reinterpret_cast<fftw_complex*>(a.data());
  int ns[3] = {static_cast<int>(g.n), static_cast<int>(g.n),
               static_cast<int>(g.n)};
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    // ESTIMATE: deterministic algorithm choice, never touches the buffer
    plan = fftw_plan_dft(g.dim, ns, buf, buf, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    fftw_destroy_plan(plan);
  }
}

}  // namespace

GridSpec conjugate_grid(const GridSpec& xgrid) {
  const double dk =
      2.0 * std::numbers::pi / (static_cast<double>(xgrid.n) * xgrid.spacing);
  return GridSpec(xgrid.dim, xgrid.n,
                  -(static_cast<double>(xgrid.n / 2) * dk), dk);
}

bool conjugate_pair(const GridSpec& xgrid, const GridSpec& kgrid) {
  if (xgrid.dim != kgrid.dim || xgrid.n != kgrid.n) return false;
  const GridSpec want = conjugate_grid(xgrid);
  // bitwise: both sides come from the same expression when grids are built
  // through conjugate_grid
  return kgrid.spacing == want.spacing && kgrid.origin == want.origin;
}

namespace detail {

void dft(const GridSpec& xgrid, const GridSpec& kgrid, std::vector<cplx>& a,
         bool forward) {
  if (a.size() != xgrid.size())
    throw Error("dft: array size does not match grid");
  if (xgrid.n != kgrid.n || xgrid.dim != kgrid.dim)
    throw GridMismatch("dft: conjugate grids disagree in shape");

  const std::size_t n = xgrid.n;
  const double root = std::sqrt(2.0 * std::numbers::pi);

  // The centered transform: k0 dx = -pi exactly, so shifting the k-origin to
  // -(N/2)dk is the alternating sign (-1)^n on the spatial side, and the
  // spatial origin enters as the plane-wave phase e^{-i k x0} per axis.
  std::vector<cplx> pre(n), post(n);
  if (forward) {
    const double scale = xgrid.spacing / root;  // per-axis Riemann weight
    for (std::size_t i = 0; i < n; ++i)
      pre[i] = (i & 1) ? cplx(-1.0, 0.0) : cplx(1.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double arg = -kgrid.coord(j) * xgrid.origin;
      post[j] = scale * cplx(std::cos(arg), std::sin(arg));
    }
    apply_axis_product(xgrid, a, pre);
    run_fftw(xgrid, a, FFTW_FORWARD);
    apply_axis_product(xgrid, a, post);
  } else {
    const double scale = kgrid.spacing / root;  // absorbs FFTW's factor N
    for (std::size_t j = 0; j < n; ++j) {
      const double arg = kgrid.coord(j) * xgrid.origin;
      pre[j] = cplx(std::cos(arg), std::sin(arg));
    }
    for (std::size_t i = 0; i < n; ++i)
      post[i] = ((i & 1) ? -scale : scale) * cplx(1.0, 0.0);
    apply_axis_product(xgrid, a, pre);
    run_fftw(xgrid, a, FFTW_BACKWARD);
    apply_axis_product(xgrid, a, post);
  }
}

}  // namespace detail

KAmplitude to_k_space(const WaveFunction& psi) {
  KAmplitude out{conjugate_grid(psi.grid), psi.grid, psi.amplitudes,
                 psi.time_tag};
  detail::dft(out.xgrid, out.kgrid, out.amplitudes, true);
  return out;
}

WaveFunction from_k_space(const KAmplitude& phi) {
  if (!conjugate_pair(phi.xgrid, phi.kgrid))
    throw GridMismatch(
        "from_k_space: kgrid is not the conjugate of the spatial grid");
  WaveFunction out{phi.xgrid, phi.amplitudes, phi.time_tag};
  detail::dft(phi.xgrid, phi.kgrid, out.amplitudes, false);
  return out;
}

DensityField density(const KAmplitude& phi) {
  if (phi.amplitudes.size() != phi.kgrid.size())
    throw Error("density: array size does not match k-grid");
  const cplx* a = phi.amplitudes.data();
  const double mass = blocked_sum(phi.amplitudes.size(),
                                  [a](std::size_t i) { return std::norm(a[i]); }) *
                      phi.kgrid.cell_volume();
  if (std::abs(mass - 1.0) > 1e-8)
    throw NotNormalized("density: k-amplitude mass " + std::to_string(mass) +
                        " is not 1 within 1e-8 (Parseval)");
  DensityField rho{phi.kgrid, std::vector<double>(phi.amplitudes.size()),
                   phi.kgrid.cell_volume()};
  double* v = rho.values.data();
  parallel_for(rho.values.size(), [a, v](std::size_t i0, std::size_t i1) {
    for (std::size_t i = i0; i < i1; ++i) v[i] = std::norm(a[i]);
  });
  return rho;
}

}  // namespace qpse
