#include "susypt/schrodinger.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <lapacke.h>

#include "susypt/errors.hpp"

namespace susypt {
namespace {

struct DiscreteLevels {
  std::vector<double> energies;
  std::vector<std::vector<double>> states;  // full grid, walls included
};

// Eigenpairs below zero of the tridiagonal matrix
//   diag = 2/h^2 + V(x_i), off = -1/h^2, i = 1 .. n-2.
DiscreteLevels solve_grid(const std::vector<double>& v, const Grid& grid, bool vectors) {
  const int m = grid.n() - 2;
  const double h2 = grid.h() * grid.h();
  std::vector<double> d(m), e(std::max(m - 1, 1), -1.0 / h2);
  double vmin = 0.0;
  for (int i = 0; i < m; ++i) {
    d[i] = 2.0 / h2 + v[i + 1];
    vmin = std::min(vmin, v[i + 1]);
  }
  DiscreteLevels out;
  if (vmin >= 0.0) return out;  // no state can lie below zero

  // Pass 1: eigenvalues in (vmin - 1, 0]. Pass 2: vectors for exactly those.
  std::vector<double> dd = d, ee = e;
  int found = 0;
  std::vector<double> w(m);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(m));
  double dummy = 0.0;
  lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'N', 'V', m, dd.data(), ee.data(),
                                   vmin - 1.0, 0.0, 0, 0, 0.0, &found, w.data(), &dummy,
                                   1, isuppz.data());
  if (info != 0)
    throw ConvergenceError("tridiagonal eigensolver failed, info = " + std::to_string(info));
  std::vector<double> z;
  if (vectors && found > 0) {
    z.resize(static_cast<std::size_t>(m) * found);
    int again = 0;
    info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', m, d.data(), e.data(), 0.0, 0.0, 1,
                          found, 0.0, &again, w.data(), z.data(), m, isuppz.data());
    if (info != 0 || again != found)
      throw ConvergenceError("tridiagonal eigensolver failed, info = " + std::to_string(info));
  }

  for (int k = 0; k < found; ++k) {
    if (!(w[k] < 0.0)) continue;
    out.energies.push_back(w[k]);
    if (!vectors) continue;
    std::vector<double> psi(grid.n(), 0.0);
    for (int i = 0; i < m; ++i) psi[i + 1] = z[static_cast<std::size_t>(k) * m + i];
    const double nrm = grid_norm(psi, grid);
    const auto peak = std::max_element(psi.begin(), psi.end(), [](double a, double b) {
      return std::abs(a) < std::abs(b);
    });
    const double s = (*peak < 0.0 ? -1.0 : 1.0) / nrm;
    for (double& p : psi) p *= s;
    out.states.push_back(std::move(psi));
  }
  return out;
}

std::vector<double> checked_sample(const Potential& v, const Grid& grid,
                                   const SolverOptions& opts) {
  // Inside the box every point is within h/2 of a node.
  for (double xs : opts.singular_points) {
    if (xs > grid.x_min() - 2.0 * grid.h() && xs < grid.x_max() + 2.0 * grid.h())
      throw SingularityError("grid point within 2h of a singularity", xs);
  }
  std::vector<double> out(grid.n());
  for (int i = 0; i < grid.n(); ++i) {
    out[i] = v(grid.x(i));
    if (!std::isfinite(out[i]))
      throw SingularityError("potential is not finite on the grid", grid.x(i));
  }
  const double edge = std::max(std::abs(out.front()), std::abs(out.back()));
  if (edge > opts.edge_tolerance)
    throw DomainError("potential is not negligible at the box walls (|V| = " +
                      std::to_string(edge) + ")");
  return out;
}

}  // namespace

Grid::Grid(double x_min, double x_max, int n) : x_min_(x_min), x_max_(x_max), n_(n) {
  if (!(x_min < x_max)) throw DomainError("Grid: requires x_min < x_max");
  if (n < 3) throw DomainError("Grid: requires n >= 3");
  h_ = (x_max - x_min) / (n - 1);
}

Grid Grid::symmetric(double half_width, double h_max) {
  if (!(half_width > 0.0) || !(h_max > 0.0))
    throw DomainError("Grid::symmetric: widths must be positive");
  int n = static_cast<int>(std::ceil(2.0 * half_width / h_max)) + 1;
  if (n % 2 == 0) ++n;  // keep x = 0 on the grid
  return Grid(-half_width, half_width, std::max(n, 3));
}

double box_half_width(double alpha, double e_shallowest) {
  double w = 25.0 / alpha;
  if (e_shallowest < 0.0) w = std::max(w, 12.0 / std::sqrt(-e_shallowest));
  return w;
}

double marginal_threshold(double alpha) { return 1e-4 * alpha * alpha; }

int NumericSpectrum::strict_count() const {
  return static_cast<int>(std::count(marginal.begin(), marginal.end(), false));
}

std::vector<double> sample(const Potential& f, const Grid& grid) {
  std::vector<double> out(grid.n());
  for (int i = 0; i < grid.n(); ++i) out[i] = f(grid.x(i));
  return out;
}

double grid_inner(std::span<const double> a, std::span<const double> b, const Grid& grid) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  // trapezoid: half weight at the walls
  s -= 0.5 * (a.front() * b.front() + a.back() * b.back());
  return grid.h() * s;
}

double grid_norm(std::span<const double> psi, const Grid& grid) {
  return std::sqrt(grid_inner(psi, psi, grid));
}

NumericSpectrum bound_spectrum(const Potential& v, const Grid& grid,
                               const SolverOptions& opts) {
  const Grid g2 = grid.refined();
  const Grid g4 = g2.refined();
  const DiscreteLevels l1 = solve_grid(checked_sample(v, grid, opts), grid, true);
  const DiscreteLevels l2 = solve_grid(checked_sample(v, g2, opts), g2, false);
  const DiscreteLevels l4 = solve_grid(checked_sample(v, g4, opts), g4, false);

  // Coarser grids bind at least as many levels; keep those resolved on all three.
  const std::size_t count =
      std::min({l1.energies.size(), l2.energies.size(), l4.energies.size()});

  NumericSpectrum out{grid, {}, {}, {}, {}, {}};
  for (std::size_t k = 0; k < count; ++k) {
    const double e1 = l1.energies[k], e2 = l2.energies[k], e4 = l4.energies[k];
    const double r12 = (4.0 * e2 - e1) / 3.0;
    const double r24 = (4.0 * e4 - e2) / 3.0;
    const double err = std::abs(r24 - r12);
    const bool marginal = std::abs(r24) < opts.marginal_energy || r24 >= 0.0;
    if (!marginal && err > opts.tolerance * std::max(1.0, std::abs(r24)))
      throw ConvergenceError("bound_spectrum: level " + std::to_string(k) +
                             " not converged (estimate " + std::to_string(err) + ")");
    if (r24 >= 0.0) continue;  // extrapolated into the continuum
    out.energies.push_back(r24);
    out.grid_energies.push_back(e1);
    out.error_estimates.push_back(err);
    out.marginal.push_back(marginal);
    out.states.push_back(l1.states[k]);
  }
  return out;
}

double hamiltonian_residual(const Potential& v, const Grid& grid,
                            std::span<const double> psi, double energy) {
  const double h2 = grid.h() * grid.h();
  double s = 0.0;
  for (int i = 1; i + 1 < grid.n(); ++i) {
    const double r = -(psi[i + 1] - 2.0 * psi[i] + psi[i - 1]) / h2 +
                     (v(grid.x(i)) - energy) * psi[i];
    s += r * r;
  }
  return std::sqrt(grid.h() * s);
}

std::vector<double> derivative5(std::span<const double> f, const Grid& grid) {
  const int n = static_cast<int>(f.size());
  auto at = [&](int i) { return (i < 0 || i >= n) ? 0.0 : f[i]; };
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i)
    d[i] = (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) / (12.0 * grid.h());
  return d;
}

IntertwinerImage apply_intertwiner(const Potential& beta, std::span<const double> psi,
                                   const Grid& grid, double min_norm) {
  std::vector<double> img = derivative5(psi, grid);
  for (int i = 0; i < grid.n(); ++i) img[i] += beta(grid.x(i)) * psi[i];
  img.front() = 0.0;
  img.back() = 0.0;
  const double nrm = grid_norm(img, grid);
  if (!(nrm >= min_norm))
    throw DegenerateError("intertwiner annihilated the state", nrm);
  for (double& y : img) y /= nrm;
  return {std::move(img), nrm};
}

namespace {

ScatteringResult numerov_scatter(const std::vector<double>& v, double energy,
                                 const Grid& grid) {
  using cd = std::complex<double>;
  const int n = grid.n();
  const double h = grid.h();
  const double h2 = h * h;
  const double k2 = energy;
  // Free Numerov recurrence admits e^{iqx} with this discrete wavenumber.
  const double c = (1.0 - 5.0 * h2 * k2 / 12.0) / (1.0 + h2 * k2 / 12.0);
  if (!(std::abs(c) < 1.0)) throw DomainError("scatter: step too coarse for this energy");
  const double q = std::acos(c) / h;

  auto w = [&](int j) { return 1.0 + h2 * (k2 - v[j]) / 12.0; };
  std::vector<cd> y(n);
  y[n - 1] = std::polar(1.0, q * grid.x(n - 1));
  y[n - 2] = std::polar(1.0, q * grid.x(n - 2));
  for (int j = n - 2; j >= 1; --j) {
    const double mid = 2.0 * (1.0 - 5.0 * h2 * (k2 - v[j]) / 12.0);
    y[j - 1] = (mid * y[j] - w(j + 1) * y[j + 1]) / w(j - 1);
  }
  const cd u0 = std::polar(1.0, q * grid.x(0));
  const cd u1 = std::polar(1.0, q * grid.x(1));
  const cd det = u0 / u1 - u1 / u0;
  const cd incident = (y[0] / u1 - y[1] / u0) / det;
  const cd reflected = (u0 * y[1] - u1 * y[0]) / det;
  const double a2 = std::norm(incident);
  return {std::norm(reflected) / a2, 1.0 / a2};
}

}  // namespace

ScatteringResult scatter(const Potential& v, double energy, const Grid& grid,
                         double step_tol) {
  if (!(energy > 0.0)) throw DomainError("scatter: energy must be positive");
  SolverOptions opts;
  const Grid fine = grid.refined();
  const ScatteringResult coarse = numerov_scatter(checked_sample(v, grid, opts), energy, grid);
  const ScatteringResult refined = numerov_scatter(checked_sample(v, fine, opts), energy, fine);
  if (std::abs(coarse.reflection - refined.reflection) > step_tol)
    throw ConvergenceError("scatter: |R|^2 changed by more than the step tolerance");
  return refined;
}

double reflection_coefficient(const Potential& v, double energy, const Grid& grid) {
  return scatter(v, energy, grid).reflection;
}

}  // namespace susypt
