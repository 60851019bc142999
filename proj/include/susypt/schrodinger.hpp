#pragma once

// Numerical oracle for H = -d^2/dx^2 + V on a uniform box grid.

#include <functional>
#include <span>
#include <vector>

namespace susypt {

using Potential = std::function<double(double)>;

/// Uniform grid of n points on [x_min, x_max], endpoints included.
class Grid {
 public:
  /// Throws DomainError unless x_min < x_max and n >= 3.
  Grid(double x_min, double x_max, int n);

  /// Symmetric box [-half_width, half_width] with spacing close to (not
  /// above) h_max.
  static Grid symmetric(double half_width, double h_max);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  int n() const noexcept { return n_; }
  double h() const noexcept { return h_; }
  double x(int i) const noexcept { return x_min_ + i * h_; }

  /// Same box with the spacing halved (2n - 1 points).
  Grid refined() const { return Grid(x_min_, x_max_, 2 * n_ - 1); }

 private:
  double x_min_;
  double x_max_;
  int n_;
  double h_;
};

/// Box rule for a well of inverse width alpha whose shallowest level is
/// at e_shallowest (< 0): half width max(25/alpha, 12/sqrt|E|), so that
/// level's density is below 1e-10 at the walls.
double box_half_width(double alpha, double e_shallowest);

/// Levels with |E| below 1e-4 alpha^2 are treated as marginal.
double marginal_threshold(double alpha);

struct SolverOptions {
  double tolerance = 1e-6;         // on the extrapolated eigenvalues, scaled by max(1,|E|)
  double marginal_energy = 0.0;    // |E| below this is flagged marginal
  double edge_tolerance = 1e-10;   // |V| allowed at the box walls
  std::vector<double> singular_points;  // poles the grid must stay 2h away from
};

struct NumericSpectrum {
  Grid grid;
  std::vector<double> energies;        // Richardson-extrapolated, ascending, < 0
  std::vector<double> grid_energies;   // raw eigenvalues on `grid`
  std::vector<double> error_estimates;
  std::vector<bool> marginal;
  std::vector<std::vector<double>> states;  // on `grid`, unit trapezoid norm

  /// Number of levels not flagged marginal.
  int strict_count() const;
};

/// Bound states of the 3-point discretization with Dirichlet walls,
/// eigenvalues extrapolated over the grids (n, 2n-1, 4n-3). Throws
/// ConvergenceError when the two extrapolations disagree beyond tolerance,
/// SingularityError when V is not finite on the grid (or a listed pole is
/// within 2h), DomainError when V is not negligible at the walls.
NumericSpectrum bound_spectrum(const Potential& v, const Grid& grid,
                               const SolverOptions& opts = {});

std::vector<double> sample(const Potential& f, const Grid& grid);

/// sqrt(h sum psi^2).
double grid_norm(std::span<const double> psi, const Grid& grid);

/// h sum a b.
double grid_inner(std::span<const double> a, std::span<const double> b, const Grid& grid);

/// ||(H - E) psi|| with the same 3-point stencil as bound_spectrum.
double hamiltonian_residual(const Potential& v, const Grid& grid,
                            std::span<const double> psi, double energy);

/// Central 5-point first derivative; values beyond the walls are taken as 0.
std::vector<double> derivative5(std::span<const double> f, const Grid& grid);

struct IntertwinerImage {
  std::vector<double> state;  // normalized (d/dx + beta) psi
  double raw_norm;            // norm before normalization
};

/// (d/dx + beta) psi, derivative by 5-point differences, then normalized.
/// Throws DegenerateError when the raw norm is below min_norm.
IntertwinerImage apply_intertwiner(const Potential& beta, std::span<const double> psi,
                                   const Grid& grid, double min_norm = 1e-10);

struct ScatteringResult {
  double reflection;    // |R|^2
  double transmission;  // |T|^2
};

/// Stationary scattering at energy E > 0 by Numerov integration across the
/// grid, matched to discrete plane waves at both walls. The step is halved
/// once; ConvergenceError if |R|^2 moves by more than step_tol.
ScatteringResult scatter(const Potential& v, double energy, const Grid& grid,
                         double step_tol = 1e-6);

/// |R|^2 from scatter().
double reflection_coefficient(const Potential& v, double energy, const Grid& grid);

}  // namespace susypt
