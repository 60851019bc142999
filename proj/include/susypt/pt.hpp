#pragma once

#include <vector>

namespace susypt {

/// Parameters of the modified Poschl-Teller well V(x) = -depth / cosh^2(alpha x).
///
/// Two of the four numbers are independent. lambda is always derived from
/// (alpha, g) through lambda = (1 + sqrt(1 + 2g/alpha)) / 2, and
/// depth = g alpha / 2 = alpha^2 lambda (lambda - 1).
class PTParams {
 public:
  /// Throws DomainError unless alpha > 0 and g > 0.
  static PTParams from_alpha_g(double alpha, double g);
  /// Computes g = 2 alpha lambda (lambda - 1); requires lambda > 1.
  static PTParams from_alpha_lambda(double alpha, double lambda);

  double alpha() const noexcept { return alpha_; }
  double g() const noexcept { return g_; }
  double lambda() const noexcept { return lambda_; }
  double depth() const noexcept { return depth_; }

 private:
  PTParams(double alpha, double g);

  double alpha_;
  double g_;
  double lambda_;
  double depth_;
};

/// Same as PTParams::from_alpha_g.
PTParams make_params(double alpha, double g);

/// -g alpha / (2 cosh^2(alpha x)).
double pt_potential(const PTParams& p, double x);

struct SpectrumReport {
  std::vector<double> energies;  // ascending, E_0 first
  int count = 0;
  double lambda_used = 0.0;
};

/// E_n = -alpha^2 (lambda - 1 - n)^2 for 0 <= n < lambda - 1.
SpectrumReport analytic_spectrum(const PTParams& p);

/// Normalization constant C_0 of the ground state.
double ground_state_norm(const PTParams& p);

/// psi_0(x) = C_0 cosh(alpha x)^(1 - lambda).
double ground_state(const PTParams& p, double x);

struct Transparency {
  bool transparent = false;
  int k = 0;  // lambda ~ k + 1
};

/// Reflectionless iff lambda is within tol of an integer k + 1 >= 2.
Transparency is_transparent(const PTParams& p, double tol = 1e-9);

}  // namespace susypt
