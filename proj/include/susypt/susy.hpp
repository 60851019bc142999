#pragma once

#include <optional>

#include "susypt/pt.hpp"

namespace susypt {

/// Constants of the tanh-type particular superpotentials D tanh(alpha x).
struct FactorizationPair {
  double d_plus;     // -alpha lambda
  double d_minus;    // -alpha (1 - lambda)
  double eps_plus;   // -(d_plus)^2, below the whole spectrum
  double eps_minus;  // -(d_minus)^2, equal to the ground-state energy
};

FactorizationPair factorization(const PTParams& p);

enum class Branch { Plus, Minus };

/// Branch plus its deformation constant (zeta for Plus, xi for Minus).
struct SusyBranchConfig {
  Branch branch = Branch::Plus;
  double deformation = 0.0;
};

/// Factorization energy that goes with a branch.
double factorization_energy(const PTParams& p, Branch branch);

// --- bounded and unbounded integrals of cosh powers -----------------------

/// M(x) = integral_0^x cosh^(-2 lambda)(alpha y) dy. Odd, increasing, |M| < M_inf.
double m_function(const PTParams& p, double x);

/// M(+infinity) = sqrt(pi) Gamma(lambda) / (2 alpha Gamma(lambda + 1/2)).
double m_infinity(const PTParams& p);

/// L(x) = integral_0^x cosh^(2(lambda-1))(alpha y) dy. Odd, increasing,
/// unbounded. Throws OverflowError when the value is not representable.
double l_function(const PTParams& p, double x);

/// L(x) / cosh^(2(lambda-1))(alpha x); finite for every x.
double l_function_scaled(const PTParams& p, double x);

/// Hypergeometric closed forms of M and L. Only valid for non-integer
/// lambda (the L form has poles at integer lambda); kept as cross-checks
/// for the quadrature path.
double m_function_closed_form(const PTParams& p, double x);
double l_function_closed_form(const PTParams& p, double x);

/// 1 / M_inf: the plus-branch partner is regular iff |zeta| is below this.
double zeta_bound(const PTParams& p);

// --- superpotentials and partners ----------------------------------------

/// Omega^+_zeta (Plus) or Omega^-_xi (Minus).
double omega(const PTParams& p, const SusyBranchConfig& cfg, double x);

/// General Riccati solution of the branch. Throws SingularityError where
/// the deformation denominator vanishes.
double beta(const PTParams& p, const SusyBranchConfig& cfg, double x);

/// Analytic d(beta)/dx.
double beta_derivative(const PTParams& p, const SusyBranchConfig& cfg, double x);

/// Closed-form partner potential of the branch.
double partner_potential(const PTParams& p, const SusyBranchConfig& cfg, double x);

/// Normalized extra eigenstate of the plus partner at eps_plus. Throws
/// DomainError for |zeta| >= zeta_bound (not normalizable).
double missing_state(const PTParams& p, double zeta, double x);

/// Root of 1 - xi L(x) = 0. Requires xi != 0; the root always exists.
double singular_point_minus(const PTParams& p, double xi);

/// Root of 1 - zeta M(x) = 0 when |zeta| > zeta_bound, nullopt otherwise.
std::optional<double> singular_point_plus(const PTParams& p, double zeta);

/// Pole of the branch partner, if any.
std::optional<double> singular_point(const PTParams& p, const SusyBranchConfig& cfg);

// --- second order ----------------------------------------------------------

/// V - 2 d/dx[(eps+ - eps-) / (beta+_zeta - beta-_xi)].
double two_susy_potential(const PTParams& p, double zeta, double xi, double x);

/// Closed form at zeta = xi = 0: -g alpha/(2 cosh^2) + 2 alpha^2 / sinh^2.
double two_susy_particular(const PTParams& p, double x);

}  // namespace susypt

namespace susypt {

/// Converts a plus-branch deformation defined with the integral's lower
/// limit at -infinity, 1 - zeta * integral_{-inf}^x, into the lower-limit-0
/// convention used everywhere else: zeta / (1 - zeta M_inf). The regular
/// range zeta < 1/(2 M_inf) of that convention maps onto |zeta_0| < 1/M_inf.
double zeta_from_minus_infinity_origin(const PTParams& p, double zeta);

}  // namespace susypt
