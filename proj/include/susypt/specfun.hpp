#pragma once

// Real-argument special functions used by the closed forms.

namespace susypt::specfun {

/// Parameters (a, b; c) of the Gauss hypergeometric function 2F1.
struct HypergeomTriple {
  double a;
  double b;
  double c;

  /// (1/2, lambda - 1/2; 1/2): the ground-state triple of the well.
  static HypergeomTriple ground_state(double lambda) {
    return {0.5, lambda - 0.5, 0.5};
  }
};

/// Natural log of Gamma(x) for x > 0. Throws DomainError otherwise.
double ln_gamma(double x);

/// log(cosh(t)) without overflow for large |t|.
double log_cosh(double t);

/// 2F1(a, b; c; z) for real z <= 0.
///
/// Uses the direct series near the origin, the Pfaff transformation
/// z -> z/(z-1) for moderate |z| (and for every |z| when one of the
/// Pfaff series terminates), and the 1/(1-z) connection formula for
/// large |z|. Powers of (1-z) are applied in log space, so arguments
/// down to z ~ -e^60 are fine whenever the value itself is finite.
///
/// Throws DomainError for z > 0 or c a non-positive integer, and
/// OverflowError when the result is not representable.
double gauss_2f1(const HypergeomTriple& t, double z);

/// Leading two-term behaviour of 2F1(a, b; c; z) as z -> -infinity.
/// Requires a - b not an integer.
double gauss_2f1_asymptotic(const HypergeomTriple& t, double z);

}  // namespace susypt::specfun
