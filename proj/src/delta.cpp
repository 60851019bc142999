#include "susypt/delta.hpp"

#include <cmath>
#include <limits>

#include "susypt/errors.hpp"

namespace susypt {
namespace {

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

void require_positive(double g) {
  if (!(g > 0.0) || !std::isfinite(g))
    throw DomainError("delta well: g must be positive and finite");
}

// D = 1 - w sgn(x) (e^{g|x|}-1)/g; throws at (numerical) zero.
double denominator(double g, double w, double x) {
  const double f = w * delta_l_limit(g, x);
  const double d = 1.0 - f;
  if (std::abs(d) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(f)))
    throw SingularityError("delta SUSY denominator vanishes", x);
  return d;
}

}  // namespace

DeltaWell delta_well(double g) {
  require_positive(g);
  const double e = -0.25 * g * g;
  return {g, e, e};
}

double delta_ground_state(const DeltaWell& w, double x) {
  return std::sqrt(0.5 * w.g) * std::exp(-0.5 * w.g * std::abs(x));
}

double delta_l_limit(double g, double x) {
  return sgn(x) * std::expm1(g * std::abs(x)) / g;
}

double delta_susy_beta(double g, double omega, double x) {
  require_positive(g);
  const double base = 0.5 * g * sgn(x);
  if (omega == 0.0) return base;
  return base + omega * std::exp(g * std::abs(x)) / denominator(g, omega, x);
}

double delta_susy_potential_regular(double g, double xi, double x) {
  require_positive(g);
  if (x == 0.0)
    throw DomainError("delta_susy_potential_regular: undefined at the origin");
  if (xi == 0.0) return 0.0;
  const double d = denominator(g, xi, x);
  const double e = std::exp(g * std::abs(x));
  return 2.0 * g * xi * e * sgn(x) / d + 2.0 * xi * xi * e * e / (d * d);
}

double delta_singular_point(double g, double xi) {
  require_positive(g);
  if (xi == 0.0) throw DomainError("delta_singular_point: xi must be nonzero");
  return sgn(xi) / g * std::log1p(g / std::abs(xi));
}

}  // namespace susypt
