#include "susypt/pt.hpp"

#include <cmath>
#include <numbers>

#include "susypt/errors.hpp"
#include "susypt/specfun.hpp"

namespace susypt {

PTParams::PTParams(double alpha, double g)
    : alpha_(alpha),
      g_(g),
      lambda_(0.5 * (1.0 + std::sqrt(1.0 + 2.0 * g / alpha))),
      depth_(0.5 * g * alpha) {}

PTParams PTParams::from_alpha_g(double alpha, double g) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError("PTParams: alpha must be positive and finite");
  if (!(g > 0.0) || !std::isfinite(g))
    throw DomainError("PTParams: g must be positive and finite");
  return PTParams(alpha, g);
}

PTParams PTParams::from_alpha_lambda(double alpha, double lambda) {
  if (!(lambda > 1.0) || !std::isfinite(lambda))
    throw DomainError("PTParams: lambda must exceed 1");
  return from_alpha_g(alpha, 2.0 * alpha * lambda * (lambda - 1.0));
}

PTParams make_params(double alpha, double g) {
  return PTParams::from_alpha_g(alpha, g);
}

double pt_potential(const PTParams& p, double x) {
  const double sech2 = std::exp(-2.0 * specfun::log_cosh(p.alpha() * x));
  return -p.depth() * sech2;
}

SpectrumReport analytic_spectrum(const PTParams& p) {
  SpectrumReport r;
  r.lambda_used = p.lambda();
  const double a2 = p.alpha() * p.alpha();
  for (int n = 0; n < p.lambda() - 1.0; ++n) {
    const double s = p.lambda() - 1.0 - n;
    r.energies.push_back(-a2 * s * s);
  }
  r.count = static_cast<int>(r.energies.size());
  return r;
}

double ground_state_norm(const PTParams& p) {
  using specfun::ln_gamma;
  const double lam = p.lambda();
  const double log_c2 = std::log(p.alpha()) + ln_gamma(lam - 0.5) -
                        0.5 * std::log(std::numbers::pi) - ln_gamma(lam - 1.0);
  return std::exp(0.5 * log_c2);
}

double ground_state(const PTParams& p, double x) {
  return ground_state_norm(p) *
         std::exp((1.0 - p.lambda()) * specfun::log_cosh(p.alpha() * x));
}

Transparency is_transparent(const PTParams& p, double tol) {
  const double r = std::round(p.lambda());
  Transparency t;
  t.k = static_cast<int>(r) - 1;
  t.transparent = std::abs(p.lambda() - r) <= tol && r >= 2.0;
  return t;
}

}  // namespace susypt
