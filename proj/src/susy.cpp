#include "susypt/susy.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "quadrature.hpp"
#include "susypt/errors.hpp"
#include "susypt/specfun.hpp"

namespace susypt {
namespace {

using specfun::log_cosh;

constexpr double kEps = std::numeric_limits<double>::epsilon();

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

double sech2(double t) { return std::exp(-2.0 * log_cosh(t)); }

// Integral of cosh^(-2 lambda)(alpha y) over [|x|, infinity), split as
// scale * rest with scale = cosh^(-2 lambda)(alpha |x|) so that the
// quadrature never sees underflowing values.
double m_tail(const PTParams& p, double ax) {
  const double a = p.alpha(), lam = p.lambda();
  const double lc0 = log_cosh(a * ax);
  const double span = 40.0 / (lam * a);
  const double rest = detail::integrate(
      [&](double y) { return std::exp(-2.0 * lam * (log_cosh(a * y) - lc0)); },
      ax, ax + span);
  return std::exp(-2.0 * lam * lc0) * rest;
}

// M(x) together with M_inf - |M(x)|, the latter computed directly for
// large |x| where the difference would otherwise lose digits.
struct MParts {
  double value;
  double complement;
};

MParts m_parts(const PTParams& p, double x) {
  const double minf = m_infinity(p);
  const double ax = std::abs(x);
  if (p.alpha() * ax <= 2.0) {
    const double a = p.alpha(), lam = p.lambda();
    const double v = detail::integrate(
        [&](double y) { return std::exp(-2.0 * lam * log_cosh(a * y)); }, 0.0, ax);
    return {sgn(x) * v, minf - v};
  }
  const double tail = m_tail(p, ax);
  return {sgn(x) * (minf - tail), tail};
}

// 1 - zeta M(x), evaluated from the complement when that is more accurate.
double plus_denominator(const PTParams& p, double zeta, double x, double* scale) {
  const MParts m = m_parts(p, x);
  *scale = 1.0 + std::abs(zeta * m.value);
  if (std::abs(x) * p.alpha() <= 2.0) return 1.0 - zeta * m.value;
  // |M| = minf - tail
  const double s = sgn(x) * zeta;
  return (1.0 - s * m_infinity(p)) + s * m.complement;
}

double minus_exponent(const PTParams& p) { return 2.0 * (p.lambda() - 1.0); }

// cosh^(-q)(alpha x) - xi L_scaled(x): the Omega^- denominator divided by
// cosh^q, so it stays finite where both pieces overflow.
double minus_scaled_denominator(const PTParams& p, double xi, double x, double* scale) {
  const double inv_c = std::exp(-minus_exponent(p) * log_cosh(p.alpha() * x));
  const double ls = l_function_scaled(p, x);
  *scale = inv_c + std::abs(xi * ls);
  return inv_c - xi * ls;
}

[[noreturn]] void throw_singular(double x) {
  throw SingularityError("superpotential denominator vanishes", x);
}

double omega_plus(const PTParams& p, double zeta, double x) {
  const double num = std::exp(-2.0 * p.lambda() * log_cosh(p.alpha() * x));
  if (zeta == 0.0) return num;
  double scale = 1.0;
  const double den = plus_denominator(p, zeta, x, &scale);
  if (std::abs(den) <= 4.0 * kEps * scale) throw_singular(x);
  return num / den;
}

double omega_minus(const PTParams& p, double xi, double x) {
  if (xi == 0.0) {
    const double v = std::exp(minus_exponent(p) * log_cosh(p.alpha() * x));
    if (!std::isfinite(v)) throw OverflowError("omega: cosh power overflows");
    return v;
  }
  double scale = 1.0;
  const double den = minus_scaled_denominator(p, xi, x, &scale);
  if (std::abs(den) <= 4.0 * kEps * scale) throw_singular(x);
  return 1.0 / den;
}

double bisect(auto&& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Root of the sign function f on the half-line selected by dir, found by
// doubling the bracket from 1/alpha until f changes sign at the far end.
double half_line_root(const PTParams& p, double dir, auto&& f) {
  double far = 1.0 / p.alpha();
  const bool f0 = f(0.0) > 0.0;
  for (int i = 0; (f(dir * far) > 0.0) == f0; ++i) {
    if (i == 1000) throw ConvergenceError("singular point: no sign change found");
    far *= 2.0;
  }
  return dir > 0 ? bisect(f, 0.0, far) : bisect(f, -far, 0.0);
}

}  // namespace

FactorizationPair factorization(const PTParams& p) {
  FactorizationPair f;
  f.d_plus = -p.alpha() * p.lambda();
  f.d_minus = -p.alpha() * (1.0 - p.lambda());
  f.eps_plus = -f.d_plus * f.d_plus;
  f.eps_minus = -f.d_minus * f.d_minus;
  return f;
}

double factorization_energy(const PTParams& p, Branch branch) {
  const FactorizationPair f = factorization(p);
  return branch == Branch::Plus ? f.eps_plus : f.eps_minus;
}

double m_infinity(const PTParams& p) {
  using specfun::ln_gamma;
  const double lam = p.lambda();
  return 0.5 * std::sqrt(std::numbers::pi) / p.alpha() *
         std::exp(ln_gamma(lam) - ln_gamma(lam + 0.5));
}

double m_function(const PTParams& p, double x) { return m_parts(p, x).value; }

double l_function_scaled(const PTParams& p, double x) {
  const double a = p.alpha(), q = minus_exponent(p);
  const double ax = std::abs(x);
  const double lc0 = log_cosh(a * ax);
  const double v = detail::integrate(
      [&](double y) { return std::exp(q * (log_cosh(a * y) - lc0)); }, 0.0, ax);
  return sgn(x) * v;
}

double l_function(const PTParams& p, double x) {
  const double ls = l_function_scaled(p, x);
  if (ls == 0.0) return 0.0;
  const double log_mag =
      minus_exponent(p) * log_cosh(p.alpha() * x) + std::log(std::abs(ls));
  if (log_mag > std::log(std::numeric_limits<double>::max()))
    throw OverflowError("l_function: value not representable");
  return sgn(x) * std::exp(log_mag);
}

double m_function_closed_form(const PTParams& p, double x) {
  const double a = p.alpha(), lam = p.lambda();
  const specfun::HypergeomTriple t{lam, 2.0 * lam, 1.0 + lam};
  const double f = specfun::gauss_2f1(t, -std::exp(2.0 * a * x));
  const double pre = std::exp(2.0 * lam * std::numbers::ln2 + 2.0 * a * lam * x) /
                     (2.0 * a * lam);
  return pre * f - m_infinity(p);
}

double l_function_closed_form(const PTParams& p, double x) {
  const double a = p.alpha(), lam = p.lambda();
  const double q = lam - 1.0;
  const specfun::HypergeomTriple t{1.0 - lam, 2.0 - 2.0 * lam, 2.0 - lam};
  const double f = specfun::gauss_2f1(t, -std::exp(2.0 * a * x));
  const double pre = std::exp(-2.0 * a * q * x - 2.0 * q * std::numbers::ln2) /
                     (2.0 * a * q);
  const double c = std::sqrt(std::numbers::pi) * std::tgamma(2.0 - lam) /
                   (2.0 * a * q * std::tgamma(1.5 - lam));
  return -pre * f + c;
}

double zeta_bound(const PTParams& p) { return 1.0 / m_infinity(p); }

double omega(const PTParams& p, const SusyBranchConfig& cfg, double x) {
  return cfg.branch == Branch::Plus ? omega_plus(p, cfg.deformation, x)
                                    : omega_minus(p, cfg.deformation, x);
}

double beta(const PTParams& p, const SusyBranchConfig& cfg, double x) {
  const double a = p.alpha(), lam = p.lambda();
  const double th = std::tanh(a * x);
  if (cfg.branch == Branch::Plus) {
    const double tail = cfg.deformation == 0.0
                            ? 0.0
                            : cfg.deformation * omega_plus(p, cfg.deformation, x);
    return -a * lam * th + tail;
  }
  const double tail = cfg.deformation == 0.0
                          ? 0.0
                          : cfg.deformation * omega_minus(p, cfg.deformation, x);
  return a * (lam - 1.0) * th + tail;
}

double beta_derivative(const PTParams& p, const SusyBranchConfig& cfg, double x) {
  const double a = p.alpha(), lam = p.lambda();
  const double th = std::tanh(a * x);
  const double s2 = sech2(a * x);
  const double d = cfg.deformation;
  if (cfg.branch == Branch::Plus) {
    double r = -a * a * lam * s2;
    if (d != 0.0) {
      const double om = omega_plus(p, d, x);
      r += d * (-2.0 * lam * a * th * om + d * om * om);
    }
    return r;
  }
  double r = a * a * (lam - 1.0) * s2;
  if (d != 0.0) {
    const double om = omega_minus(p, d, x);
    r += d * (2.0 * (lam - 1.0) * a * th * om + d * om * om);
  }
  return r;
}

double partner_potential(const PTParams& p, const SusyBranchConfig& cfg, double x) {
  const double a = p.alpha(), g = p.g(), lam = p.lambda();
  const double root = std::sqrt(1.0 + 2.0 * g / a);
  const double th = std::tanh(a * x);
  const double s2 = sech2(a * x);
  const double d = cfg.deformation;
  if (cfg.branch == Branch::Plus) {
    double v = -a * a * (1.0 + g / (2.0 * a) + root) * s2;
    if (d != 0.0) {
      const double zo = d * omega_plus(p, d, x);
      v += -4.0 * lam * a * zo * th + 2.0 * zo * zo;
    }
    return v;
  }
  double v = -a * a * (1.0 + g / (2.0 * a) - root) * s2;
  if (d != 0.0) {
    const double xo = d * omega_minus(p, d, x);
    v += 4.0 * a * (lam - 1.0) * xo * th + 2.0 * xo * xo;
  }
  return v;
}

double missing_state(const PTParams& p, double zeta, double x) {
  const double minf = m_infinity(p);
  if (!(std::abs(zeta) < zeta_bound(p)))
    throw DomainError("missing_state: |zeta| must be below zeta_bound");
  const double norm = std::sqrt((1.0 - zeta * zeta * minf * minf) / (2.0 * minf));
  const double ch = std::exp(p.lambda() * log_cosh(p.alpha() * x));
  // cosh^lambda * Omega^+ = cosh^-lambda / (1 - zeta M)
  return norm * omega_plus(p, zeta, x) * ch;
}

double singular_point_minus(const PTParams& p, double xi) {
  if (xi == 0.0) throw DomainError("singular_point_minus: xi must be nonzero");
  double unused = 0.0;
  auto f = [&](double x) { return minus_scaled_denominator(p, xi, x, &unused); };
  return half_line_root(p, sgn(xi), f);
}

std::optional<double> singular_point_plus(const PTParams& p, double zeta) {
  if (!(std::abs(zeta) > zeta_bound(p))) return std::nullopt;
  double unused = 0.0;
  auto f = [&](double x) { return plus_denominator(p, zeta, x, &unused); };
  return half_line_root(p, sgn(zeta), f);
}

std::optional<double> singular_point(const PTParams& p, const SusyBranchConfig& cfg) {
  if (cfg.deformation == 0.0) return std::nullopt;
  if (cfg.branch == Branch::Plus) return singular_point_plus(p, cfg.deformation);
  return singular_point_minus(p, cfg.deformation);
}

double two_susy_potential(const PTParams& p, double zeta, double xi, double x) {
  const SusyBranchConfig plus{Branch::Plus, zeta};
  const SusyBranchConfig minus{Branch::Minus, xi};
  const double bp = beta(p, plus, x);
  const double bm = beta(p, minus, x);
  const double diff = bp - bm;
  if (std::abs(diff) <= 4.0 * kEps * (std::abs(bp) + std::abs(bm)))
    throw SingularityError("two_susy_potential: superpotentials coincide", x);
  const FactorizationPair f = factorization(p);
  const double d_eps = f.eps_plus - f.eps_minus;
  const double d_diff = beta_derivative(p, plus, x) - beta_derivative(p, minus, x);
  // d/dx [d_eps / diff] = -d_eps diff' / diff^2
  return pt_potential(p, x) + 2.0 * d_eps * d_diff / (diff * diff);
}

double two_susy_particular(const PTParams& p, double x) {
  const double a = p.alpha();
  const double sh = std::sinh(a * x);
  return pt_potential(p, x) + 2.0 * a * a / (sh * sh);
}

}  // namespace susypt

namespace susypt {

double zeta_from_minus_infinity_origin(const PTParams& p, double zeta) {
  const double den = 1.0 - zeta * m_infinity(p);
  if (den == 0.0) throw DomainError("zeta conversion: 1 - zeta M_inf vanishes");
  return zeta / den;
}

}  // namespace susypt
