#include "susypt/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "susypt/errors.hpp"

namespace susypt::specfun {
namespace {

constexpr double kTermTol = 1e-16;
constexpr int kMaxTerms = 100000;
constexpr double kIntegerSnap = 1e-12;
// Pfaff series is summed while w = z/(z-1) stays below this value.
constexpr double kPfaffMaxW = 0.99;
// Distance of a-b from an integer below which the logarithmic (degenerate)
// expansion replaces the connection formula. Either side loses about
// eps/gap or gap*log|z| in a narrow window around this value.
constexpr double kDegenerateGap = 1e-9;

bool is_nonpositive_integer(double x) {
  const double r = std::round(x);
  return r <= 0.0 && std::abs(x - r) < kIntegerSnap;
}

double snap(double x) {
  const double r = std::round(x);
  return std::abs(x - r) < kIntegerSnap ? r : x;
}

// Power series of 2F1 at |w| < 1. Terminates exactly when a or b is a
// non-positive integer.
double series(double a, double b, double c, double w) {
  a = snap(a);
  b = snap(b);
  double sum = 1.0;
  double term = 1.0;
  int small_run = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * w;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) < kTermTol * std::abs(sum)) {
      if (++small_run == 2) return sum;
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("gauss_2f1: series did not converge within " +
                         std::to_string(kMaxTerms) + " terms");
}

// log|Gamma(x)| with its sign; sign = 0 marks a pole (1/Gamma = 0).
double log_abs_gamma(double x, int& sign) {
  if (is_nonpositive_integer(x)) {
    sign = 0;
    return std::numeric_limits<double>::infinity();
  }
  return boost::math::lgamma(x, &sign);
}

// sign * exp(log_mag), with pole handling: a zero sign means the term vanishes.
double signed_exp(int sign, double log_mag) {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_mag);
}

// DLMF 15.8.3: expansion in u = 1/(1-z). Requires a-b not an integer.
double connection(double a, double b, double c, double z) {
  const double log1mz = std::log1p(-z);
  const double u = 1.0 / (1.0 - z);

  int s_c, s_ba, s_b, s_ca, s_ab, s_a, s_cb;
  const double lg_c = log_abs_gamma(c, s_c);
  const double lg_ba = log_abs_gamma(b - a, s_ba);
  const double lg_ab = log_abs_gamma(a - b, s_ab);
  const double lg_b = log_abs_gamma(b, s_b);
  const double lg_a = log_abs_gamma(a, s_a);
  const double lg_ca = log_abs_gamma(c - a, s_ca);
  const double lg_cb = log_abs_gamma(c - b, s_cb);

  double first = 0.0;
  if (s_b != 0 && s_ca != 0) {
    const double lm = lg_c + lg_ba - lg_b - lg_ca - a * log1mz;
    first = signed_exp(s_c * s_ba * s_b * s_ca, lm) *
            series(a, c - b, a - b + 1.0, u);
  }
  double second = 0.0;
  if (s_a != 0 && s_cb != 0) {
    const double lm = lg_c + lg_ab - lg_a - lg_cb - b * log1mz;
    second = signed_exp(s_c * s_ab * s_a * s_cb, lm) *
             series(b, c - a, b - a + 1.0, u);
  }
  return first + second;
}

// 1/Gamma(x), zero at the poles.
double rgamma(double x) {
  int sign = 0;
  const double lg = log_abs_gamma(x, sign);
  return signed_exp(sign, -lg);
}

// psi(x)/Gamma(x), continuous through the poles of both.
double psi_rgamma(double x) {
  if (is_nonpositive_integer(x)) {
    const double n = -std::round(x);
    return ((static_cast<long long>(n) % 2 == 0) ? -1.0 : 1.0) * std::tgamma(n + 1.0);
  }
  return boost::math::digamma(x) * rgamma(x);
}

// DLMF 15.8.8: b = a + m with m a non-negative integer, |z| > 1.
double degenerate(double a, int m, double c, double z) {
  const double lmz = std::log(-z);
  const double inv = 1.0 / z;
  double finite = 0.0;
  double poch = 1.0;  // (a)_k
  double zk = 1.0;    // z^-k
  for (int k = 0; k < m; ++k) {
    finite += poch * std::tgamma(m - k) / std::tgamma(k + 1.0) * rgamma(c - a - k) * zk;
    poch *= a + k;
    zk *= inv;
  }
  finite *= rgamma(a + m);

  // (-1)^k z^(-k-m) = (-1)^m (-z)^(-k-m)
  const double mz = -z;
  double tail = 0.0;
  double coef = std::pow(mz, -m) / std::tgamma(m + 1.0);  // (a+m)_k (-z)^(-k-m) / (k! (k+m)!)
  int small_run = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double x = c - a - m - k;
    const double bracket = (lmz + boost::math::digamma(1.0 + m + k) + boost::math::digamma(1.0 + k) -
                            boost::math::digamma(a + m + k)) * rgamma(x) - psi_rgamma(x);
    const double term = coef * bracket;
    tail += term;
    if (std::abs(term) < kTermTol * std::abs(tail) || term == 0.0) {
      if (++small_run == 2) break;
    } else {
      small_run = 0;
    }
    coef *= (a + m + k) / ((k + 1.0) * (k + 1.0 + m) * mz);
  }
  tail *= (m % 2 ? -1.0 : 1.0) * rgamma(a);

  int s_c = 0;
  const double lg_c = log_abs_gamma(c, s_c);
  return signed_exp(s_c, lg_c - a * lmz) * (finite + tail);
}

double large_argument(double a, double b, double c, double z) {
  const double gap = (a - b) - std::round(a - b);
  if (std::abs(gap) >= kDegenerateGap) return connection(a, b, c, z);
  if (a > b) std::swap(a, b);
  return degenerate(a, static_cast<int>(std::round(b - a)), c, z);
}

double checked(double v) {
  if (!std::isfinite(v)) throw OverflowError("gauss_2f1: result not representable");
  return v;
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("ln_gamma: argument must be positive");
  return boost::math::lgamma(x);
}

double log_cosh(double t) {
  const double at = std::abs(t);
  return at + std::log1p(std::exp(-2.0 * at)) - std::numbers::ln2;
}

double gauss_2f1(const HypergeomTriple& t, double z) {
  const double a = t.a, b = t.b, c = t.c;
  if (is_nonpositive_integer(c))
    throw DomainError("gauss_2f1: c must not be a non-positive integer");
  if (!(z <= 0.0)) throw DomainError("gauss_2f1: requires z <= 0");
  if (z == 0.0) return 1.0;
  if (z >= -0.5) return checked(series(a, b, c, z));

  const double w = z / (z - 1.0);
  const double log1mz = std::log1p(-z);
  // Pfaff: 2F1(a,b;c;z) = (1-z)^-a 2F1(a,c-b;c;w) = (1-z)^-b 2F1(c-a,b;c;w).
  // A terminating Pfaff series is a polynomial in w; near w = 1 it cancels,
  // so take the shorter one when both terminate.
  const bool cb_ends = is_nonpositive_integer(c - b);
  const bool ca_ends = is_nonpositive_integer(c - a);
  if (ca_ends && (!cb_ends || std::round(a - c) <= std::round(b - c)))
    return checked(std::exp(-b * log1mz) * series(c - a, b, c, w));
  if (cb_ends)
    return checked(std::exp(-a * log1mz) * series(a, c - b, c, w));
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
    return checked(series(a, b, c, z));
  if (w <= kPfaffMaxW)
    return checked(std::exp(-a * log1mz) * series(a, c - b, c, w));
  return checked(large_argument(a, b, c, z));
}

double gauss_2f1_asymptotic(const HypergeomTriple& t, double z) {
  const double a = t.a, b = t.b, c = t.c;
  if (!(z < 0.0)) throw DomainError("gauss_2f1_asymptotic: requires z < 0");
  const double gap = (a - b) - std::round(a - b);
  if (std::abs(gap) < kIntegerSnap)
    throw DomainError("gauss_2f1_asymptotic: a - b must not be an integer");
  const double lmz = std::log(-z);
  int s_c, s_ba, s_b, s_ca, s_ab, s_a, s_cb;
  const double lg_c = log_abs_gamma(c, s_c);
  const double lg_ba = log_abs_gamma(b - a, s_ba);
  const double lg_ab = log_abs_gamma(a - b, s_ab);
  const double lg_b = log_abs_gamma(b, s_b);
  const double lg_a = log_abs_gamma(a, s_a);
  const double lg_ca = log_abs_gamma(c - a, s_ca);
  const double lg_cb = log_abs_gamma(c - b, s_cb);
  double sum = 0.0;
  if (s_b != 0 && s_ca != 0)
    sum += signed_exp(s_c * s_ba * s_b * s_ca, lg_c + lg_ba - lg_b - lg_ca - a * lmz);
  if (s_a != 0 && s_cb != 0)
    sum += signed_exp(s_c * s_ab * s_a * s_cb, lg_c + lg_ab - lg_a - lg_cb - b * lmz);
  return sum;
}

}  // namespace susypt::specfun
