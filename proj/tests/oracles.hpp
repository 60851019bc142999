#pragma once

// Independent reference computations used only by the tests.

#include <cmath>
#include <functional>

namespace oracle {

// 2F1 by plain power series in long double, for |z| well inside the disc.
inline double hyp2f1_series(double a, double b, double c, double z) {
  long double term = 1.0L, sum = 1.0L;
  for (int n = 0; n < 400000; ++n) {
    term *= (static_cast<long double>(a) + n) * (static_cast<long double>(b) + n) /
            ((static_cast<long double>(c) + n) * (n + 1.0L)) * z;
    sum += term;
    if (std::abs(term) < 1e-22L * std::abs(sum)) break;
  }
  return static_cast<double>(sum);
}

namespace detail {
inline long double simpson_step(const std::function<long double(long double)>& f,
                                long double a, long double b, long double fa, long double fm,
                                long double fb, long double whole, long double tol, int depth) {
  const long double m = 0.5L * (a + b);
  const long double lm = 0.5L * (a + m), rm = 0.5L * (m + b);
  const long double flm = f(lm), frm = f(rm);
  const long double left = (m - a) / 6.0L * (fa + 4.0L * flm + fm);
  const long double right = (b - m) / 6.0L * (fm + 4.0L * frm + fb);
  const long double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0L * tol) return left + right + diff / 15.0L;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5L * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5L * tol, depth - 1);
}
}  // namespace detail

// Adaptive Simpson with Richardson correction.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-13) {
  auto F = [&](long double x) { return static_cast<long double>(f(static_cast<double>(x))); };
  const long double fa = F(a), fb = F(b), fm = F(0.5L * (a + b));
  const long double whole = (static_cast<long double>(b) - a) / 6.0L * (fa + 4.0L * fm + fb);
  return static_cast<double>(detail::simpson_step(F, a, b, fa, fm, fb, whole, tol, 50));
}

// Simpson over [a, b] split into n equal panels, each adaptive.
inline double simpson_panels(const std::function<double(double)>& f, double a, double b, int n,
                             double tol = 1e-13) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    s += simpson(f, a + (b - a) * i / n, a + (b - a) * (i + 1) / n, tol / n);
  return s;
}

inline double fd5(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

// Root of f on [lo, hi], f(lo) and f(hi) of opposite sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++i) {
    const double m = 0.5 * (lo + hi), fm = f(m);
    if ((fm > 0) == (flo > 0)) {
      lo = m;
      flo = fm;
    } else {
      hi = m;
    }
  }
  return 0.5 * (lo + hi);
}

// Reflection probability of the well -alpha^2 lambda (lambda - 1) / cosh^2 at k^2 = E.
inline double pt_reflection(double alpha, double lambda, double energy) {
  const double k = std::sqrt(energy);
  const double c = std::cos(M_PI * (lambda - 0.5));
  const double s = std::sinh(M_PI * k / alpha);
  return c * c / (s * s + c * c);
}

}  // namespace oracle
