#pragma once

// Internal: globally adaptive Gauss-Kronrod (7/15) quadrature with the
// QUADPACK error estimate, including its roundoff floor.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace susypt::detail {

inline constexpr double kQuadRelTol = 1e-14;
inline constexpr int kQuadMaxIntervals = 500;

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(F& f, double a, double b) {
  static constexpr std::array<double, 8> xgk = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.0};
  static constexpr std::array<double, 8> wgk = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static constexpr std::array<double, 4> wg = {
      0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
  constexpr double eps = std::numeric_limits<double>::epsilon();

  const double c = 0.5 * (a + b), hl = 0.5 * (b - a);
  std::array<double, 15> fv;
  fv[7] = f(c);
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(c - hl * xgk[j]);
    fv[14 - j] = f(c + hl * xgk[j]);
  }
  double rk = wgk[7] * fv[7], rg = wg[3] * fv[7], rabs = std::abs(rk);
  for (int j = 0; j < 7; ++j) {
    const double s = fv[j] + fv[14 - j];
    rk += wgk[j] * s;
    rabs += wgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    if (j % 2 == 1) rg += wg[j / 2] * s;
  }
  const double mean = 0.5 * rk;
  double rasc = wgk[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j)
    rasc += wgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  const double ah = std::abs(hl);
  rasc *= ah;
  rabs *= ah;
  double err = std::abs((rk - rg) * hl);
  if (rasc != 0.0 && err != 0.0) err = rasc * std::min(1.0, std::pow(200.0 * err / rasc, 1.5));
  if (rabs > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(50.0 * eps * rabs, err);
  return {a, b, rk * hl, err};
}

/// Integral of f over [a, b] to relative accuracy kQuadRelTol (or the
/// roundoff limit of the rule, whichever is larger).
template <class F>
double integrate(F&& f, double a, double b) {
  if (a == b) return 0.0;
  std::priority_queue<Panel> panels;
  Panel first = gk15(f, a, b);
  double total = first.value, err = first.error;
  panels.push(first);
  for (int k = 1; k < kQuadMaxIntervals; ++k) {
    if (err <= kQuadRelTol * std::abs(total)) break;
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) break;
    panels.pop();
    const Panel l = gk15(f, worst.a, mid);
    const Panel r = gk15(f, mid, worst.b);
    total += l.value + r.value - worst.value;
    err += l.error + r.error - worst.error;
    // Splitting no longer helps once both halves sit at the roundoff floor.
    if (l.error + r.error >= worst.error && worst.error <= 1e3 * 50.0 *
        std::numeric_limits<double>::epsilon() * std::abs(worst.value)) {
      panels.push(l);
      panels.push(r);
      break;
    }
    panels.push(l);
    panels.push(r);
  }
  // Re-sum to drop the accumulated update error.
  double sum = 0.0;
  while (!panels.empty()) {
    sum += panels.top().value;
    panels.pop();
  }
  return sum;
}

}  // namespace susypt::detail
