#include "susypt/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "susypt/curves.hpp"
#include "susypt/errors.hpp"
#include "susypt/susy.hpp"

namespace susypt {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

CheckResult check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, std::move(detail)};
}

// Exceptions inside a check count as a failure of that check only.
CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return check(name, false, std::string("exception: ") + e.what());
  }
}

struct Config {
  PTParams p;
  SusyBranchConfig cfg;
};

std::vector<Config> random_configs(std::mt19937_64& rng, Branch branch, int count) {
  std::uniform_real_distribution<double> alpha(0.2, 3.0), lambda(1.2, 5.0),
      u(-0.95, 0.95), mag(0.01, 0.5);
  std::vector<Config> out;
  for (int i = 0; i < count; ++i) {
    const PTParams p = PTParams::from_alpha_lambda(alpha(rng), lambda(rng));
    double d = 0.0;
    if (branch == Branch::Plus) {
      d = u(rng) * zeta_bound(p);
    } else {
      d = (u(rng) < 0.0 ? -1.0 : 1.0) * mag(rng) * p.alpha();
    }
    out.push_back({p, {branch, d}});
  }
  return out;
}

// Sample points on [-8/alpha, 8/alpha], keeping 2/alpha away from any pole.
std::vector<double> sample_points(const Config& c) {
  const double a = c.p.alpha();
  const auto xs = singular_point(c.p, c.cfg);
  std::vector<double> out;
  for (int i = 0; i <= 160; ++i) {
    const double x = (-8.0 + 0.1 * i) / a;
    if (xs && std::abs(x - *xs) < 2.0 / a) continue;
    out.push_back(x);
  }
  return out;
}

double fd5(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

CheckResult riccati(const std::vector<Config>& cs, const std::string& name, double tol) {
  double worst = 0.0;
  for (const Config& c : cs) {
    const double eps = factorization_energy(c.p, c.cfg.branch);
    const double h = 2e-3 / c.p.alpha();
    auto b = [&](double x) { return beta(c.p, c.cfg, x); };
    for (double x : sample_points(c)) {
      const double bx = b(x);
      const double r = bx * bx - fd5(b, x, h) - (pt_potential(c.p, x) - eps);
      worst = std::max(worst, std::abs(r) / std::max(1.0, std::abs(eps)));
    }
  }
  return check(name, worst <= tol, "max scaled residual " + fmt(worst));
}

CheckResult consistency(const std::vector<Config>& cs, const std::string& name) {
  double worst = 0.0;
  for (const Config& c : cs) {
    for (double x : sample_points(c)) {
      const double v = partner_potential(c.p, c.cfg, x);
      const double w = pt_potential(c.p, x) + 2.0 * beta_derivative(c.p, c.cfg, x);
      worst = std::max(worst, std::abs(v - w) / std::max(1.0, std::abs(v)));
    }
  }
  return check(name, worst <= 1e-10, "max difference " + fmt(worst));
}

double sech2(double t) {
  const double s = 1.0 / std::cosh(t);
  return s * s;
}

CheckResult shape_invariance(std::mt19937_64& rng, int count) {
  std::uniform_real_distribution<double> alpha(0.2, 3.0), lambda(1.2, 5.0);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const PTParams p = PTParams::from_alpha_lambda(alpha(rng), lambda(rng));
    const double a = p.alpha(), l = p.lambda();
    for (int j = 0; j <= 160; ++j) {
      const double x = (-8.0 + 0.1 * j) / a;
      const double up = -a * a * l * (l + 1.0) * sech2(a * x);
      const double down = -a * a * (l - 1.0) * (l - 2.0) * sech2(a * x);
      worst = std::max({worst, std::abs(partner_potential(p, {Branch::Plus, 0.0}, x) - up),
                        std::abs(partner_potential(p, {Branch::Minus, 0.0}, x) - down)});
    }
  }
  double flat = 0.0;
  for (double a : {0.1, 1.0, 2.5}) {
    const PTParams p = PTParams::from_alpha_g(a, 4.0 * a);
    for (int j = 0; j <= 160; ++j)
      flat = std::max(flat,
                      std::abs(partner_potential(p, {Branch::Minus, 0.0}, (-8.0 + 0.1 * j) / a)));
  }
  return check("shape invariance", worst <= 1e-12 && flat <= 1e-12,
               "max difference " + fmt(worst) + ", |V-| at alpha = g/4: " + fmt(flat));
}

CheckResult m_and_l_properties() {
  bool ok = true;
  std::string detail;
  for (const auto& [a, l] : {std::pair{0.1, 3.0}, {1.0, 1.5}, {2.0, 2.5616}, {0.5, 4.2}}) {
    const PTParams p = PTParams::from_alpha_lambda(a, l);
    const double minf = m_infinity(p);
    double prev_m = -minf, prev_l = -INFINITY, odd = 0.0;
    for (int j = 0; j <= 400; ++j) {
      const double x = (-20.0 + 0.1 * j) / a;
      const double m = m_function(p, x);
      const double lv = l_function(p, x);
      odd = std::max({odd, std::abs(m + m_function(p, -x)) / minf,
                      std::abs(lv + l_function(p, -x)) / std::max(1.0, std::abs(lv))});
      const bool strict = std::abs(a * x) < 3.0;  // beyond, increments drop below roundoff
      if (std::abs(m) > minf || m < prev_m || (strict && m <= prev_m)) ok = false;
      if (lv <= prev_l || (x > 0.0 && lv < x)) ok = false;
      prev_m = m;
      prev_l = lv;
    }
    if (odd > 1e-13) ok = false;
    if (l > 1.4 && !(l_function(p, 40.0 / a) > 1e6)) ok = false;
    detail += "(" + fmt(a) + "," + fmt(l) + ") odd err " + fmt(odd) + "; ";
  }
  return check("M and L: odd, increasing, |M| <= M_inf, L unbounded", ok, detail);
}

CheckResult zeta_bound_criterion() {
  bool ok = true;
  double worst_margin = INFINITY;
  for (const auto& [a, l] : {std::pair{0.1, 3.0}, {1.0, 1.5}, {2.0, 2.5616}}) {
    const PTParams p = PTParams::from_alpha_lambda(a, l);
    const double b = zeta_bound(p);
    for (double s : {-1.0, 1.0}) {
      double inside_min = INFINITY, outside_min = INFINITY;
      for (int j = 0; j <= 800; ++j) {
        const double x = (-40.0 + 0.1 * j) / a;
        const double m = m_function(p, x);
        inside_min = std::min(inside_min, 1.0 - 0.99 * s * b * m);
        outside_min = std::min(outside_min, 1.0 - 1.01 * s * b * m);
      }
      worst_margin = std::min(worst_margin, inside_min);
      if (inside_min < 0.01 * (1.0 - 1e-9)) ok = false;
      if (!(outside_min < 0.0) || !singular_point_plus(p, 1.01 * s * b)) ok = false;
      if (singular_point_plus(p, 0.99 * s * b)) ok = false;
    }
  }
  return check("zeta bound separates regular and singular partners", ok,
               "min of 1 - zeta M at 0.99 bound " + fmt(worst_margin));
}

CheckResult delta_limit_monotone() {
  const double alphas[] = {10.0, 50.0, 200.0};
  bool ok = true;
  std::string detail;
  for (double xi : {0.0, -0.05}) {
    const csv::Table t = delta_limit_sweep(1.0, xi, alphas);
    const auto dv = t.column("potential_sup_diff");
    for (std::size_t i = 1; i < dv.size(); ++i)
      if (!(dv[i] < dv[i - 1])) ok = false;
    detail += "xi=" + fmt(xi) + ": " + fmt(dv[0]) + " > " + fmt(dv[1]) + " > " + fmt(dv[2]) + "; ";
  }
  return check("minus partner approaches the delta partner monotonically", ok, detail);
}

CheckResult plus_divergence() {
  double prev = 0.0;
  bool ok = true;
  std::string detail;
  for (double a : {1.0, 10.0, 100.0, 1000.0}) {
    const PTParams p = PTParams::from_alpha_g(a, 1.0);
    const double v = std::abs(partner_potential(p, {Branch::Plus, 0.0}, 0.0));
    if (!(v > prev)) ok = false;
    prev = v;
    detail += fmt(v) + " ";
  }
  return check("plus partner depth grows without bound in alpha", ok, "|V+(0)|: " + detail);
}

SolverOptions solver_options(const PTParams& p, double tol) {
  SolverOptions o;
  o.tolerance = tol;
  o.marginal_energy = marginal_threshold(p.alpha());
  return o;
}

std::vector<double> strict_levels(const NumericSpectrum& s) {
  std::vector<double> out;
  for (std::size_t i = 0; i < s.energies.size(); ++i)
    if (!s.marginal[i]) out.push_back(s.energies[i]);
  return out;
}

// Max scaled difference of two level lists, or infinity if counts differ.
double level_gap(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(b[i])));
  return worst;
}

std::vector<double> non_marginal(const PTParams& p, std::vector<double> e) {
  const double t = marginal_threshold(p.alpha());
  std::erase_if(e, [t](double v) { return std::abs(v) < t; });
  return e;
}

CheckResult oracle_vs_formula(std::mt19937_64& rng, const VerifyOptions& opts) {
  std::uniform_real_distribution<double> alpha(0.3, 3.0), lambda(1.3, 5.99);
  double worst = 0.0;
  int failures = 0;
  for (int i = 0; i < opts.random_configs; ++i) {
    const PTParams p = PTParams::from_alpha_lambda(alpha(rng), lambda(rng));
    const auto ana = non_marginal(p, analytic_spectrum(p).energies);
    const Grid g = oracle_grid(p.alpha(), p.depth(), ana.back());
    const auto num = bound_spectrum([&](double x) { return pt_potential(p, x); }, g,
                                    solver_options(p, opts.eigen_tolerance));
    const double gap = level_gap(strict_levels(num), ana);
    worst = std::max(worst, gap);
    if (!(gap <= opts.eigen_tolerance)) ++failures;
  }
  return check("analytic spectrum matches the oracle", failures == 0,
               std::to_string(opts.random_configs) + " configs, max scaled error " + fmt(worst));
}

CheckResult iso_plus(const VerifyOptions& opts) {
  const PTParams p = PTParams::from_alpha_lambda(0.1, 3.0);
  std::vector<double> expect = analytic_spectrum(p).energies;
  expect.insert(expect.begin(), factorization(p).eps_plus);
  const double b = zeta_bound(p);
  double worst = 0.0;
  for (double z : {-0.9 * b, -0.5 * b, 0.0, 0.0937, 0.9 * b}) {
    const SusyBranchConfig cfg{Branch::Plus, z};
    const double vmax = -expect.front();
    const Grid g = oracle_grid(p.alpha(), vmax, expect.back());
    const auto num = bound_spectrum([&](double x) { return partner_potential(p, cfg, x); }, g,
                                    solver_options(p, opts.iso_tolerance));
    worst = std::max(worst, level_gap(strict_levels(num), expect));
  }
  return check("plus partner adds the level eps+", worst <= opts.iso_tolerance,
               "5 zeta values, max error " + fmt(worst));
}

CheckResult iso_minus(const VerifyOptions& opts) {
  double worst = 0.0;
  for (const auto& [a, g] : {std::pair{0.1, 1.2}, {1.0, 8.0}, {6.0, 8.0}, {0.5, 9.0}}) {
    const PTParams p = PTParams::from_alpha_g(a, g);
    auto expect = non_marginal(p, analytic_spectrum(p).energies);
    expect.erase(expect.begin());
    const Grid grid = oracle_grid(a, p.depth(), expect.empty() ? -a * a : expect.back());
    const SusyBranchConfig cfg{Branch::Minus, 0.0};
    const auto num = bound_spectrum([&](double x) { return partner_potential(p, cfg, x); },
                                    grid, solver_options(p, opts.iso_tolerance));
    worst = std::max(worst, level_gap(strict_levels(num), expect));
  }
  return check("minus partner deletes the ground level", worst <= opts.iso_tolerance,
               "max error " + fmt(worst));
}

CheckResult missing_state_overlap() {
  const PTParams p = PTParams::from_alpha_lambda(0.1, 3.0);
  double worst = 0.0;
  for (double z : {-0.1, 0.0, 0.0937, 0.15}) {
    const SusyBranchConfig cfg{Branch::Plus, z};
    const Grid g = oracle_grid(p.alpha(), -factorization(p).eps_plus, -0.01);
    const auto num = bound_spectrum([&](double x) { return partner_potential(p, cfg, x); }, g,
                                    solver_options(p, 1e-5));
    const auto phi = sample([&](double x) { return missing_state(p, z, x); }, g);
    worst = std::max(worst, 1.0 - std::abs(grid_inner(phi, num.states.front(), g)));
  }
  return check("missing state is the partner ground state", worst <= 1e-6,
               "max 1 - overlap " + fmt(worst));
}

CheckResult unitarity() {
  double worst = 0.0, r_int = 0.0;
  const PTParams p3 = PTParams::from_alpha_g(0.1, 1.2);
  const Grid g3 = Grid::symmetric(25.0 / 0.1, 0.05);
  for (double e : {0.01, 0.05, 0.2}) {
    const auto s = scatter([&](double x) { return pt_potential(p3, x); }, e, g3);
    worst = std::max(worst, std::abs(s.reflection + s.transmission - 1.0));
    r_int = std::max(r_int, s.reflection);
  }
  const PTParams p = PTParams::from_alpha_g(1.0, 8.0);
  const auto s = scatter([&](double x) { return pt_potential(p, x); }, 0.5,
                         Grid::symmetric(40.0, 0.02));
  worst = std::max(worst, std::abs(s.reflection + s.transmission - 1.0));
  return check("scattering is unitary", worst <= 1e-6 && r_int < 1e-4,
               "max ||R|^2 + |T|^2 - 1| " + fmt(worst) + ", max |R|^2 at lambda=3 " +
                   fmt(r_int) + ", |R|^2 at lambda=2.56 " + fmt(s.reflection));
}

}  // namespace

Grid oracle_grid(double alpha, double depth, double e_shallowest) {
  const double h = 0.05 / std::max(alpha, std::sqrt(std::abs(depth)));
  return Grid::symmetric(box_half_width(alpha, e_shallowest), h);
}

std::vector<CheckResult> verify_susy_core(const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  const auto plus = random_configs(rng, Branch::Plus, opts.random_configs);
  const auto minus = random_configs(rng, Branch::Minus, opts.random_configs);
  std::vector<CheckResult> out;
  const double tol = opts.riccati_tolerance;
  out.push_back(guarded("Riccati residual, plus",
                        [&] { return riccati(plus, "Riccati residual, plus", tol); }));
  out.push_back(guarded("Riccati residual, minus",
                        [&] { return riccati(minus, "Riccati residual, minus", tol); }));
  out.push_back(guarded("partner = V + 2 beta', plus",
                        [&] { return consistency(plus, "partner = V + 2 beta', plus"); }));
  out.push_back(guarded("partner = V + 2 beta', minus",
                        [&] { return consistency(minus, "partner = V + 2 beta', minus"); }));
  out.push_back(guarded("shape invariance", [&] { return shape_invariance(rng, 10); }));
  out.push_back(guarded("M and L properties", m_and_l_properties));
  out.push_back(guarded("zeta bound", zeta_bound_criterion));
  out.push_back(guarded("delta limit", delta_limit_monotone));
  out.push_back(guarded("plus divergence", plus_divergence));
  return out;
}

std::vector<CheckResult> verify_oracle(const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed + 1);
  std::vector<CheckResult> out;
  out.push_back(guarded("free particle", [] {
    const auto s = bound_spectrum([](double) { return 0.0; }, Grid(-10, 10, 201));
    return check("free particle has no bound states", s.energies.empty(),
                 std::to_string(s.energies.size()) + " levels");
  }));
  out.push_back(guarded("oracle vs formula", [&] { return oracle_vs_formula(rng, opts); }));
  out.push_back(guarded("isospectrality, plus", [&] { return iso_plus(opts); }));
  out.push_back(guarded("isospectrality, minus", [&] { return iso_minus(opts); }));
  out.push_back(guarded("missing state", missing_state_overlap));
  out.push_back(guarded("unitarity", unitarity));
  return out;
}

std::vector<CheckResult> verify_all(const VerifyOptions& opts) {
  auto out = verify_susy_core(opts);
  auto more = verify_oracle(opts);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

}  // namespace susypt
