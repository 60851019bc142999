#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "susypt/errors.hpp"
#include "susypt/pt.hpp"
#include "susypt/susy.hpp"

using namespace susypt;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
double sech2(double t) { return 1.0 / (std::cosh(t) * std::cosh(t)); }

const PTParams kFig1 = PTParams::from_alpha_lambda(0.1, 3.0);

// M(x) = B(tanh^2(alpha x); 1/2, lambda) / (2 alpha), via u = tanh.
double m_incomplete_beta(const PTParams& p, double x) {
  const double t = std::tanh(p.alpha() * x);
  return std::copysign(boost::math::beta(0.5, p.lambda(), t * t) / (2.0 * p.alpha()), x);
}

}  // namespace

TEST_CASE("parameters from alpha and g") {
  const PTParams p = make_params(1.9, 1.0);
  CHECK(p.lambda() == doctest::Approx(1.216).epsilon(1e-3));
  CHECK(make_params(0.25, 1.0).lambda() == 2.0);
  CHECK(rel(make_params(1.0, 8.0).lambda(), (1.0 + std::sqrt(17.0)) / 2.0) < 1e-15);
  for (const PTParams q : {p, make_params(0.1, 1.2), make_params(6.0, 8.0)}) {
    CHECK(rel(q.depth(), q.g() * q.alpha() / 2.0) < 1e-12);
    CHECK(rel(q.depth(), q.alpha() * q.alpha() * q.lambda() * (q.lambda() - 1.0)) < 1e-12);
  }
  const PTParams q = PTParams::from_alpha_lambda(0.1, 3.0);
  CHECK(rel(q.g(), 1.2) < 1e-15);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(make_params(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(make_params(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(make_params(NAN, 1.0), DomainError);
  CHECK_THROWS_AS(PTParams::from_alpha_lambda(1.0, 1.0), DomainError);
}

TEST_CASE("well shape") {
  const PTParams p = make_params(1.0, 8.0);
  CHECK(pt_potential(p, 0.0) == -4.0);
  CHECK(pt_potential(p, 0.7) == pt_potential(p, -0.7));
  for (double x : {150.0, 300.0, 1e4}) CHECK(std::abs(pt_potential(kFig1, x)) < 1e-12);
}

TEST_CASE("analytic spectrum") {
  const auto s = analytic_spectrum(kFig1);
  REQUIRE(s.count == 2);
  CHECK(s.energies[0] == doctest::Approx(-0.04).epsilon(1e-14));
  CHECK(s.energies[1] == doctest::Approx(-0.01).epsilon(1e-14));
  CHECK(s.lambda_used == 3.0);

  const auto f4 = analytic_spectrum(make_params(1.9, 1.0));
  REQUIRE(f4.count == 1);
  CHECK(f4.energies[0] == doctest::Approx(-0.16898).epsilon(1e-4));

  for (double g : {0.5, 1.0, 8.0}) CHECK(analytic_spectrum(make_params(g / 4.0 * 1.01, g)).count == 1);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> la(1.01, 9.0);
  for (int i = 0; i < 50; ++i) {
    const double lambda = la(rng);
    if (std::abs(lambda - std::round(lambda)) < 1e-6) continue;
    const auto r = analytic_spectrum(PTParams::from_alpha_lambda(0.7, lambda));
    CHECK(r.count == static_cast<int>(std::floor(lambda - 1.0)) + 1);
    for (std::size_t n = 1; n < r.energies.size(); ++n) CHECK(r.energies[n] > r.energies[n - 1]);
  }
}

TEST_CASE("ground state is even and normalized") {
  for (const PTParams p : {kFig1, make_params(1.0, 8.0), make_params(1.9, 1.0)}) {
    for (double x : {0.1, 1.0, 7.0}) CHECK(ground_state(p, x) == ground_state(p, -x));
    const double w = 40.0 / (p.alpha() * (p.lambda() - 1.0));
    const double n = 2.0 * oracle::simpson_panels(
                               [&](double x) { return std::pow(ground_state(p, x), 2); }, 0.0, w, 64);
    CHECK(std::abs(n - 1.0) < 1e-8);
  }
  const PTParams sharp = make_params(100.0, 1.0);
  CHECK(rel(ground_state(sharp, 1.0), std::sqrt(0.5) * std::exp(-0.5)) < 0.02);
}

TEST_CASE("factorization constants") {
  const auto f = factorization(kFig1);
  CHECK(f.eps_plus == doctest::Approx(-0.09).epsilon(1e-14));
  CHECK(f.eps_minus == doctest::Approx(-0.04).epsilon(1e-14));
  CHECK(f.eps_minus - analytic_spectrum(kFig1).energies[0] == 0.0);
  const double g = 1.2, a = 0.1, s = std::sqrt(1.0 + 2.0 * g / a);
  CHECK(rel(f.eps_plus, -(a * a / 2.0) * (1.0 + g / a + s)) < 1e-13);
  CHECK(rel(f.eps_minus, -(a * a / 2.0) * (1.0 + g / a - s)) < 1e-13);
  const PTParams q = make_params(0.5, 2.0);
  CHECK(rel(factorization(q).eps_plus, -4.0 * 0.25) < 1e-14);
  CHECK(rel(factorization(q).eps_minus, -0.25) < 1e-14);
  CHECK(factorization_energy(q, Branch::Plus) == factorization(q).eps_plus);
}

TEST_CASE("M function") {
  CHECK(m_function(kFig1, 0.0) == 0.0);
  CHECK(rel(m_infinity(kFig1), 16.0 / 3.0) < 1e-14);
  CHECK(rel(m_function(kFig1, 400.0), 16.0 / 3.0) < 1e-14);

  double worst = 0.0;
  for (const PTParams p : {kFig1, make_params(1.0, 8.0), make_params(1.9, 1.0),
                           PTParams::from_alpha_lambda(2.0, 11.5)}) {
    for (double ax : {-12.0, -3.0, -0.5, 0.01, 0.5, 1.99, 2.01, 3.0, 9.0, 30.0}) {
      const double x = ax / p.alpha();
      worst = std::max(worst, rel(m_function(p, x), m_incomplete_beta(p, x)));
    }
  }
  CHECK(worst < 1e-12);

  // Closed form at non-integer lambda.
  const PTParams p = PTParams::from_alpha_lambda(0.3, 2.0698);
  for (double ax : {-3.0, -0.5, 0.5, 3.0}) {
    const double x = ax / p.alpha();
    CHECK(rel(m_function_closed_form(p, x), m_function(p, x)) < 1e-10);
  }
}

TEST_CASE("L function") {
  CHECK(l_function(kFig1, 0.0) == 0.0);
  const PTParams two = PTParams::from_alpha_lambda(0.8, 2.0);
  const PTParams three = PTParams::from_alpha_lambda(0.8, 3.0);
  for (double x : {-9.0, -1.0, 0.3, 2.0, 15.0}) {
    const double a = 0.8;
    const double l2 = x / 2.0 + std::sinh(2 * a * x) / (4 * a);
    const double l3 = 3 * x / 8 + std::sinh(2 * a * x) / (4 * a) + std::sinh(4 * a * x) / (32 * a);
    CHECK(rel(l_function(two, x), l2) < 1e-12);
    CHECK(rel(l_function(three, x), l3) < 1e-12);
  }
  // Quadrature oracle at non-integer lambda, plus the closed form.
  const PTParams p = PTParams::from_alpha_lambda(0.3, 2.0698);
  for (double ax : {-3.0, -0.5, 0.5, 3.0}) {
    const double x = ax / p.alpha();
    const double ref = oracle::simpson(
        [&](double y) { return std::pow(std::cosh(p.alpha() * y), 2 * (p.lambda() - 1)); }, 0.0, x);
    CHECK(rel(l_function(p, x), ref) < 1e-11);
    CHECK(rel(l_function_closed_form(p, x), ref) < 1e-10);
    CHECK(rel(l_function_scaled(p, x) * std::pow(std::cosh(p.alpha() * x), 2 * (p.lambda() - 1)),
              ref) < 1e-11);
  }
  // Large-alpha limit at fixed g.
  CHECK(rel(l_function(make_params(50.0, 1.0), 0.1), std::expm1(0.1)) < 0.02);
  // Scaled form stays finite where L itself does not.
  const PTParams steep = make_params(50.0, 8.0);
  CHECK_THROWS_AS(l_function(steep, 100.0), OverflowError);
  CHECK(std::isfinite(l_function_scaled(steep, 100.0)));
}

TEST_CASE("zeta bound") {
  CHECK(std::abs(zeta_bound(kFig1) - 0.1875) < 1e-12);
  CHECK(0.0937 < zeta_bound(kFig1));
  const PTParams p = PTParams::from_alpha_lambda(0.7, 2.3);
  const PTParams q = PTParams::from_alpha_lambda(2.1, 2.3);
  CHECK(rel(zeta_bound(q) / zeta_bound(p), 3.0) < 1e-13);
}

TEST_CASE("superpotentials at the origin and at zero deformation") {
  for (double x : {-2.0, 0.5, 13.0}) {
    CHECK(rel(beta(kFig1, {Branch::Plus, 0.0}, x), -0.3 * std::tanh(0.1 * x)) < 1e-15);
    CHECK(rel(beta(kFig1, {Branch::Minus, 0.0}, x), 0.2 * std::tanh(0.1 * x)) < 1e-15);
  }
  CHECK(beta(kFig1, {Branch::Plus, 0.0}, 0.0) == 0.0);
  for (double z : {-0.15, 0.0937, 0.18}) CHECK(beta(kFig1, {Branch::Plus, z}, 0.0) == z);
}

TEST_CASE("Riccati equation by finite differences") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> al(0.2, 3.0), la(1.2, 5.0), u(-0.95, 0.95);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const PTParams p = PTParams::from_alpha_lambda(al(rng), la(rng));
    for (const SusyBranchConfig c :
         {SusyBranchConfig{Branch::Plus, u(rng) * zeta_bound(p)},
          SusyBranchConfig{Branch::Minus, 0.0}, SusyBranchConfig{Branch::Minus, 0.3 * u(rng) * p.alpha()}}) {
      const double eps = factorization_energy(p, c.branch);
      const auto xs = singular_point(p, c);
      auto b = [&](double x) { return beta(p, c, x); };
      for (double ax = -6.0; ax <= 6.0; ax += 0.25) {
        const double x = ax / p.alpha();
        if (xs && std::abs(x - *xs) < 2.0 / p.alpha()) continue;
        const double r = b(x) * b(x) - oracle::fd5(b, x, 2e-3 / p.alpha()) - (pt_potential(p, x) - eps);
        worst = std::max(worst, std::abs(r) / std::max(1.0, std::abs(eps)));
      }
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("partner is V + 2 beta'") {
  const PTParams p = make_params(1.0, 8.0);
  for (const SusyBranchConfig c : {SusyBranchConfig{Branch::Plus, 0.0}, SusyBranchConfig{Branch::Plus, 1.1},
                                   SusyBranchConfig{Branch::Plus, -0.7}, SusyBranchConfig{Branch::Minus, 0.0},
                                   SusyBranchConfig{Branch::Minus, 0.02}}) {
    for (double x : {-4.0, -1.0, -0.2, 0.0, 0.3, 2.5}) {
      auto b = [&](double y) { return beta(p, c, y); };
      const double fd = pt_potential(p, x) + 2.0 * oracle::fd5(b, x, 1e-3);
      const double v = partner_potential(p, c, x);
      CHECK(std::abs(v - fd) < 1e-8 * std::max(1.0, std::abs(v)));
      CHECK(std::abs(v - pt_potential(p, x) - 2.0 * beta_derivative(p, c, x)) <
            1e-10 * std::max(1.0, std::abs(v)));
    }
  }
}

TEST_CASE("shape invariance at zero deformation") {
  const PTParams p = make_params(1.0, 8.0);
  const double l = p.lambda();
  for (double x = -5.0; x <= 5.0; x += 0.1) {
    CHECK(std::abs(partner_potential(p, {Branch::Plus, 0.0}, x) + l * (l + 1) * sech2(x)) < 1e-12);
    CHECK(std::abs(partner_potential(p, {Branch::Minus, 0.0}, x) + (l - 1) * (l - 2) * sech2(x)) < 1e-12);
  }
  const PTParams flat = make_params(2.0, 8.0);
  for (double x = -5.0; x <= 5.0; x += 0.1)
    CHECK(std::abs(partner_potential(flat, {Branch::Minus, 0.0}, x)) < 1e-12);
}

namespace {
int count_minima(const PTParams& p, const SusyBranchConfig& c) {
  int minima = 0;
  double prev2 = partner_potential(p, c, -60.0), prev = partner_potential(p, c, -59.9);
  for (int i = 2; i <= 1200; ++i) {
    const double v = partner_potential(p, c, -60.0 + 0.1 * i);
    REQUIRE(std::isfinite(v));
    if (prev < prev2 && prev < v) ++minima;
    prev2 = prev;
    prev = v;
  }
  return minima;
}
}  // namespace

TEST_CASE("plus partner wells at alpha = 0.1, lambda = 3") {
  // Deformation counted from the origin: one asymmetric well.
  CHECK(count_minima(kFig1, {Branch::Plus, 0.0937}) == 1);
  // Same number counted from -infinity: asymmetric double well.
  const double z0 = zeta_from_minus_infinity_origin(kFig1, 0.0937);
  CHECK(z0 == doctest::Approx(0.18732).epsilon(1e-4));
  CHECK(z0 < zeta_bound(kFig1));
  CHECK(count_minima(kFig1, {Branch::Plus, z0}) == 2);
}

TEST_CASE("deformation origin conversion") {
  const double z = 0.05, z0 = zeta_from_minus_infinity_origin(kFig1, z);
  const double minf = m_infinity(kFig1);
  for (double x : {-30.0, 0.0, 12.0}) {
    const double m = m_function(kFig1, x);
    CHECK(rel(1.0 - z * (m + minf), (1.0 - z * minf) * (1.0 - z0 * m)) < 1e-13);
  }
}

TEST_CASE("missing state") {
  const double z = 0.0937;
  const double w = 400.0;
  const double n = oracle::simpson_panels(
      [&](double x) { return std::pow(missing_state(kFig1, z, x), 2); }, -w, w, 200);
  CHECK(std::abs(n - 1.0) < 1e-8);

  const SusyBranchConfig c{Branch::Plus, z};
  double worst = 0.0;
  for (double x = -80.0; x <= 80.0; x += 0.5) {
    auto phi = [&](double y) { return missing_state(kFig1, z, y); };
    worst = std::max(worst, std::abs(-oracle::fd5(phi, x, 1e-2) + beta(kFig1, c, x) * phi(x)));
  }
  CHECK(worst < 1e-8);

  const double ratio = missing_state(kFig1, 0.0, 3.0) / std::pow(std::cosh(0.3), -3.0);
  CHECK(rel(missing_state(kFig1, 0.0, 7.0) / std::pow(std::cosh(0.7), -3.0), ratio) < 1e-13);
  CHECK(missing_state(kFig1, 0.0, 4.0) == missing_state(kFig1, 0.0, -4.0));

  CHECK_THROWS_AS(missing_state(kFig1, zeta_bound(kFig1), 0.0), DomainError);
  CHECK_THROWS_AS(missing_state(kFig1, -0.2, 0.0), DomainError);
}

TEST_CASE("minus-branch singular point") {
  const PTParams p = make_params(1.9, 1.0);
  const double xs = singular_point_minus(p, -0.05);
  CHECK(xs < 0.0);
  const double ref = oracle::bisect([&](double x) { return 1.0 + 0.05 * l_function(p, x); }, -20.0, 0.0);
  CHECK(std::abs(xs - ref) < 1e-10);
  CHECK(xs == doctest::Approx(-3.81838).epsilon(1e-5));
  CHECK(singular_point_minus(p, 0.3) > 0.0);
  CHECK(std::abs(singular_point_minus(make_params(2000.0, 1.0), -0.05) + std::log(21.0)) < 1e-3);
  CHECK_THROWS_AS(beta(p, {Branch::Minus, -0.05}, xs), SingularityError);
  CHECK_FALSE(singular_point(p, {Branch::Minus, 0.0}).has_value());
}

TEST_CASE("plus-branch singular point") {
  CHECK_FALSE(singular_point_plus(kFig1, 0.18).has_value());
  CHECK_FALSE(singular_point_plus(kFig1, -0.18).has_value());
  const auto xs = singular_point_plus(kFig1, 0.19);
  REQUIRE(xs.has_value());
  CHECK(*xs > 0.0);
  CHECK(std::abs(1.0 - 0.19 * m_function(kFig1, *xs)) < 1e-12);
  CHECK(*singular_point_plus(kFig1, -0.19) == doctest::Approx(-*xs));
}

TEST_CASE("second-order partner") {
  const PTParams p = make_params(1.0, 8.0);
  const double a = p.alpha(), l = p.lambda();
  for (double x : {-3.0, -0.5, -0.01, 0.02, 0.4, 2.0}) {
    const double ref = -a * a * l * (l - 1) * sech2(a * x) + 2 * a * a / std::pow(std::sinh(a * x), 2);
    CHECK(rel(two_susy_potential(p, 0.0, 0.0, x), ref) < 1e-9);
    CHECK(rel(two_susy_particular(p, x), ref) < 1e-13);
  }
  for (double x : {1e-3, 1e-4}) CHECK(rel(two_susy_potential(p, 0.0, 0.0, x) * x * x, 2.0) < 1e-5);
  const auto f = factorization(p);
  CHECK(rel(f.eps_plus - f.eps_minus, -a * a * (2 * l - 1)) < 1e-13);
  CHECK_THROWS_AS(two_susy_potential(p, 0.0, 0.0, 0.0), SingularityError);
}

TEST_CASE("transparency") {
  const auto t = is_transparent(make_params(0.1, 1.2));
  CHECK(t.transparent);
  CHECK(t.k == 2);
  CHECK_FALSE(is_transparent(make_params(1.0, 8.0)).transparent);
  const auto one = is_transparent(make_params(0.7, 2.8));
  CHECK(one.transparent);
  CHECK(one.k == 1);
}
