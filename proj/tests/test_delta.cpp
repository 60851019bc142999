#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "susypt/delta.hpp"
#include "susypt/errors.hpp"
#include "susypt/pt.hpp"
#include "susypt/susy.hpp"

using namespace susypt;

TEST_CASE("delta well bound state") {
  const DeltaWell w = delta_well(1.0);
  CHECK(w.energy == -0.25);
  CHECK(w.sigma == w.energy);
  const double n = 2.0 * oracle::simpson_panels(
                             [&](double x) { return std::pow(delta_ground_state(w, x), 2); }, 0.0, 80.0, 40);
  CHECK(std::abs(n - 1.0) < 1e-10);
  CHECK(std::abs(analytic_spectrum(make_params(200.0, 1.0)).energies[0] + 0.25) < 3e-3);
  CHECK_THROWS_AS(delta_well(0.0), DomainError);
}

TEST_CASE("delta superpotential") {
  const double g = 1.0;
  for (double x : {0.1, 1.0, 5.0}) {
    CHECK(delta_susy_beta(g, 0.0, x) == 0.5);
    CHECK(delta_susy_beta(g, 0.0, -x) == -0.5);
  }
  CHECK(delta_susy_beta(g, 0.0, 1e-12) - delta_susy_beta(g, 0.0, -1e-12) == g);
  const double b200 = beta(make_params(200.0, g), {Branch::Minus, -0.05}, 1.0);
  CHECK(std::abs(delta_susy_beta(g, -0.05, 1.0) - b200) < 1e-3);
  // Riccati on each side: beta^2 - beta' = -sigma away from the origin.
  for (double x : {-2.0, -0.3, 0.4, 2.5}) {
    auto b = [&](double y) { return delta_susy_beta(g, -0.05, y); };
    CHECK(std::abs(b(x) * b(x) - oracle::fd5(b, x, 1e-3) - 0.25) < 1e-9);
  }
}

TEST_CASE("delta partner, regular part") {
  for (double x : {-3.0, -0.1, 0.2, 4.0}) CHECK(delta_susy_potential_regular(1.0, 0.0, x) == 0.0);
  CHECK_THROWS_AS(delta_susy_potential_regular(1.0, -0.05, 0.0), DomainError);

  const double xs = delta_singular_point(1.0, -0.05);
  CHECK(std::abs(xs + std::log(21.0)) < 1e-10);
  CHECK(delta_singular_point(1.0, 0.05) == -xs);
  for (double d : {1e-3, 1e-4, -1e-4}) {
    const double x = xs + d;
    CHECK(delta_susy_potential_regular(1.0, -0.05, x) * d * d / 2.0 == doctest::Approx(1.0).epsilon(5e-3));
  }
  CHECK_THROWS_AS(delta_susy_potential_regular(1.0, -0.05, xs), SingularityError);

  const double v200 = partner_potential(make_params(200.0, 1.0), {Branch::Minus, -0.05}, 0.5);
  CHECK(std::abs(delta_susy_potential_regular(1.0, -0.05, 0.5) - v200) < 1e-2);

  // Regular part is 2 beta' of the delta superpotential off the origin.
  for (double x : {-2.0, 0.7}) {
    auto b = [](double y) { return delta_susy_beta(1.0, -0.05, y); };
    CHECK(std::abs(delta_susy_potential_regular(1.0, -0.05, x) - 2.0 * oracle::fd5(b, x, 1e-3)) < 1e-9);
  }
}

TEST_CASE("L approaches its delta-well limit") {
  for (double x : {-0.5, 0.1, 1.0}) {
    const double l = l_function(make_params(2000.0, 1.0), x);
    CHECK(std::abs(l / delta_l_limit(1.0, x) - 1.0) < 2e-3);
  }
}
