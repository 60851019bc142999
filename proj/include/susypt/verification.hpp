#pragma once

// Invariant suites behind `susypt verify`: closed forms against their own
// identities and against the numerical oracle.

#include <cstdint>
#include <string>
#include <vector>

#include "susypt/pt.hpp"
#include "susypt/schrodinger.hpp"

namespace susypt {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  double eigen_tolerance = 1e-6;   // analytic vs numeric levels
  double iso_tolerance = 1e-5;     // partner spectra
  double riccati_tolerance = 1e-8;
  int random_configs = 20;
};

/// Box grid for a well of depth `depth` whose shallowest level of interest
/// is `e_shallowest`: spacing 0.05 / max(alpha, sqrt(depth)), half width from
/// box_half_width. Pass a non-marginal level; near-threshold ones blow up the box.
Grid oracle_grid(double alpha, double depth, double e_shallowest);

std::vector<CheckResult> verify_susy_core(const VerifyOptions& opts = {});
std::vector<CheckResult> verify_oracle(const VerifyOptions& opts = {});

/// Both suites.
std::vector<CheckResult> verify_all(const VerifyOptions& opts = {});

}  // namespace susypt
