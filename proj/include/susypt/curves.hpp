#pragma once

// Curve sampling for the CLI: one quantity on a grid, figure presets, and
// the delta-limit sweep.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "susypt/csv.hpp"
#include "susypt/schrodinger.hpp"
#include "susypt/susy.hpp"

namespace susypt {

enum class Quantity {
  Potential,     // V
  Partner,       // plus or minus partner, per the branch config
  M,
  L,
  Beta,          // superpotential of the branch
  MissingState,  // plus branch only
  GroundState,
  TwoSusy,       // uses zeta and xi
  DeltaRegular,  // regular part of the delta partner, g and xi = deformation
  DeltaBeta,
};

std::optional<Quantity> parse_quantity(std::string_view name);
std::string_view quantity_name(Quantity q);

struct CurveSpec {
  Quantity quantity;
  PTParams params;
  SusyBranchConfig branch;  // Partner, Beta, MissingState, Delta*
  double zeta = 0.0;        // TwoSusy
  double xi = 0.0;          // TwoSusy
  Grid grid;
};

/// First pole of the requested quantity inside the grid range, if any.
std::optional<double> singularity_in_range(const CurveSpec& spec);

/// Samples the quantity as an `x,value` table. Throws SingularityError (with
/// the pole location) when a pole lies in the range. DeltaRegular omits the
/// point x = 0, where only the delta term lives.
csv::Table make_curve(const CurveSpec& spec);

struct PresetFile {
  std::string name;
  csv::Table table;
};

/// Data behind figures 1-4. Throws DomainError for other numbers.
std::vector<PresetFile> figure_preset(int figure);

/// Plus-branch deformation baked into the figure 2 preset (origin convention).
double figure2_zeta(const PTParams& p);

/// Columns alpha,E0,E0_shift,alpha_E0_shift,psi0_max_rel_err,beta_sup_diff,
/// potential_sup_diff,x_s. Shifts are relative to the delta-well values; the
/// sup norms run over x in [0.2, 3] against the xi-deformed delta partner.
csv::Table delta_limit_sweep(double g, double xi, std::span<const double> alphas);

}  // namespace susypt
