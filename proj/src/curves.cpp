#include "susypt/curves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "susypt/delta.hpp"
#include "susypt/errors.hpp"

namespace susypt {
namespace {

constexpr std::array<std::pair<Quantity, std::string_view>, 10> kNames = {{
    {Quantity::Potential, "V"},
    {Quantity::Partner, "partner"},
    {Quantity::M, "M"},
    {Quantity::L, "L"},
    {Quantity::Beta, "beta"},
    {Quantity::MissingState, "missing"},
    {Quantity::GroundState, "ground"},
    {Quantity::TwoSusy, "two-susy"},
    {Quantity::DeltaRegular, "delta-regular"},
    {Quantity::DeltaBeta, "delta-beta"},
}};

bool inside(double x, const Grid& g) { return x >= g.x_min() && x <= g.x_max(); }

std::function<double(double)> evaluator(const CurveSpec& s) {
  const PTParams& p = s.params;
  const SusyBranchConfig cfg = s.branch;
  switch (s.quantity) {
    case Quantity::Potential: return [p](double x) { return pt_potential(p, x); };
    case Quantity::Partner: return [p, cfg](double x) { return partner_potential(p, cfg, x); };
    case Quantity::M: return [p](double x) { return m_function(p, x); };
    case Quantity::L: return [p](double x) { return l_function(p, x); };
    case Quantity::Beta: return [p, cfg](double x) { return beta(p, cfg, x); };
    case Quantity::MissingState:
      return [p, cfg](double x) { return missing_state(p, cfg.deformation, x); };
    case Quantity::GroundState: return [p](double x) { return ground_state(p, x); };
    case Quantity::TwoSusy: {
      const double z = s.zeta, xi = s.xi;
      return [p, z, xi](double x) { return two_susy_potential(p, z, xi, x); };
    }
    case Quantity::DeltaRegular: {
      const double g = p.g(), xi = cfg.deformation;
      return [g, xi](double x) { return delta_susy_potential_regular(g, xi, x); };
    }
    case Quantity::DeltaBeta: {
      const double g = p.g(), w = cfg.deformation;
      return [g, w](double x) { return delta_susy_beta(g, w, x); };
    }
  }
  throw DomainError("unknown quantity");
}

// Where beta+_zeta - beta-_xi changes sign (or vanishes) on the grid.
std::optional<double> two_susy_pole(const CurveSpec& s) {
  const PTParams& p = s.params;
  for (const SusyBranchConfig c : {SusyBranchConfig{Branch::Plus, s.zeta},
                                   SusyBranchConfig{Branch::Minus, s.xi}}) {
    if (auto xs = singular_point(p, c); xs && inside(*xs, s.grid)) return xs;
  }
  auto diff = [&](double x) {
    return beta(p, {Branch::Plus, s.zeta}, x) - beta(p, {Branch::Minus, s.xi}, x);
  };
  double x0 = s.grid.x(0), d0 = diff(x0);
  if (d0 == 0.0) return x0;
  for (int i = 1; i < s.grid.n(); ++i) {
    const double x1 = s.grid.x(i), d1 = diff(x1);
    if (d1 == 0.0) return x1;
    if ((d0 > 0.0) != (d1 > 0.0)) {
      double lo = x0, hi = x1, dlo = d0;
      for (int k = 0; k < 100 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++k) {
        const double mid = 0.5 * (lo + hi), dm = diff(mid);
        if ((dm > 0.0) == (dlo > 0.0)) {
          lo = mid;
          dlo = dm;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    x0 = x1;
    d0 = d1;
  }
  return std::nullopt;
}

csv::Table xy_table(const Grid& g, const std::function<double(double)>& f, bool skip_origin) {
  csv::Table t{{"x", "value"}, {}};
  t.rows.reserve(g.n());
  for (int i = 0; i < g.n(); ++i) {
    const double x = g.x(i);
    if (skip_origin && x == 0.0) continue;
    t.rows.push_back({x, f(x)});
  }
  return t;
}

}  // namespace

std::optional<Quantity> parse_quantity(std::string_view name) {
  for (const auto& [q, n] : kNames)
    if (n == name) return q;
  return std::nullopt;
}

std::string_view quantity_name(Quantity q) {
  for (const auto& [k, n] : kNames)
    if (k == q) return n;
  return "?";
}

std::optional<double> singularity_in_range(const CurveSpec& s) {
  std::optional<double> xs;
  switch (s.quantity) {
    case Quantity::Partner:
    case Quantity::Beta:
      xs = singular_point(s.params, s.branch);
      break;
    case Quantity::TwoSusy:
      return two_susy_pole(s);
    case Quantity::DeltaRegular:
    case Quantity::DeltaBeta:
      if (s.branch.deformation != 0.0)
        xs = delta_singular_point(s.params.g(), s.branch.deformation);
      break;
    default:
      break;
  }
  if (xs && inside(*xs, s.grid)) return xs;
  return std::nullopt;
}

csv::Table make_curve(const CurveSpec& s) {
  if (auto xs = singularity_in_range(s))
    throw SingularityError("requested range contains a singular point", *xs);
  return xy_table(s.grid, evaluator(s), s.quantity == Quantity::DeltaRegular);
}

double figure2_zeta(const PTParams& p) {
  // The caption value is regular only under the lower-limit -infinity
  // convention (bound 1/(2 M_inf) = 0.09375 here).
  return zeta_from_minus_infinity_origin(p, 0.0937);
}

std::vector<PresetFile> figure_preset(int figure) {
  std::vector<PresetFile> out;
  switch (figure) {
    case 1: {
      const PTParams p = PTParams::from_alpha_lambda(0.1, 3.0);
      out.push_back({"fig1_m_function.csv",
                     make_curve({Quantity::M, p, {}, 0, 0, Grid(-60, 60, 1201)})});
      break;
    }
    case 2: {
      const PTParams p = PTParams::from_alpha_lambda(0.1, 3.0);
      const SusyBranchConfig cfg{Branch::Plus, figure2_zeta(p)};
      out.push_back({"fig2_partner_plus.csv",
                     make_curve({Quantity::Partner, p, cfg, 0, 0, Grid(-60, 60, 1201)})});
      csv::Table levels{{"n", "energy"}, {}};
      std::vector<double> e = analytic_spectrum(p).energies;
      e.insert(e.begin(), factorization(p).eps_plus);
      for (std::size_t i = 0; i < e.size(); ++i) levels.rows.push_back({double(i), e[i]});
      out.push_back({"fig2_levels.csv", std::move(levels)});
      break;
    }
    case 3: {
      for (double alpha : {1.0, 3.0, 6.0}) {
        const PTParams p = PTParams::from_alpha_g(alpha, 8.0);
        const std::string tag = "fig3_alpha" + std::to_string(int(alpha));
        const Grid grid(-3, 3, 601);
        out.push_back({tag + "_potential.csv",
                       make_curve({Quantity::Potential, p, {}, 0, 0, grid})});
        out.push_back({tag + "_partner_minus.csv",
                       make_curve({Quantity::Partner, p, {Branch::Minus, 0.0}, 0, 0, grid})});
      }
      break;
    }
    case 4: {
      const double g = 1.0, xi = -0.05;
      const PTParams p = PTParams::from_alpha_g(1.9, g);
      const double lo =
          std::max(singular_point_minus(p, xi), delta_singular_point(g, xi)) + 0.5;
      const Grid grid(lo, 5.0, 1200);
      out.push_back({"fig4_partner_minus.csv",
                     make_curve({Quantity::Partner, p, {Branch::Minus, xi}, 0, 0, grid})});
      out.push_back({"fig4_delta_regular.csv",
                     make_curve({Quantity::DeltaRegular, p, {Branch::Minus, xi}, 0, 0, grid})});
      break;
    }
    default:
      throw DomainError("figure preset must be 1, 2, 3 or 4");
  }
  return out;
}

csv::Table delta_limit_sweep(double g, double xi, std::span<const double> alphas) {
  csv::Table t{{"alpha", "E0", "E0_shift", "alpha_E0_shift", "psi0_max_rel_err",
                "beta_sup_diff", "potential_sup_diff", "x_s"},
               {}};
  const DeltaWell w = delta_well(g);
  for (double alpha : alphas) {
    const PTParams p = PTParams::from_alpha_g(alpha, g);
    const double e0 = analytic_spectrum(p).energies.front();
    double psi_err = 0.0;
    for (double x : {0.5, 1.0, 2.0})
      psi_err = std::max(psi_err,
                         std::abs(ground_state(p, x) / delta_ground_state(w, x) - 1.0));
    const SusyBranchConfig cfg{Branch::Minus, xi};
    double db = 0.0, dv = 0.0;
    for (int i = 0; i <= 280; ++i) {
      const double x = 0.2 + 0.01 * i;
      db = std::max(db, std::abs(beta(p, cfg, x) - delta_susy_beta(g, xi, x)));
      dv = std::max(dv, std::abs(partner_potential(p, cfg, x) -
                                 delta_susy_potential_regular(g, xi, x)));
    }
    const double xs = xi == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                : singular_point_minus(p, xi);
    const double shift = e0 - w.energy;
    t.rows.push_back({alpha, e0, shift, alpha * shift, psi_err, db, dv, xs});
  }
  return t;
}

}  // namespace susypt
