#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "susypt/csv.hpp"
#include "susypt/curves.hpp"
#include "susypt/errors.hpp"
#include "susypt/pt.hpp"
#include "susypt/schrodinger.hpp"
#include "susypt/susy.hpp"
#include "susypt/verification.hpp"

using namespace susypt;

namespace {

constexpr int kConfigError = 2;
constexpr int kSingular = 3;
constexpr int kVerifyFailed = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::optional<double> alpha, g, lambda;
  std::string branch;
  double deformation = 0.0;
  std::string zeta_origin = "zero";
  std::optional<double> x_min, x_max;
  std::optional<int> n;
  std::string output;
};

void add_params(CLI::App* app, Common& c) {
  app->add_option("--alpha", c.alpha, "inverse width alpha > 0");
  auto* g = app->add_option("--g", c.g, "coupling g > 0");
  auto* l = app->add_option("--lambda", c.lambda, "lambda > 1 (instead of --g)");
  g->excludes(l);
}

void add_branch(CLI::App* app, Common& c) {
  app->add_option("--branch", c.branch, "plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}));
  app->add_option("--deformation", c.deformation, "zeta (plus) or xi (minus)");
  app->add_option("--zeta-origin", c.zeta_origin,
                  "lower limit of the plus-branch integral the zeta value refers to")
      ->check(CLI::IsMember({"zero", "minus-infinity"}));
}

void add_grid(CLI::App* app, Common& c) {
  app->add_option("--xmin", c.x_min);
  app->add_option("--xmax", c.x_max);
  app->add_option("--n", c.n, "number of grid points");
}

PTParams params_of(const Common& c) {
  if (!c.alpha) throw ConfigError("--alpha is required");
  if (c.g.has_value() == c.lambda.has_value())
    throw ConfigError("exactly one of --g and --lambda is required");
  return c.g ? PTParams::from_alpha_g(*c.alpha, *c.g)
             : PTParams::from_alpha_lambda(*c.alpha, *c.lambda);
}

double plus_zeta(const PTParams& p, const Common& c, double zeta) {
  return c.zeta_origin == "minus-infinity" ? zeta_from_minus_infinity_origin(p, zeta) : zeta;
}

std::optional<SusyBranchConfig> branch_of(const PTParams& p, const Common& c) {
  if (c.branch.empty()) return std::nullopt;
  if (c.branch == "plus") return SusyBranchConfig{Branch::Plus, plus_zeta(p, c, c.deformation)};
  return SusyBranchConfig{Branch::Minus, c.deformation};
}

std::optional<Grid> grid_of(const Common& c) {
  if (!c.x_min && !c.x_max && !c.n) return std::nullopt;
  if (!c.x_min || !c.x_max || !c.n) throw ConfigError("--xmin, --xmax and --n go together");
  return Grid(*c.x_min, *c.x_max, *c.n);
}

void print_levels(const std::string& title, const std::vector<double>& analytic,
                  const NumericSpectrum& num) {
  std::printf("%s\n", title.c_str());
  const std::size_t rows = std::max(analytic.size(), num.energies.size());
  if (rows == 0) {
    std::printf("  no bound states\n");
    return;
  }
  std::printf("  %-3s %-22s %-22s %-12s %s\n", "n", "analytic", "numeric", "difference",
              "error estimate");
  for (std::size_t i = 0; i < rows; ++i) {
    std::string a = "-", nu = "-", d = "-", err = "-";
    char buf[64];
    if (i < analytic.size()) {
      std::snprintf(buf, sizeof buf, "%.15g", analytic[i]);
      a = buf;
    }
    if (i < num.energies.size()) {
      std::snprintf(buf, sizeof buf, "%.15g%s", num.energies[i], num.marginal[i] ? "*" : "");
      nu = buf;
      std::snprintf(buf, sizeof buf, "%.2e", num.error_estimates[i]);
      err = buf;
    }
    if (i < analytic.size() && i < num.energies.size()) {
      std::snprintf(buf, sizeof buf, "%.2e", num.energies[i] - analytic[i]);
      d = buf;
    }
    std::printf("  %-3zu %-22s %-22s %-12s %s\n", i, a.c_str(), nu.c_str(), d.c_str(),
                err.c_str());
  }
}

NumericSpectrum solve(const Potential& v, const PTParams& p, double depth, double shallowest,
                      const std::optional<Grid>& grid, double tol,
                      std::vector<double> poles = {}) {
  SolverOptions o;
  o.tolerance = tol;
  o.marginal_energy = marginal_threshold(p.alpha());
  o.singular_points = std::move(poles);
  return bound_spectrum(v, grid ? *grid : oracle_grid(p.alpha(), depth, shallowest), o);
}

int run_spectrum(const Common& c, double tol) {
  const PTParams p = params_of(c);
  const auto grid = grid_of(c);
  const auto ana = analytic_spectrum(p).energies;
  // Shallowest level that is not marginal sets the box; E_0 if all are.
  double shallow = ana.front();
  for (double e : ana)
    if (std::abs(e) >= marginal_threshold(p.alpha())) shallow = e;
  std::printf("alpha = %.15g  g = %.15g  lambda = %.15g  (* marks marginal levels)\n",
              p.alpha(), p.g(), p.lambda());
  print_levels("V", ana,
               solve([&](double x) { return pt_potential(p, x); }, p, p.depth(), shallow, grid,
                     tol));

  std::vector<SusyBranchConfig> branches;
  if (auto b = branch_of(p, c)) {
    branches.push_back(*b);
  } else {
    branches = {{Branch::Plus, 0.0}, {Branch::Minus, 0.0}};
  }
  const auto fp = factorization(p);
  for (const auto& b : branches) {
    std::vector<double> expect = ana;
    std::vector<double> poles;
    if (auto xs = singular_point(p, b)) poles.push_back(*xs);
    if (b.branch == Branch::Plus) {
      expect.insert(expect.begin(), fp.eps_plus);
    } else if (!expect.empty()) {
      expect.erase(expect.begin());
    }
    char title[128];
    std::snprintf(title, sizeof title, "partner %s, %s = %.15g",
                  b.branch == Branch::Plus ? "plus" : "minus",
                  b.branch == Branch::Plus ? "zeta" : "xi", b.deformation);
    const double depth = b.branch == Branch::Plus ? fp.eps_plus * -1.0 : p.depth();
    print_levels(title, expect,
                 solve([&](double x) { return partner_potential(p, b, x); }, p, depth, shallow,
                       grid, tol, poles));
  }
  return 0;
}

void emit(const csv::Table& t, const std::string& output) {
  if (output.empty() || output == "-") {
    csv::write(std::cout, t);
  } else {
    csv::write_file(output, t);
  }
}

int run_curve(const Common& c, const std::string& quantity, std::optional<int> preset,
              double zeta, double xi) {
  if (preset) {
    const std::filesystem::path dir = c.output.empty() ? "." : c.output;
    std::filesystem::create_directories(dir);
    for (const auto& f : figure_preset(*preset)) {
      csv::write_file(dir / f.name, f.table);
      std::printf("%s\n", (dir / f.name).string().c_str());
    }
    return 0;
  }
  std::optional<Quantity> q;
  if (!quantity.empty()) {
    q = parse_quantity(quantity);
    if (!q) throw ConfigError("unknown quantity '" + quantity + "'");
  } else {
    q = c.branch.empty() ? Quantity::Potential : Quantity::Partner;
  }
  const bool delta = *q == Quantity::DeltaRegular || *q == Quantity::DeltaBeta;
  Common cc = c;
  if (delta && !cc.alpha) cc.alpha = 1.0;
  const PTParams p = params_of(cc);
  auto b = branch_of(p, cc);
  if (!b && (*q == Quantity::Partner || *q == Quantity::Beta))
    throw ConfigError("--branch is required for this quantity");
  if (*q == Quantity::MissingState) b = SusyBranchConfig{Branch::Plus, plus_zeta(p, cc, cc.deformation)};
  if (delta) b = SusyBranchConfig{Branch::Minus, cc.deformation};
  const double scale = delta ? p.g() : p.alpha();
  const Grid grid = grid_of(cc).value_or(Grid(-6.0 / scale, 6.0 / scale, 1201));
  CurveSpec spec{*q, p, b.value_or(SusyBranchConfig{}), plus_zeta(p, cc, zeta), xi, grid};
  emit(make_curve(spec), c.output);
  return 0;
}

int run_verify(const VerifyOptions& o) {
  const auto results = verify_all(o);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s  %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%zu checks, %d failed\n", results.size(), failed);
  return failed ? kVerifyFailed : 0;
}

int run_scatter(const Common& c, const std::vector<double>& energies, double step_tol) {
  const PTParams p = params_of(c);
  std::printf("%-22s %-22s %-22s\n", "E", "|R|^2", "|T|^2");
  for (double e : energies) {
    if (!(e > 0.0)) throw ConfigError("energies must be positive");
    const double k = std::sqrt(e);
    const Grid grid = grid_of(c).value_or(
        Grid::symmetric(25.0 / p.alpha(), std::min(0.02, 0.05 / std::max(k, p.alpha()))));
    const auto s = scatter([&](double x) { return pt_potential(p, x); }, e, grid, step_tol);
    std::printf("%-22.15g %-22.15g %-22.15g\n", e, s.reflection, s.transmission);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supersymmetric partners of the Poschl-Teller and delta wells"};
  app.require_subcommand(1);

  Common c;
  double tol = 1e-6;
  auto* spectrum = app.add_subcommand("spectrum", "analytic and numeric bound states");
  add_params(spectrum, c);
  add_branch(spectrum, c);
  add_grid(spectrum, c);
  spectrum->add_option("--tolerance", tol, "eigenvalue tolerance");

  std::string quantity;
  std::optional<int> preset;
  double zeta = 0.0, xi = 0.0;
  auto* curve = app.add_subcommand("curve", "write a curve as x,value CSV");
  add_params(curve, c);
  add_branch(curve, c);
  add_grid(curve, c);
  curve->add_option("--quantity", quantity,
                    "V, partner, M, L, beta, missing, ground, two-susy, delta-regular, "
                    "delta-beta");
  curve->add_option("--preset", preset, "figure preset 1-4 (also fig1..fig4)")
      ->transform(CLI::Transformer({{"fig1", "1"}, {"fig2", "2"}, {"fig3", "3"}, {"fig4", "4"}}))
      ->check(CLI::Range(1, 4));
  curve->add_option("--zeta", zeta, "two-susy plus deformation");
  curve->add_option("--xi", xi, "two-susy minus deformation");
  curve->add_option("--output,-o", c.output, "CSV file (directory for presets)");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--seed", vo.seed);
  verify->add_option("--eigen-tolerance", vo.eigen_tolerance);
  verify->add_option("--iso-tolerance", vo.iso_tolerance);
  verify->add_option("--riccati-tolerance", vo.riccati_tolerance);
  verify->add_option("--configs", vo.random_configs, "randomized configurations per check")
      ->check(CLI::PositiveNumber);

  double dg = 1.0, dxi = 0.0;
  std::vector<double> alphas;
  auto* dl = app.add_subcommand("delta-limit", "sweep alpha toward the delta well");
  dl->add_option("--g", dg)->check(CLI::PositiveNumber);
  dl->add_option("--alphas", alphas)->delimiter(',')->required();
  dl->add_option("--xi", dxi, "minus-branch deformation");
  dl->add_option("--output,-o", c.output);

  std::vector<double> energies;
  double step_tol = 1e-6;
  auto* sc = app.add_subcommand("scatter", "reflection and transmission of the well");
  add_params(sc, c);
  add_grid(sc, c);
  sc->add_option("--energies", energies)->delimiter(',')->required();
  sc->add_option("--step-tolerance", step_tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }

  try {
    if (*spectrum) return run_spectrum(c, tol);
    if (*curve) return run_curve(c, quantity, preset, zeta, xi);
    if (*verify) return run_verify(vo);
    if (*dl) {
      emit(delta_limit_sweep(dg, dxi, alphas), c.output);
      return 0;
    }
    if (*sc) return run_scatter(c, energies, step_tol);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kConfigError;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kConfigError;
  } catch (const SingularityError& e) {
    std::fprintf(stderr, "error: %s\nx_s = %.17g\n", e.what(), e.location());
    return kSingular;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
