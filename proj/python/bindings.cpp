#include <cmath>
#include <optional>

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "susypt/curves.hpp"
#include "susypt/delta.hpp"
#include "susypt/errors.hpp"
#include "susypt/pt.hpp"
#include "susypt/schrodinger.hpp"
#include "susypt/specfun.hpp"
#include "susypt/susy.hpp"
#include "susypt/verification.hpp"

namespace py = pybind11;
using namespace susypt;

namespace {

SusyBranchConfig branch_cfg(const std::string& branch, double deformation) {
  if (branch == "plus") return {Branch::Plus, deformation};
  if (branch == "minus") return {Branch::Minus, deformation};
  throw DomainError("branch must be 'plus' or 'minus'");
}

py::dict table_dict(const csv::Table& t) {
  py::dict d;
  for (const auto& h : t.header) d[py::str(h)] = py::array(py::cast(t.column(h)));
  return d;
}

}  // namespace

PYBIND11_MODULE(_susypt, m) {
  m.doc() = "Supersymmetric partners of the Poschl-Teller and delta wells";

  static py::exception<SingularityError> singular(m, "SingularityError", PyExc_ArithmeticError);
  static py::exception<ConvergenceError> convergence(m, "ConvergenceError", PyExc_RuntimeError);
  static py::exception<DegenerateError> degenerate(m, "DegenerateError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SingularityError& e) {
      // args = (message, location)
      PyErr_SetObject(singular.ptr(), py::make_tuple(e.what(), e.location()).ptr());
    } catch (const DegenerateError& e) {
      PyErr_SetObject(degenerate.ptr(), py::make_tuple(e.what(), e.norm()).ptr());
    } catch (const ConvergenceError& e) {
      py::set_error(convergence, e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const OverflowError& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    }
  });

  py::class_<PTParams>(m, "PTParams")
      .def(py::init(&PTParams::from_alpha_g), py::arg("alpha"), py::arg("g"))
      .def_static("from_alpha_g", &PTParams::from_alpha_g, py::arg("alpha"), py::arg("g"))
      .def_static("from_alpha_lambda", &PTParams::from_alpha_lambda, py::arg("alpha"),
                  py::arg("lam"))
      .def_property_readonly("alpha", &PTParams::alpha)
      .def_property_readonly("g", &PTParams::g)
      .def_property_readonly("lam", &PTParams::lambda)
      .def_property_readonly("depth", &PTParams::depth)
      .def("__repr__", [](const PTParams& p) {
        return "PTParams(alpha=" + py::repr(py::float_(p.alpha())).cast<std::string>() +
               ", g=" + py::repr(py::float_(p.g())).cast<std::string>() + ")";
      });

  m.def("ln_gamma", &specfun::ln_gamma, py::arg("x"));
  m.def(
      "hyp2f1",
      [](double a, double b, double c, double z) { return specfun::gauss_2f1({a, b, c}, z); },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));

  m.def("pt_potential", py::vectorize([](PTParams p, double x) { return pt_potential(p, x); }), py::arg("params"), py::arg("x"));
  m.def("ground_state", py::vectorize([](PTParams p, double x) { return ground_state(p, x); }), py::arg("params"), py::arg("x"));
  m.def(
      "analytic_spectrum", [](const PTParams& p) { return analytic_spectrum(p).energies; },
      py::arg("params"));
  m.def(
      "factorization",
      [](const PTParams& p) {
        const auto f = factorization(p);
        py::dict d;
        d["d_plus"] = f.d_plus;
        d["d_minus"] = f.d_minus;
        d["eps_plus"] = f.eps_plus;
        d["eps_minus"] = f.eps_minus;
        return d;
      },
      py::arg("params"));
  m.def(
      "is_transparent",
      [](const PTParams& p, double tol) {
        const auto t = is_transparent(p, tol);
        return py::make_tuple(t.transparent, t.k);
      },
      py::arg("params"), py::arg("tol") = 1e-9);

  m.def("m_function", py::vectorize([](PTParams p, double x) { return m_function(p, x); }), py::arg("params"), py::arg("x"));
  m.def("m_infinity", &m_infinity, py::arg("params"));
  m.def("l_function", py::vectorize([](PTParams p, double x) { return l_function(p, x); }), py::arg("params"), py::arg("x"));
  m.def("zeta_bound", &zeta_bound, py::arg("params"));
  m.def("zeta_from_minus_infinity_origin", &zeta_from_minus_infinity_origin, py::arg("params"),
        py::arg("zeta"));

  m.def(
      "beta",
      [](const PTParams& p, const std::string& branch, double d, py::array_t<double> x) {
        const auto c = branch_cfg(branch, d);
        return py::vectorize([&](double v) { return beta(p, c, v); })(x);
      },
      py::arg("params"), py::arg("branch"), py::arg("deformation"), py::arg("x"));
  m.def(
      "partner_potential",
      [](const PTParams& p, const std::string& branch, double d, py::array_t<double> x) {
        const auto c = branch_cfg(branch, d);
        return py::vectorize([&](double v) { return partner_potential(p, c, v); })(x);
      },
      py::arg("params"), py::arg("branch"), py::arg("deformation"), py::arg("x"));
  m.def(
      "singular_point",
      [](const PTParams& p, const std::string& branch, double d) {
        return singular_point(p, branch_cfg(branch, d));
      },
      py::arg("params"), py::arg("branch"), py::arg("deformation"));
  m.def("missing_state", py::vectorize([](PTParams p, double z, double x) { return missing_state(p, z, x); }), py::arg("params"), py::arg("zeta"),
        py::arg("x"));
  m.def("two_susy_potential", py::vectorize([](PTParams p, double z, double xi, double x) {
          return two_susy_potential(p, z, xi, x);
        }), py::arg("params"),
        py::arg("zeta"), py::arg("xi"), py::arg("x"));

  m.def(
      "delta_well",
      [](double g) {
        const auto w = delta_well(g);
        return py::make_tuple(w.energy, w.sigma);
      },
      py::arg("g"));
  m.def("delta_susy_beta", py::vectorize(&delta_susy_beta), py::arg("g"), py::arg("omega"),
        py::arg("x"));
  m.def("delta_susy_potential_regular", py::vectorize(&delta_susy_potential_regular),
        py::arg("g"), py::arg("xi"), py::arg("x"));
  m.def("delta_singular_point", &delta_singular_point, py::arg("g"), py::arg("xi"));

  m.def(
      "bound_spectrum",
      [](const PTParams& p, const std::string& which, double deformation, double tolerance) {
        std::vector<double> ana = analytic_spectrum(p).energies;
        Potential v = [p](double x) { return pt_potential(p, x); };
        double depth = p.depth();
        std::vector<double> poles;
        if (which != "V") {
          const auto c = branch_cfg(which, deformation);
          if (auto xs = singular_point(p, c)) poles.push_back(*xs);
          v = [p, c](double x) { return partner_potential(p, c, x); };
          if (c.branch == Branch::Plus) depth = -factorization(p).eps_plus;
        }
        double shallow = ana.front();
        for (double e : ana)
          if (std::abs(e) >= marginal_threshold(p.alpha())) shallow = e;
        SolverOptions o;
        o.tolerance = tolerance;
        o.marginal_energy = marginal_threshold(p.alpha());
        o.singular_points = poles;
        std::optional<NumericSpectrum> s;
        {
          py::gil_scoped_release release;
          s.emplace(bound_spectrum(v, oracle_grid(p.alpha(), depth, shallow), o));
        }
        return py::make_tuple(s->energies, s->error_estimates, s->marginal);
      },
      py::arg("params"), py::arg("which") = "V", py::arg("deformation") = 0.0,
      py::arg("tolerance") = 1e-6,
      "Numeric bound states of V ('V') or of a partner ('plus' / 'minus'). Returns "
      "(energies, error estimates, marginal flags).");

  m.def(
      "reflection_coefficient",
      [](const PTParams& p, double energy, double half_width, double h) {
        ScatteringResult r;
        {
          py::gil_scoped_release release;
          r = scatter([p](double x) { return pt_potential(p, x); }, energy,
                      Grid::symmetric(half_width, h));
        }
        return py::make_tuple(r.reflection, r.transmission);
      },
      py::arg("params"), py::arg("energy"), py::arg("half_width"), py::arg("h") = 0.02);

  m.def(
      "figure_preset",
      [](int figure) {
        py::dict out;
        for (const auto& f : figure_preset(figure)) out[py::str(f.name)] = table_dict(f.table);
        return out;
      },
      py::arg("figure"));
  m.def(
      "delta_limit_sweep",
      [](double g, double xi, const std::vector<double>& alphas) {
        return table_dict(delta_limit_sweep(g, xi, alphas));
      },
      py::arg("g"), py::arg("xi"), py::arg("alphas"));

  m.def(
      "verify",
      [](std::uint64_t seed) {
        VerifyOptions o;
        o.seed = seed;
        std::vector<std::tuple<std::string, bool, std::string>> out;
        std::vector<CheckResult> rs;
        {
          py::gil_scoped_release release;
          rs = verify_all(o);
        }
        for (const auto& r : rs) out.emplace_back(r.name, r.passed, r.detail);
        return out;
      },
      py::arg("seed") = VerifyOptions{}.seed);
}
