#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/eigen.h>

#include <cmath>

#include "conegeom/affine_surface.hpp"
#include "conegeom/asymptotics.hpp"
#include "conegeom/bodies.hpp"
#include "conegeom/centroid.hpp"
#include "conegeom/config.hpp"
#include "conegeom/entropy.hpp"
#include "conegeom/errors.hpp"
#include "conegeom/experiments.hpp"
#include "conegeom/geometry.hpp"
#include "conegeom/omega.hpp"

namespace py = pybind11;
using namespace conegeom;

namespace {

// bodies cross the boundary as JSON text; the python side does json.dumps
BodyPtr body_of(const std::string& spec, const QuadratureConfig& cfg) { return parse_body(spec, cfg); }

py::dict fit_dict(const LimitFit& f) {
  py::dict d;
  d["limit"] = f.limit;
  d["model"] = f.model;
  d["coefficients"] = f.coefficients;
  d["fit_residual"] = f.fit_residual;
  d["reliable"] = f.reliable;
  d["grid"] = f.grid;
  d["samples"] = f.samples;
  return d;
}

py::dict expansion_dict(const ExpansionResult& r) {
  py::dict d;
  d["n"] = r.n;
  d["a"] = r.a;
  d["p"] = r.p;
  d["exact"] = static_cast<double>(r.exact);
  d["expansion"] = r.expansion;
  d["residual"] = r.residual;
  d["p2_residual"] = r.p2_residual;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<GeometryError> geometry_error(m, "GeometryError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GeometryError& e) {
      py::handle type = geometry_error;
      py::object inst = type(e.what());
      // .kind lets callers branch without parsing the message
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(type.ptr(), inst.ptr());
    }
  });

  py::class_<QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init<>())
      .def_readwrite("sphere_tol", &QuadratureConfig::sphere_tol)
      .def_readwrite("max_nodes", &QuadratureConfig::max_nodes)
      .def_readwrite("mc_samples", &QuadratureConfig::mc_samples)
      .def_readwrite("seed", &QuadratureConfig::seed)
      .def_readwrite("threads", &QuadratureConfig::threads);

  m.def("describe", [](const std::string& b) { return body_of(b, {})->describe(); });
  m.def("support", [](const std::string& b, const Vec& u) { return body_of(b, {})->support(u); });
  m.def("radial", [](const std::string& b, const Vec& u) { return body_of(b, {})->radial(u); });
  m.def("volume", [](const std::string& b, const QuadratureConfig& c) { return volume(*body_of(b, c), c).value; },
        py::arg("body"), py::arg("cfg") = QuadratureConfig{});
  m.def("polar_volume",
        [](const std::string& b, const QuadratureConfig& c) { return polar_volume(*body_of(b, c), c).value; },
        py::arg("body"), py::arg("cfg") = QuadratureConfig{});

  m.def("as_p",
        [](const std::string& b, double p, const QuadratureConfig& c) {
          return as_p(*body_of(b, c), Exponent::from_double(p), c).value;
        },
        py::arg("body"), py::arg("p"), py::arg("cfg") = QuadratureConfig{});

  m.def("omega_entropy", [](const std::string& b, const QuadratureConfig& c) { return omega_entropy(*body_of(b, c), c); },
        py::arg("body"), py::arg("cfg") = QuadratureConfig{});
  m.def("omega_p_limit",
        [](const std::string& b, const QuadratureConfig& c) {
          return fit_dict(omega_p_limit(*body_of(b, c), default_p_grid(), c));
        },
        py::arg("body"), py::arg("cfg") = QuadratureConfig{});
  m.def("omega_lp_closed_form", &omega_lp_closed_form, py::arg("n"), py::arg("r"));

  m.def("kl_p_q", [](const std::string& b, const QuadratureConfig& c) { return kl_p_q(*body_of(b, c), c); },
        py::arg("body"), py::arg("cfg") = QuadratureConfig{});
  m.def("kl_q_p", [](const std::string& b, const QuadratureConfig& c) { return kl_q_p(*body_of(b, c), c); },
        py::arg("body"), py::arg("cfg") = QuadratureConfig{});

  m.def("zp_support",
        [](const std::string& b, double p, const Vec& theta, const QuadratureConfig& c) {
          return zp_support(*body_of(b, c), p, UnitDirection(theta), c);
        },
        py::arg("body"), py::arg("p"), py::arg("theta"), py::arg("cfg") = QuadratureConfig{});
  m.def("floating_support",
        [](const std::string& b, double delta, const Vec& theta, const QuadratureConfig& c) {
          return floating_support(*body_of(b, c), delta, UnitDirection(theta), c);
        },
        py::arg("body"), py::arg("delta"), py::arg("theta"), py::arg("cfg") = QuadratureConfig{});

  m.def("beta_power_expansion",
        [](int n, double p, bool printed) {
          return expansion_dict(beta_power_expansion(n, p, printed ? LemmaConstant::printed : LemmaConstant::corrected));
        },
        py::arg("n"), py::arg("p"), py::arg("printed") = false);
  m.def("weighted_beta_expansion",
        [](int n, double p, double a) { return expansion_dict(weighted_beta_expansion(n, p, a)); }, py::arg("n"),
        py::arg("p"), py::arg("a"));
  m.def("stirling_rel_error", [](double x) { return stirling_terms(x).rel_error; });

  m.def("section5_closed_form", &section5_closed_form, py::arg("n"), py::arg("r"));
  m.def("section5_integral",
        [](int n, double r, std::uint64_t samples, std::uint64_t seed, int threads) {
          auto s = section5_integral(n, r, samples, seed, threads);
          py::dict d;
          d["mc_value"] = s.mc_value;
          d["std_error"] = s.std_error;
          d["closed_form"] = s.closed_form;
          d["z_score"] = s.z_score;
          return d;
        },
        py::arg("n"), py::arg("r"), py::arg("samples"), py::arg("seed") = 42, py::arg("threads") = 1);
}
