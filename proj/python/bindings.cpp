#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <vector>

#include "chordal/capacity.hpp"
#include "chordal/errors.hpp"
#include "chordal/grunsky.hpp"
#include "chordal/io.hpp"
#include "chordal/loewner.hpp"
#include "chordal/transforms.hpp"

namespace py = pybind11;
using namespace chordal;

namespace {

// Only built-in densities cross the boundary: solver threads never call back
// into Python.
DensitySegment named_segment(const std::string& name, double lo, double hi,
                             double weight, int order) {
  Density d;
  if (name == "semicircle") {
    d = densities::semicircle(lo, hi);
  } else if (name == "arcsine") {
    d = densities::arcsine(lo, hi);
  } else if (name == "uniform") {
    d = densities::uniform(lo, hi);
  } else {
    throw DomainError("unknown density '" + name + "'");
  }
  if (weight != 1.0) d = [d, weight](double x) { return weight * d(x); };
  return {lo, hi, std::move(d), order};
}

py::dict grunsky_dict(const GrunskyReport& r) {
  py::dict d;
  d["N"] = r.N;
  d["c_matrix"] = r.c_matrix.to_rows();
  d["eigenvalues"] = r.eigenvalues;
  d["max_abs_eigenvalue"] = r.max_abs_eigenvalue;
  d["verdict"] = to_string(r.verdict);
  d["boundary_tol"] = r.boundary_tol;
  d["symmetry_defect"] = r.symmetry_defect;
  return d;
}

py::dict capacity_dict(const CapacityReport& r) {
  py::dict d;
  d["n_points"] = r.n_points;
  d["d_image"] = r.d_image;
  d["d_interval"] = r.d_interval;
  d["ratio"] = r.ratio;
  d["self_intersects"] = r.self_intersects;
  d["unbounded"] = r.unbounded;
  d["epsilon"] = r.epsilon;
  d["verdict"] = to_string(r.verdict);
  return d;
}

}  // namespace

PYBIND11_MODULE(_chordal, m) {
  m.doc() = "Chordal Loewner evolution and univalence diagnostics";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<RealMeasure>(m, "Measure")
      .def_static("dirac", &RealMeasure::dirac, py::arg("position"),
                  py::arg("weight") = 1.0)
      .def_static(
          "atoms",
          [](const std::vector<std::pair<double, double>>& atoms) {
            std::vector<Atom> a;
            for (const auto& [x, w] : atoms) a.push_back({x, w});
            return RealMeasure(std::move(a), {});
          },
          py::arg("atoms"), "Measure from (position, weight) pairs.")
      .def_static(
          "density",
          [](const std::string& name, double lo, double hi, double weight, int order) {
            return RealMeasure({}, {named_segment(name, lo, hi, weight, order)});
          },
          py::arg("name"), py::arg("lo"), py::arg("hi"), py::arg("weight") = 1.0,
          py::arg("order") = 64,
          "Named density ('semicircle', 'arcsine', 'uniform') on [lo, hi].")
      .def_property_readonly("mass", &RealMeasure::mass)
      .def("support_hull", &RealMeasure::support_hull)
      .def("pushforward", &affine_pushforward, py::arg("scale"), py::arg("shift"));

  m.def("measure_from_json", &io::measure_from_json, py::arg("text"));
  m.def("cauchy_transform", &cauchy_transform, py::arg("mu"), py::arg("z"));
  m.def("reciprocal_cauchy", &reciprocal_cauchy, py::arg("mu"), py::arg("z"));
  m.def("moment", &moment, py::arg("mu"), py::arg("n"));
  m.def(
      "stieltjes_invert",
      [](const RealMeasure& mu, std::pair<double, double> interval,
         std::vector<double> eps_ladder) {
        return stieltjes_invert([&](cplx z) { return cauchy_transform(mu, z); },
                                interval, eps_ladder);
      },
      py::arg("mu"), py::arg("interval"),
      py::arg("eps_ladder") = std::vector<double>{0.1, 0.05, 0.025, 0.0125},
      "mu((a,b)) + mu([a,b]) from boundary values of the Cauchy transform.");

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init([](double tol, double max_step, double margin) {
             SolverConfig c;
             c.tol = tol;
             c.max_step = max_step;
             c.contraction_margin = margin;
             c.validate();
             return c;
           }),
           py::arg("tol") = 1e-9, py::arg("max_step") = 1.0,
           py::arg("contraction_margin") = 0.5)
      .def_readonly("tol", &SolverConfig::tol)
      .def_readonly("max_step", &SolverConfig::max_step)
      .def_readonly("contraction_margin", &SolverConfig::contraction_margin);

  py::class_<DriverFamily>(m, "DriverFamily")
      .def_static("constant", &DriverFamily::constant, py::arg("mu"), py::arg("horizon"))
      .def_static("piecewise_constant", &DriverFamily::piecewise_constant,
                  py::arg("breaks"), py::arg("measures"), py::arg("horizon"))
      .def_static("moving_atom", &DriverFamily::moving_atom, py::arg("samples"))
      .def_property_readonly("horizon", &DriverFamily::horizon);

  m.def("driver_from_json", &io::driver_from_json, py::arg("text"));
  m.def(
      "solve_transition",
      [](const DriverFamily& f, double a, double b, cplx z, const SolverConfig& c) {
        const TransitionResult r = solve_transition(f, a, b, z, c);
        return py::make_tuple(r.value, r.err_bound);
      },
      py::arg("family"), py::arg("a"), py::arg("b"), py::arg("z"),
      py::arg("config") = SolverConfig{}, "B(a, b; z) and its error bound.");
  m.def(
      "evaluate_map",
      [](const DriverFamily& f, double t, const std::vector<cplx>& zs,
         const SolverConfig& c, unsigned threads) {
        std::vector<TransitionResult> results;
        {
          py::gil_scoped_release release;
          results = evaluate_map_many(f, t, zs, c, threads);
        }
        std::vector<cplx> values;
        std::vector<double> bounds;
        for (const TransitionResult& r : results) {
          values.push_back(r.value);
          bounds.push_back(r.err_bound);
        }
        return py::make_tuple(values, bounds);
      },
      py::arg("family"), py::arg("t"), py::arg("zs"), py::arg("config") = SolverConfig{},
      py::arg("threads") = 0u, "f(t; z) for each z: (values, error bounds).");
  m.def("hydrodynamic_parameter", &hydrodynamic_parameter, py::arg("family"),
        py::arg("t"), py::arg("config") = SolverConfig{});
  m.def(
      "semigroup_defect",
      [](const DriverFamily& f, double a, double b, double c, const std::vector<cplx>& zs,
         const SolverConfig& config) { return semigroup_defect(f, a, b, c, zs, config); },
      py::arg("family"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("zs"),
      py::arg("config") = SolverConfig{});

  m.def(
      "univalence_certificate",
      [](const std::vector<double>& moments, int N, double boundary_tol) {
        return grunsky_dict(univalence_certificate(moments, N, boundary_tol));
      },
      py::arg("moments"), py::arg("N"), py::arg("boundary_tol") = 1e-8);
  m.def(
      "hayman_report",
      [](const RealMeasure& mu, int n, int resolution, double epsilon, int sweeps) {
        return capacity_dict(hayman_report(mu, n, resolution, epsilon, sweeps));
      },
      py::arg("mu"), py::arg("n") = 64, py::arg("resolution") = 2048,
      py::arg("epsilon") = 4e-3, py::arg("sweeps") = 20);
}
