#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mhd/diagnostics.hpp"
#include "mhd/dissipation.hpp"
#include "mhd/experiment.hpp"
#include "mhd/flux.hpp"
#include "mhd/grid.hpp"
#include "mhd/means.hpp"
#include "mhd/problems.hpp"
#include "mhd/state.hpp"

namespace py = pybind11;
using namespace mhd;

namespace {

ConsState cons_from(const Vec8& q) {
  ConsState c;
  c.q = q;
  return c;
}

}  // namespace

PYBIND11_MODULE(_mhd_esfv, m) {
  m.doc() = "Entropy conserving and entropy stable finite volume fluxes for ideal MHD";

  py::enum_<Direction>(m, "Direction")
      .value("X", Direction::X)
      .value("Y", Direction::Y)
      .value("Z", Direction::Z);

  py::register_exception<StateError>(m, "StateError", PyExc_ValueError);
  py::register_exception<NonPositiveInput>(m, "NonPositiveInput", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<SolverBreakdown>(m, "SolverBreakdown", PyExc_RuntimeError);

  py::class_<PrimState>(m, "PrimState")
      .def(py::init<>())
      .def(py::init([](double rho, double u, double v, double w, double p, double B1, double B2,
                       double B3) { return PrimState{rho, u, v, w, p, B1, B2, B3}; }),
           py::arg("rho"), py::arg("u"), py::arg("v"), py::arg("w"), py::arg("p"), py::arg("B1"),
           py::arg("B2"), py::arg("B3"))
      .def_readwrite("rho", &PrimState::rho)
      .def_readwrite("u", &PrimState::u)
      .def_readwrite("v", &PrimState::v)
      .def_readwrite("w", &PrimState::w)
      .def_readwrite("p", &PrimState::p)
      .def_readwrite("B1", &PrimState::B1)
      .def_readwrite("B2", &PrimState::B2)
      .def_readwrite("B3", &PrimState::B3)
      .def("__repr__", [](const PrimState& s) {
        return "PrimState(rho=" + std::to_string(s.rho) + ", p=" + std::to_string(s.p) + ")";
      });

  py::class_<EntropyQuantities>(m, "EntropyQuantities")
      .def_readonly("s", &EntropyQuantities::s)
      .def_readonly("U", &EntropyQuantities::U)
      .def_readonly("flux", &EntropyQuantities::flux)
      .def_readonly("potential", &EntropyQuantities::potential);

  m.def("prim_to_cons", [](const PrimState& p, double g) { return prim_to_cons(p, g).q; },
        py::arg("prim"), py::arg("gamma"));
  m.def("cons_to_prim", [](const Vec8& q, double g) { return cons_to_prim(cons_from(q), g); },
        py::arg("cons"), py::arg("gamma"));
  m.def("entropy_vars", py::overload_cast<const PrimState&, double>(&entropy_vars),
        py::arg("prim"), py::arg("gamma"));
  m.def("entropy_quantities", py::overload_cast<const PrimState&, double>(&entropy_quantities),
        py::arg("prim"), py::arg("gamma"));
  m.def("entropy_jacobian", &entropy_jacobian, py::arg("prim"), py::arg("gamma"));
  m.def("physical_flux", &physical_flux, py::arg("prim"), py::arg("gamma"),
        py::arg("direction") = Direction::X);

  m.def("log_mean", &log_mean, py::arg("a"), py::arg("b"));

  m.def("ec_flux", &ec_flux, py::arg("left"), py::arg("right"), py::arg("gamma"),
        py::arg("direction") = Direction::X);
  m.def("ekec_flux", &ekec_flux, py::arg("left"), py::arg("right"), py::arg("gamma"),
        py::arg("direction") = Direction::X);
  m.def("es_roe_flux", &es_roe_flux, py::arg("left"), py::arg("right"), py::arg("gamma"),
        py::arg("direction") = Direction::X);
  m.def("es_llf_flux", &es_llf_flux, py::arg("left"), py::arg("right"), py::arg("gamma"),
        py::arg("direction") = Direction::X);
  m.def(
      "interface_source",
      [](const PrimState& l, const PrimState& r, double dxl, double dxr, double g, Direction d) {
        return janhunen_interface_source(l, r, dxl, dxr, g, d).s;
      },
      py::arg("left"), py::arg("right"), py::arg("dx_left"), py::arg("dx_right"),
      py::arg("gamma"), py::arg("direction") = Direction::X);

  py::class_<WaveSpeeds>(m, "WaveSpeeds")
      .def_readonly("a", &WaveSpeeds::a)
      .def_readonly("c_a", &WaveSpeeds::c_a)
      .def_readonly("c_f", &WaveSpeeds::c_f)
      .def_readonly("c_s", &WaveSpeeds::c_s)
      .def_readonly("b_perp", &WaveSpeeds::b_perp);
  py::class_<EigenSystem>(m, "EigenSystem")
      .def_readonly("eigenvalues", &EigenSystem::lambda)
      .def_readonly("right_eigenvectors", &EigenSystem::Rhat)
      .def_readonly("scaling", &EigenSystem::S)
      .def_readonly("alpha_f", &EigenSystem::alpha_f)
      .def_readonly("alpha_s", &EigenSystem::alpha_s);
  m.def("wave_speeds", &wave_speeds, py::arg("prim"), py::arg("gamma"),
        py::arg("direction") = Direction::X);
  m.def("eigen_system", &eigen_system, py::arg("prim"), py::arg("gamma"),
        py::arg("direction") = Direction::X);

  m.def(
      "eoc",
      [](const std::vector<double>& errors, const std::vector<std::size_t>& cells) {
        const EocResult r = eoc(errors, cells);
        return py::make_tuple(r.rates, r.mean);
      },
      py::arg("errors"), py::arg("cells"));
  m.def(
      "stretched_widths",
      [](std::size_t n, double xmin, double xmax, double ratio) {
        return make_stretched_grid(n, xmin, xmax, ratio).widths;
      },
      py::arg("n"), py::arg("xmin"), py::arg("xmax"), py::arg("ratio"));

  m.def(
      "run_experiment",
      [](const std::string& experiment, const std::map<std::string, std::string>& options) {
        const RunConfig c = make_run_config(experiment, options);
        py::gil_scoped_release release;
        return run_experiment(c).files;
      },
      py::arg("experiment"), py::arg("options") = std::map<std::string, std::string>{},
      "Run a study; returns the paths of the CSV files written.");
}
