// Python bindings for the peakon laboratory core: grids, fields, the spectral
// toolkit, the system right-hand sides, the solver, and the region classifier.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "peakon/experiments.hpp"
#include "peakon/regions.hpp"

namespace py = pybind11;
using namespace peakon;

namespace {

Field field_from_array(const PeriodicGrid& grid, const py::array_t<double>& samples) {
  const auto buf = samples.request();
  if (buf.ndim != 1 || buf.shape[0] != grid.size()) {
    throw std::invalid_argument("samples must be a 1-D array of length grid.size()");
  }
  const double* data = static_cast<const double*>(buf.ptr);
  return Field::from_samples(grid, std::vector<double>(data, data + grid.size()));
}

py::array_t<double> samples_array(const Field& f) {
  py::array_t<double> out(f.size());
  std::copy(f.samples().begin(), f.samples().end(), out.mutable_data());
  return out;
}

py::array_t<std::complex<double>> spectrum_array(const Field& f) {
  py::array_t<std::complex<double>> out(f.grid().num_bins());
  std::copy(f.spectrum().begin(), f.spectrum().end(), out.mutable_data());
  return out;
}

py::dict region_dict(const RegionResult& r) {
  py::dict d;
  d["region"] = r.region_id;
  d["exponent"] = r.exponent;
  d["eps_used"] = r.eps_used;
  return d;
}

}  // namespace

PYBIND11_MODULE(_peakon_lab, m) {
  m.doc() = "pseudo-spectral laboratory for the two-component cubic peakon system";

  py::class_<PeriodicGrid>(m, "PeriodicGrid")
      .def(py::init<int>(), py::arg("n_points"))
      .def_property_readonly("size", &PeriodicGrid::size)
      .def_property_readonly("dx", &PeriodicGrid::dx)
      .def("node", &PeriodicGrid::node)
      .def("nodes", [](const PeriodicGrid& g) {
        py::array_t<double> out(g.size());
        for (int j = 0; j < g.size(); ++j) out.mutable_data()[j] = g.node(j);
        return out;
      });

  py::class_<Field>(m, "Field")
      .def_static("zeros", &Field::zeros)
      .def_static("from_samples", &field_from_array)
      .def_static("harmonic", &Field::harmonic, py::arg("grid"), py::arg("k"),
                  py::arg("cos_amp"), py::arg("sin_amp"))
      .def_property_readonly("grid", &Field::grid)
      .def_property_readonly("samples", &samples_array)
      .def_property_readonly("spectrum", &spectrum_array)
      .def("coefficient", &Field::coefficient)
      .def("__add__", [](const Field& a, const Field& b) { return a + b; })
      .def("__sub__", [](const Field& a, const Field& b) { return a - b; })
      .def("__rmul__", [](const Field& f, double a) { return a * f; })
      .def("__neg__", [](const Field& f) { return -f; });

  m.def("derivative", py::overload_cast<const Field&>(&derivative));
  m.def("bessel", &bessel, py::arg("f"), py::arg("s"),
        "Bessel potential D^s = (1 - d^2/dx^2)^(s/2)");
  m.def("helmholtz_solve_dx", &helmholtz_solve_dx);
  m.def("mollify", &mollify, py::arg("f"), py::arg("eps"));
  m.def("mollifier_symbol", &mollifier_symbol);
  m.def("multiply", &multiply, "dealiased pointwise product");
  m.def("sobolev_norm", &sobolev_norm, py::arg("f"), py::arg("s"));
  m.def("integral", &integral);
  m.def("reflect", &reflect);

  py::class_<State>(m, "State")
      .def(py::init<Field, Field, Field, Field>())
      .def_static("from_data", &State::from_data, py::arg("u0"), py::arg("v0"))
      .def_readonly("u", &State::u)
      .def_readonly("w", &State::w)
      .def_readonly("v", &State::v)
      .def_readonly("z", &State::z)
      .def("pair_norm", &State::pair_norm);

  m.def("reformulated_rhs", &reformulated_rhs);
  m.def("mollified_rhs", &mollified_rhs, py::arg("state"), py::arg("eps"));
  m.def("conservative_rhs", [](const State& st) {
    const auto [dm, dn] = conservative_rhs(momentum_from_state(st), st);
    return py::make_tuple(dm, dn);
  });
  m.def("hamiltonian_h1", &hamiltonian_h1);
  m.def("hamiltonian_h2", &hamiltonian_h2);
  m.def("peakon_profile", &peakon_profile, py::arg("c"), py::arg("t"), py::arg("grid"));
  m.def("mkdv_hierarchy_rhs", [](const Field& mt, const Field& nt) {
    const HierarchyState d = mkdv_hierarchy_rhs({mt, nt});
    return py::make_tuple(d.mt, d.nt);
  });

  m.def("lifespan", &lifespan, py::arg("u0_norm"), py::arg("v0_norm"), py::arg("c_s"),
        py::arg("delta0"));
  m.def("lifespan_rho", &lifespan_rho, py::arg("rho"), py::arg("c_s"), py::arg("delta0"));
  m.def("calibrated_cs", &calibrated_cs);
  m.def("rk4_step", &rk4_step, py::arg("state"), py::arg("dt"), py::arg("eps") = 0.0);

  py::class_<SolveConfig>(m, "SolveConfig")
      .def(py::init<>())
      .def_readwrite("s", &SolveConfig::s)
      .def_readwrite("delta0", &SolveConfig::delta0)
      .def_readwrite("c_s", &SolveConfig::c_s)
      .def_readwrite("eps", &SolveConfig::eps)
      .def_readwrite("dt", &SolveConfig::dt)
      .def_readwrite("t_final", &SolveConfig::t_final)
      .def_readwrite("n_points", &SolveConfig::n_points)
      .def_readwrite("record_every", &SolveConfig::record_every)
      .def_readwrite("cfl", &SolveConfig::cfl)
      .def_readwrite("allow_beyond_lifespan", &SolveConfig::allow_beyond_lifespan);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("times", &Trajectory::times)
      .def_readonly("norm_u", &Trajectory::norm_u)
      .def_readonly("norm_v", &Trajectory::norm_v)
      .def_readonly("norm_uv_pair", &Trajectory::norm_uv_pair)
      .def_readonly("h1", &Trajectory::h1)
      .def_readonly("h2", &Trajectory::h2)
      .def_readonly("consistency", &Trajectory::consistency)
      .def_readonly("dt_used", &Trajectory::dt_used)
      .def_readonly("blew_up", &Trajectory::blew_up)
      .def_readonly("blowup_time", &Trajectory::blowup_time)
      .def("state", [](const Trajectory& t, size_t i) { return t.states.at(i); })
      .def("__len__", [](const Trajectory& t) { return t.times.size(); });

  m.def("solve", &solve, py::arg("u0"), py::arg("v0"), py::arg("config"));

  m.def("classify_gamma", [](double s, double r, double eps0) {
    return region_dict(classify_gamma(s, r, eps0));
  }, py::arg("s"), py::arg("r"), py::arg("eps0") = -1.0);
  m.def("classify_mu", [](double s, double p, double eps1) {
    return region_dict(classify_mu(s, p, eps1));
  }, py::arg("s"), py::arg("p"), py::arg("eps1") = -1.0);

#ifdef PEAKON_VERSION
  m.attr("__version__") = PEAKON_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
