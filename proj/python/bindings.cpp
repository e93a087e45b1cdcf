#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pdmfisher/cli.hpp"
#include "pdmfisher/measures.hpp"
#include "pdmfisher/model.hpp"
#include "pdmfisher/oracle.hpp"
#include "pdmfisher/quadrature.hpp"
#include "pdmfisher/specfun.hpp"

namespace py = pybind11;

using namespace pdmf;

PYBIND11_MODULE(_pdmfisher, m) {
    m.doc() = "Bound states, Fisher information and uncertainty products of "
              "the solitonic position-dependent-mass system.";

    py::class_<model::SystemParams>(m, "SystemParams")
        .def_readonly("a", &model::SystemParams::a)
        .def_readonly("V0", &model::SystemParams::V0)
        .def_readonly("m0", &model::SystemParams::m0)
        .def_readonly("delta", &model::SystemParams::delta)
        .def_readonly("calV0", &model::SystemParams::calV0)
        .def_readonly("mu", &model::SystemParams::mu)
        .def_readonly("nu", &model::SystemParams::nu)
        .def_readonly("s", &model::SystemParams::s)
        .def_readonly("tau", &model::SystemParams::tau)
        .def("__repr__", [](const model::SystemParams& p) {
            return "SystemParams(a=" + std::to_string(p.a) +
                   ", calV0=" + std::to_string(p.calV0) +
                   ", mu=" + std::to_string(p.mu) + ")";
        });

    py::class_<model::QuantumState>(m, "QuantumState")
        .def_readonly("n", &model::QuantumState::n)
        .def_readonly("eps", &model::QuantumState::eps)
        .def_readonly("energy", &model::QuantumState::energy)
        .def_readonly("norm_sq", &model::QuantumState::norm_sq);

    m.def("derive_params", &model::derive_params, py::arg("a"), py::arg("V0"),
          py::arg("m0") = 1.0);
    m.def("params_from_calv0", &model::params_from_calv0, py::arg("calV0"),
          py::arg("a"), py::arg("m0") = 1.0);
    m.def("energy", &model::energy, py::arg("params"), py::arg("n"));
    m.def("normalization_sq", &model::normalization_sq);
    m.def("wavefunction_x", &model::wavefunction_x, py::arg("params"),
          py::arg("n"), py::arg("x"));
    m.def("wavefunction_rho", &model::wavefunction_rho, py::arg("params"),
          py::arg("n"), py::arg("rho"));
    m.def("wavefunction_dx", &model::wavefunction_dx);

    py::class_<measures::MeasureReport>(m, "MeasureReport")
        .def_readonly("n", &measures::MeasureReport::n)
        .def_readonly("a", &measures::MeasureReport::a)
        .def_readonly("x_mean", &measures::MeasureReport::x_mean)
        .def_readonly("x2_mean", &measures::MeasureReport::x2_mean)
        .def_readonly("dx", &measures::MeasureReport::dx)
        .def_readonly("p_mean", &measures::MeasureReport::p_mean)
        .def_readonly("p2_mean", &measures::MeasureReport::p2_mean)
        .def_readonly("dp", &measures::MeasureReport::dp)
        .def_readonly("heisenberg", &measures::MeasureReport::heisenberg)
        .def_readonly("fisher_x", &measures::MeasureReport::fisher_x)
        .def_readonly("i_rho", &measures::MeasureReport::i_rho)
        .def_readonly("i_gamma", &measures::MeasureReport::i_gamma)
        .def_readonly("variance", &measures::MeasureReport::variance)
        .def_readonly("cramer_rao_v", &measures::MeasureReport::cramer_rao_v)
        .def_readonly("cramer_rao_prod", &measures::MeasureReport::cramer_rao_prod);

    m.def(
        "fisher_quadrature",
        [](const model::SystemParams& p, int n, double tol, int nodes) {
            measures::Options opt;
            opt.tol = tol;
            opt.jacobi_nodes = nodes;
            return measures::fisher_quadrature(p, n, opt);
        },
        py::arg("params"), py::arg("n"), py::arg("tol") = 1e-11,
        py::arg("nodes") = 64);
    m.def("fisher_closed_form", &measures::fisher_closed_form);
    m.def(
        "x_moment",
        [](const model::SystemParams& p, int n, int power, double tol) {
            measures::Options opt;
            opt.tol = tol;
            return measures::x_moment(p, n, power, opt);
        },
        py::arg("params"), py::arg("n"), py::arg("power"),
        py::arg("tol") = 1e-11);
    m.def("x_mean_closed_form", &measures::x_mean_closed_form);
    m.def(
        "p2_mean",
        [](const model::SystemParams& p, int n) {
            return measures::p2_mean(p, n);
        },
        py::arg("params"), py::arg("n"));
    m.def(
        "report",
        [](const model::SystemParams& p, int n) {
            return measures::report(p, n);
        },
        py::arg("params"), py::arg("n"));

    py::class_<oracle::SpectrumEstimate>(m, "SpectrumEstimate")
        .def_readonly("eigenvalues", &oracle::SpectrumEstimate::eigenvalues)
        .def_readonly("fine_grid_values",
                      &oracle::SpectrumEstimate::fine_grid_values)
        .def_readonly("richardson_error",
                      &oracle::SpectrumEstimate::richardson_error)
        .def_readonly("grid_points", &oracle::SpectrumEstimate::grid_points)
        .def_readonly("z_margin", &oracle::SpectrumEstimate::z_margin);

    m.def("solve_spectrum", &oracle::solve_spectrum, py::arg("calV0"),
          py::arg("grid_points"), py::arg("num_levels"));

    m.def("jacobi_eval", [](double alpha, double beta, int n, double x) {
        return specfun::jacobi_eval(specfun::JacobiParams(alpha, beta, n), x);
    });
    m.def("digamma", &specfun::digamma);
    m.def("log_gamma", &specfun::log_gamma);
    m.def("harmonic", &specfun::harmonic);
    m.def("pochhammer", &specfun::pochhammer);
}
