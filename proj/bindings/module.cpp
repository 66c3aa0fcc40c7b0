// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spindimer/analytic4.hpp"
#include "spindimer/entanglement.hpp"
#include "spindimer/errors.hpp"
#include "spindimer/fullspace.hpp"
#include "spindimer/sweep.hpp"
#include "spindimer/verify.hpp"
#include "spindimer/version.hpp"

namespace py = pybind11;
using namespace spindimer;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact diagonalization and pairwise entanglement of dimerized "
              "Heisenberg rings";
    m.attr("__version__") = kVersion;

    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<DegeneracyError>(m, "DegeneracyError", PyExc_RuntimeError);

    py::class_<CouplingParams>(m, "CouplingParams")
        .def(py::init<int, double, double>(), py::arg("num_sites"), py::arg("j1"),
             py::arg("j2"))
        .def_readwrite("num_sites", &CouplingParams::num_sites)
        .def_readwrite("j1", &CouplingParams::j1)
        .def_readwrite("j2", &CouplingParams::j2)
        .def("__repr__", [](const CouplingParams& p) {
            std::ostringstream s;
            s << "CouplingParams(num_sites=" << p.num_sites << ", j1=" << p.j1
              << ", j2=" << p.j2 << ")";
            return s.str();
        });

    py::enum_<SolverMethod>(m, "SolverMethod")
        .value("Dense", SolverMethod::Dense)
        .value("Lanczos", SolverMethod::Lanczos)
        .value("Auto", SolverMethod::Auto);

    py::class_<SolveOptions>(m, "SolveOptions")
        .def(py::init<>())
        .def_readwrite("method", &SolveOptions::method)
        .def_readwrite("seed", &SolveOptions::seed)
        .def_readwrite("search_all_sectors", &SolveOptions::search_all_sectors)
        .def_readwrite("max_iterations", &SolveOptions::max_iterations);

    py::class_<GroundState>(m, "GroundState")
        .def_readonly("params", &GroundState::params)
        .def_readonly("sector_r", &GroundState::sector_r)
        .def_readonly("energy", &GroundState::energy)
        .def_readonly("gap", &GroundState::gap)
        .def_readonly("coefficients", &GroundState::coefficients)
        .def_readonly("method", &GroundState::method)
        .def_readonly("converged", &GroundState::converged)
        .def_readonly("residual", &GroundState::residual);

    py::class_<ConcurrenceReport>(m, "ConcurrenceReport")
        .def_readonly("params", &ConcurrenceReport::params)
        .def_readonly("c12_signed", &ConcurrenceReport::c12_signed)
        .def_readonly("c23_signed", &ConcurrenceReport::c23_signed)
        .def_readonly("c12", &ConcurrenceReport::c12)
        .def_readonly("c23", &ConcurrenceReport::c23)
        .def_readonly("c_mean_signed", &ConcurrenceReport::c_mean_signed)
        .def_readonly("c_mean", &ConcurrenceReport::c_mean)
        .def_readonly("energy", &ConcurrenceReport::energy)
        .def_readonly("gap", &ConcurrenceReport::gap)
        .def_readonly("energy_relation_residual",
                      &ConcurrenceReport::energy_relation_residual)
        .def_readonly("degenerate", &ConcurrenceReport::degenerate);

    m.def("ground_state", &ground_state, py::arg("params"),
          py::arg("options") = SolveOptions{},
          "Lowest eigenpair of the ring (r = N/2 sector by default)");
    m.def("is_degenerate", &is_degenerate, py::arg("ground_state"));
    m.def("signed_concurrence", &signed_concurrence, py::arg("ground_state"),
          py::arg("site_a"), py::arg("site_b"),
          "-<S_ab>; equals the concurrence when nonnegative");
    m.def("wootters_concurrence", &wootters_concurrence, py::arg("ground_state"),
          py::arg("site_a"), py::arg("site_b"),
          "Concurrence from the two-site reduced density matrix");
    m.def(
        "reduced_density_matrix",
        [](const GroundState& gs, int a, int b) -> Eigen::MatrixXd {
            return reduced_density_matrix(gs, a, b);
        },
        py::arg("ground_state"), py::arg("site_a"), py::arg("site_b"));
    m.def("concurrence_report",
          [](const GroundState& gs) { return concurrence_report(gs); },
          py::arg("ground_state"));
    m.def(
        "mean_concurrence",
        [](const GroundState& gs) {
            const MeanConcurrence mean = mean_concurrence(gs);
            return py::make_tuple(mean.signed_mean, mean.clipped_mean);
        },
        py::arg("ground_state"), "(signed_mean, clipped_mean) over all ring bonds");
    m.def("feynman_hellmann_check", &feynman_hellmann_check, py::arg("params"),
          py::arg("h"), py::arg("options") = SolveOptions{});

    m.def(
        "full_spectrum",
        [](const CouplingParams& params) {
            const SpectrumReport report = full_spectrum(params);
            return py::make_tuple(report.eigenvalues, report.sector_breakdown);
        },
        py::arg("params"), "(sorted eigenvalues, {r: sector eigenvalues})");
    m.def("full_space_spectrum", &full_space_spectrum, py::arg("params"),
          "Eigenvalues of the naive full 2^N matrix (N <= 12)");

    auto analytic = m.def_submodule(
        "analytic4", "Closed forms for the four-site ring");
    analytic.def("ground_energy", &analytic4::ground_energy, py::arg("j1"),
                 py::arg("j2"));
    analytic.def("c12", &analytic4::c12, py::arg("j1"), py::arg("j2"));
    analytic.def("c23", &analytic4::c23, py::arg("j1"), py::arg("j2"));
    analytic.def("c_mean", &analytic4::c_mean, py::arg("j1"), py::arg("j2"));
    analytic.def(
        "spectrum",
        [](double j1, double j2) { return analytic4::full_spectrum(j1, j2).expanded(); },
        py::arg("j1"), py::arg("j2"), "The sixteen eigenvalues, ascending");
    analytic.def(
        "thresholds",
        [](double j1) {
            const analytic4::Thresholds4 th = analytic4::thresholds(j1);
            return py::make_tuple(th.j2_low, th.j2_high);
        },
        py::arg("j1"), "(J2 where C23 appears, J2 where C12 dies)");

    py::class_<SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("num_sites", &SweepConfig::num_sites)
        .def_readwrite("j1", &SweepConfig::j1)
        .def_readwrite("j2_min", &SweepConfig::j2_min)
        .def_readwrite("j2_max", &SweepConfig::j2_max)
        .def_readwrite("steps", &SweepConfig::steps)
        .def_readwrite("method", &SweepConfig::method)
        .def_readwrite("seed", &SweepConfig::seed)
        .def_readwrite("ratio_grid", &SweepConfig::ratio_grid)
        .def_readwrite("threads", &SweepConfig::threads);

    py::class_<Thresholds>(m, "Thresholds")
        .def_readonly("j2th_12", &Thresholds::j2th_12)
        .def_readonly("j2th_23", &Thresholds::j2th_23);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("rows", &SweepResult::rows)
        .def_readonly("argmax_cmean", &SweepResult::argmax_cmean)
        .def_readonly("thresholds", &SweepResult::thresholds);

    m.def("run_sweep", &run_sweep, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());

    py::enum_<BondClass>(m, "BondClass")
        .value("C12", BondClass::C12)
        .value("C23", BondClass::C23);
    m.def("find_threshold", &find_threshold, py::arg("num_sites"), py::arg("j1"),
          py::arg("which"), py::arg("bracket"), py::arg("options") = SolveOptions{},
          py::arg("tol") = 1e-8);

    py::class_<VerificationCheck>(m, "VerificationCheck")
        .def_readonly("name", &VerificationCheck::name)
        .def_readonly("sizes", &VerificationCheck::sizes)
        .def_readonly("max_deviation", &VerificationCheck::max_deviation)
        .def_readonly("tolerance", &VerificationCheck::tolerance)
        .def_readonly("passed", &VerificationCheck::passed);
    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("checks", &VerificationReport::checks)
        .def("all_passed", &VerificationReport::all_passed);
    m.def("verify", &verify, py::arg("n_list"), py::arg("seed") = 42);
}
