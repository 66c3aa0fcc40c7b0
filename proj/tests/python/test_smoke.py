# Copyright 2026 The Spindimer Authors
# SPDX-License-Identifier: Apache-2.0
"""End-to-end smoke tests for the Python bindings."""

import math

import pytest

import spindimer as sd


def test_ground_state_isotropic_four_sites():
    gs = sd.ground_state(sd.CouplingParams(4, 1.0, 1.0))
    assert gs.converged
    assert gs.method == sd.SolverMethod.Dense
    assert gs.sector_r == 2
    assert abs(gs.energy - (-2.0)) < 1e-10
    assert abs(gs.gap - 2.0) < 1e-9
    assert len(gs.coefficients) == 6
    assert abs(sum(c * c for c in gs.coefficients) - 1.0) < 1e-12


def test_concurrence_matches_closed_form():
    params = sd.CouplingParams(4, 1.0, 0.7)
    gs = sd.ground_state(params)
    assert abs(sd.signed_concurrence(gs, 1, 2) - sd.analytic4.c12(1.0, 0.7)) < 1e-10
    assert abs(sd.signed_concurrence(gs, 2, 3) - sd.analytic4.c23(1.0, 0.7)) < 1e-10
    report = sd.concurrence_report(gs)
    assert not report.degenerate
    assert report.energy_relation_residual < 1e-10
    assert abs(report.c12 - max(0.0, report.c12_signed)) == 0.0


def test_wootters_agrees_with_swap_shortcut():
    gs = sd.ground_state(sd.CouplingParams(6, 1.0, 1.3))
    clipped = max(0.0, sd.signed_concurrence(gs, 1, 2))
    assert abs(sd.wootters_concurrence(gs, 1, 2) - clipped) < 1e-9
    rho = sd.reduced_density_matrix(gs, 1, 2)
    assert rho.shape == (4, 4)
    assert abs(rho.trace() - 1.0) < 1e-12


def test_spectrum_and_thresholds():
    values, sectors = sd.full_spectrum(sd.CouplingParams(4, 1.0, 1.0))
    assert len(values) == 16
    assert set(sectors) == {0, 1, 2, 3, 4}
    closed = sd.analytic4.spectrum(1.0, 1.0)
    assert max(abs(a - b) for a, b in zip(values, closed)) < 1e-10
    low, high = sd.analytic4.thresholds(1.0)
    assert (low, high) == (0.5, 2.0)


def test_sweep_round_trip():
    config = sd.SweepConfig()
    config.num_sites = 4
    config.steps = 9
    config.j2_min = 0.0
    config.j2_max = 4.0
    result = sd.run_sweep(config)
    assert len(result.rows) == 9
    assert abs(result.argmax_cmean - 1.0) < 1e-6
    assert abs(result.thresholds.j2th_12 - 2.0) < 1e-6
    assert abs(result.thresholds.j2th_23 - 0.5) < 1e-6
    j2 = sd.find_threshold(4, 1.0, sd.BondClass.C12, (1.0, 3.0))
    assert j2 is not None and abs(j2 - 2.0) < 1e-6


def test_degeneracy_error_surfaces_as_python_exception():
    with pytest.raises(Exception) as excinfo:
        sd.feynman_hellmann_check(sd.CouplingParams(4, 1.0, 1.0), 1.0)
    assert "step size" in str(excinfo.value)


def test_verify_suite_passes():
    report = sd.verify([4, 6])
    assert report.all_passed()
    names = {check.name for check in report.checks}
    assert "wootters_vs_swap" in names
    assert "dense_vs_lanczos" in names


def test_version_attribute():
    assert isinstance(sd.__version__, str)
    assert sd.__version__.count(".") == 2
