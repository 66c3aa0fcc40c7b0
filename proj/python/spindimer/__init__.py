# Copyright 2026 The Spindimer Authors
# SPDX-License-Identifier: Apache-2.0
"""Exact diagonalization and pairwise entanglement of dimerized Heisenberg rings."""

from spindimer._core import (  # noqa: F401
    BondClass,
    ConcurrenceReport,
    ConvergenceError,
    CouplingParams,
    DegeneracyError,
    GroundState,
    NumericalError,
    SolveOptions,
    SolverMethod,
    SweepConfig,
    SweepResult,
    Thresholds,
    VerificationCheck,
    VerificationReport,
    __version__,
    analytic4,
    concurrence_report,
    feynman_hellmann_check,
    find_threshold,
    full_space_spectrum,
    full_spectrum,
    ground_state,
    is_degenerate,
    mean_concurrence,
    reduced_density_matrix,
    run_sweep,
    signed_concurrence,
    verify,
    wootters_concurrence,
)

__all__ = [
    "BondClass",
    "ConcurrenceReport",
    "ConvergenceError",
    "CouplingParams",
    "DegeneracyError",
    "GroundState",
    "NumericalError",
    "SolveOptions",
    "SolverMethod",
    "SweepConfig",
    "SweepResult",
    "Thresholds",
    "VerificationCheck",
    "VerificationReport",
    "__version__",
    "analytic4",
    "concurrence_report",
    "feynman_hellmann_check",
    "find_threshold",
    "full_space_spectrum",
    "full_spectrum",
    "ground_state",
    "is_degenerate",
    "mean_concurrence",
    "reduced_density_matrix",
    "run_sweep",
    "signed_concurrence",
    "verify",
    "wootters_concurrence",
]
