// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "spindimer/eigensolver.hpp"

namespace spindimer {

/// Pairwise-entanglement summary of one parameter point. Signed values are
/// the raw -<S_ab> correlators (they enter the energy relation linearly);
/// the unsuffixed fields are clipped at zero, which is the physical
/// concurrence. Means run over all N nearest-neighbor ring bonds.
struct ConcurrenceReport {
    CouplingParams params;
    double c12_signed = 0.0;
    double c23_signed = 0.0;
    double c12 = 0.0;
    double c23 = 0.0;
    double c_mean_signed = 0.0;
    double c_mean = 0.0;
    double energy = 0.0;
    double gap = 0.0;
    double energy_relation_residual = 0.0;  // E/N + (J1 c12_signed + J2 c23_signed)/2
    bool degenerate = false;
};

/// -<S_ab> on the ground state. Valid because the unique ground state of
/// the even antiferromagnetic ring is a total singlet, which makes the
/// swap correlator the concurrence for any distinct site pair (the ring
/// bonds are the reported ones). Throws DegeneracyError on a degenerate
/// state.
double signed_concurrence(const GroundState& gs, int site_a, int site_b);

/// Two-site reduced density matrix of the ground state, obtained by
/// summing the sector vector over the 2^(N-2) environment configurations.
/// Basis order {|00>, |01>, |10>, |11>} with site_a the left digit.
Eigen::Matrix4d reduced_density_matrix(const GroundState& gs, int site_a, int site_b);

/// Standard two-qubit concurrence max(0, l1 - l2 - l3 - l4) from the
/// square-rooted eigenvalues of rho * rho_tilde, descending.
double wootters_from_rho(const Eigen::Matrix4d& rho);

/// Wootters concurrence of the (site_a, site_b) reduced state; the
/// independent oracle for the swap shortcut, valid for any vector.
double wootters_concurrence(const GroundState& gs, int site_a, int site_b);

struct MeanConcurrence {
    double signed_mean = 0.0;
    double clipped_mean = 0.0;
};

/// Ring average of the nearest-neighbor concurrences. Checks that all J1
/// bonds (and all J2 bonds) carry equal correlators within 1e-9 before
/// collapsing to (C12 + C23)/2; a violation signals symmetry breaking or
/// degeneracy and throws NumericalError.
MeanConcurrence mean_concurrence(const GroundState& gs);

/// Full per-point report. A degenerate ground state produces a row with
/// degenerate = true and NaN observables instead of throwing.
ConcurrenceReport concurrence_report(const GroundState& gs);

/// E/N + (J1 c12_signed + J2 c23_signed)/2, recomputed from the report's
/// signed values; near zero for any valid non-degenerate ground state.
double energy_relation_residual(const GroundState& gs, const ConcurrenceReport& report);

/// |central-difference dE_GS/dJ1 - sum of <S_ab> over J1 bonds|, expected
/// O(h^2). Requires 1e-7 <= h <= 1e-3 and non-degenerate ground states at
/// all three stencil points.
double feynman_hellmann_check(const CouplingParams& params, double h,
                              const SolveOptions& opts = {});

}  // namespace spindimer
