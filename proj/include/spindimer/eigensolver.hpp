// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "spindimer/hamiltonian.hpp"

namespace spindimer {

enum class SolverMethod { Dense, Lanczos, Auto };

/// Lowest eigenpair of a sector Hamiltonian.
struct GroundState {
    CouplingParams params;
    int sector_r = 0;
    double energy = 0.0;
    double gap = 0.0;              // E1 - E0 within the searched space
    Eigen::VectorXd coefficients;  // normalized, over the sector basis
    SolverMethod method = SolverMethod::Dense;
    bool converged = false;
    double residual = 0.0;         // ||H v - E v||
};

/// True when gap < 1e-10 * max(1, |E|). Concurrence formulas refuse
/// degenerate states; sweeps flag and skip them.
bool is_degenerate(const GroundState& gs);

struct SolveOptions {
    SolverMethod method = SolverMethod::Auto;
    std::uint64_t seed = 42;
    bool search_all_sectors = false;  // default: r = N/2 only
    int max_iterations = 5000;
    std::size_t dense_cap = kDenseCap;
};

/// Ground state of the ring. Searches the r = N/2 sector by default (the
/// zero-magnetization sector holds the singlet ground state of the even
/// antiferromagnetic ring; the all-sector option is the validation
/// fallback). Auto picks dense below the cap, Lanczos above.
GroundState ground_state(const CouplingParams& params, const SolveOptions& opts = {});

GroundState dense_ground(const CouplingParams& params, const Sector& sector,
                         std::size_t max_dim = kDenseCap);

/// Matrix-free Lanczos with full reorthogonalization. Deterministic for a
/// fixed seed; converges on Ritz stagnation < 1e-12 plus residual bound
/// < 1e-10; restarts with a perturbed seed on breakdown (max 3). Throws
/// ConvergenceError when max_iterations is exhausted.
GroundState lanczos_ground(const CouplingParams& params, const Sector& sector,
                           std::uint64_t seed, int max_iterations = 5000);

struct SpectrumReport {
    std::vector<double> eigenvalues;                   // 2^N values, ascending
    std::map<int, std::vector<double>> sector_breakdown;
};

/// Dense per-sector diagonalization of the whole spectrum; needs 2^N <= 4096.
SpectrumReport full_spectrum(const CouplingParams& params);

}  // namespace spindimer
