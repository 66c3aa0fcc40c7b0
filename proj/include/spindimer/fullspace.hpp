// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spindimer/hamiltonian.hpp"

namespace spindimer {

// Brute-force reference path: the full 2^N-dimensional Hamiltonian is
// assembled straight from the bond list, with no sector machinery at all.
// Exists only to validate the sector-reduced solvers.

/// Dense 2^N x 2^N matrix; N <= 12.
Eigen::MatrixXd full_space_matrix(const CouplingParams& params);

/// All 2^N eigenvalues, ascending; N <= 12.
std::vector<double> full_space_spectrum(const CouplingParams& params);

double full_space_ground_energy(const CouplingParams& params);

}  // namespace spindimer
