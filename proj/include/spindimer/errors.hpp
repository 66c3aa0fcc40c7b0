// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace spindimer {

/// Numerical failure: non-convergence, or a degeneracy where a unique
/// ground state is required.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : NumericalError {
    using NumericalError::NumericalError;
};

struct DegeneracyError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace spindimer
