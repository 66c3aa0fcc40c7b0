// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spindimer {

struct VerificationCheck {
    std::string name;
    std::vector<int> sizes;  // N values the check covered
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool all_passed() const;
};

/// The bundled cross-validation suite: closed-form equivalences at N=4,
/// Wootters-vs-swap concurrence, the energy relation, Feynman-Hellmann,
/// symmetry commutators, dense-vs-Lanczos agreement, and the full-space
/// brute-force ground energy. Checks whose dense oracles exceed their size
/// caps simply skip those N. Failures are report entries, never throws.
VerificationReport verify(const std::vector<int>& n_list, std::uint64_t seed = 42);

}  // namespace spindimer
