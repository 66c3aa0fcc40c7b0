// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

// Closed-form oracle for the four-qubit ring: the complete spectrum, both
// signed concurrences, the mean concurrence, and the entanglement
// thresholds. Pure functions of (J1, J2); everything depends on the ratio
// J2/J1 only, up to the overall energy scale.

namespace spindimer::analytic4 {

struct SpectrumEntry {
    std::string label;
    double value = 0.0;
    int multiplicity = 0;
};

/// The 16 eigenvalues of the N=4 ring as six closed-form families.
struct Spectrum4 {
    std::array<SpectrumEntry, 6> entries;

    /// All 16 values, ascending.
    std::vector<double> expanded() const;
    /// Sum of value * multiplicity; equals 16 (J1 + J2).
    double trace() const;
};

/// E_GS = -2 sqrt(J1^2 + J2^2 - J1 J2); always negative on the valid domain.
double ground_energy(double j1, double j2);

Spectrum4 full_spectrum(double j1, double j2);

/// Signed concurrence of a J1 bond: (2 J1 - J2) / (2 sqrt(J1^2 + J2^2 - J1 J2)).
/// Negative values mean no entanglement (the clipping max is omitted).
double c12(double j1, double j2);

/// Signed concurrence of a J2 bond; equals c12 with J1 and J2 exchanged.
double c23(double j1, double j2);

/// (J1 + J2) / (4 sqrt(J1^2 + J2^2 - J1 J2)) = (c12 + c23)/2; maximal at
/// J2 = J1 where it equals 1/2.
double c_mean(double j1, double j2);

double c12_clipped(double j1, double j2);
double c23_clipped(double j1, double j2);

/// J2 values bounding the entangled window: C23 <= 0 at or below j2_low
/// (= J1/2), C12 <= 0 at or above j2_high (= 2 J1).
struct Thresholds4 {
    double j2_low = 0.0;
    double j2_high = 0.0;
};

Thresholds4 thresholds(double j1);

}  // namespace spindimer::analytic4
