// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#include "spindimer/analytic4.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spindimer::analytic4 {

namespace {

void check_domain(double j1, double j2) {
    if (!(j1 >= 0.0) || !(j2 >= 0.0)) {
        throw std::invalid_argument("closed forms need J1 >= 0 and J2 >= 0");
    }
    if (j1 == 0.0 && j2 == 0.0) {
        throw std::invalid_argument("closed forms need J1, J2 not both zero");
    }
}

double root(double j1, double j2) {
    return std::sqrt(j1 * j1 + j2 * j2 - j1 * j2);
}

}  // namespace

double ground_energy(double j1, double j2) {
    check_domain(j1, j2);
    return -2.0 * root(j1, j2);
}

Spectrum4 full_spectrum(double j1, double j2) {
    check_domain(j1, j2);
    const double r = root(j1, j2);
    return Spectrum4{{{
        {"2(J1+J2)", 2.0 * (j1 + j2), 5},
        {"0", 0.0, 3},
        {"2J1", 2.0 * j1, 3},
        {"2J2", 2.0 * j2, 3},
        {"+2sqrt(J1^2+J2^2-J1J2)", 2.0 * r, 1},
        {"-2sqrt(J1^2+J2^2-J1J2)", -2.0 * r, 1},
    }}};
}

std::vector<double> Spectrum4::expanded() const {
    std::vector<double> values;
    values.reserve(16);
    for (const SpectrumEntry& e : entries) {
        values.insert(values.end(), static_cast<std::size_t>(e.multiplicity), e.value);
    }
    std::sort(values.begin(), values.end());
    return values;
}

double Spectrum4::trace() const {
    double sum = 0.0;
    for (const SpectrumEntry& e : entries) sum += e.value * e.multiplicity;
    return sum;
}

double c12(double j1, double j2) {
    check_domain(j1, j2);
    return (2.0 * j1 - j2) / (2.0 * root(j1, j2));
}

double c23(double j1, double j2) {
    return c12(j2, j1);
}

double c_mean(double j1, double j2) {
    check_domain(j1, j2);
    return (j1 + j2) / (4.0 * root(j1, j2));
}

double c12_clipped(double j1, double j2) {
    return std::max(0.0, c12(j1, j2));
}

double c23_clipped(double j1, double j2) {
    return std::max(0.0, c23(j1, j2));
}

Thresholds4 thresholds(double j1) {
    if (!(j1 > 0.0)) {
        throw std::invalid_argument("thresholds need J1 > 0");
    }
    return {j1 / 2.0, 2.0 * j1};
}

}  // namespace spindimer::analytic4
