// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#include "spindimer/fullspace.hpp"

#include <stdexcept>

namespace spindimer {

// Deliberately naive reference path: assembles the full 2^N matrix straight
// from the bond list with no sector machinery, so it shares as little code as
// possible with the production solvers it cross-checks.
Eigen::MatrixXd full_space_matrix(const CouplingParams& params) {
    validate(params);
    const int n = params.num_sites;
    if (n > 12) {
        throw std::invalid_argument("full_space_matrix is limited to N <= 12");
    }

    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
    for (const Bond& bond : bond_list(params)) {
        const int a = bond.site_a - 1;
        const int b = bond.site_b - 1;
        for (std::size_t s = 0; s < dim; ++s) {
            const auto col = static_cast<Eigen::Index>(s);
            if (((s >> a) & 1u) == ((s >> b) & 1u)) {
                h(col, col) += bond.coupling;
            } else {
                const std::size_t t = s ^ ((std::size_t{1} << a) | (std::size_t{1} << b));
                h(static_cast<Eigen::Index>(t), col) += bond.coupling;
            }
        }
    }
    return h;
}

std::vector<double> full_space_spectrum(const CouplingParams& params) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(full_space_matrix(params),
                                                          Eigen::EigenvaluesOnly);
    return {solver.eigenvalues().begin(), solver.eigenvalues().end()};
}

double full_space_ground_energy(const CouplingParams& params) {
    return full_space_spectrum(params).front();
}

}  // namespace spindimer
