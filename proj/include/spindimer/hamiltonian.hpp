// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spindimer/basis.hpp"

namespace spindimer {

// The Hamiltonian is kept in swap-operator units: H = sum over ring bonds
// of J_bond * S_ab, with S_ab = (1 + sigma_a . sigma_b)/2 the two-site swap.
// The per-bond +1/2 of the Heisenberg form is folded in, so every
// closed-form energy in analytic4 refers to this convention. H is real
// symmetric in the computational basis.

/// Couplings of the dimerized ring: J1 on bonds (2i-1, 2i), J2 on bonds
/// (2i, 2i+1) with periodic wrap N+1 = 1.
struct CouplingParams {
    int num_sites = 0;
    double j1 = 0.0;
    double j2 = 0.0;
};

/// Throws std::invalid_argument unless N is even in [4, 24] and
/// J1, J2 >= 0 with at least one positive.
void validate(const CouplingParams& params);

struct Bond {
    int site_a = 0;  // 1-based site labels
    int site_b = 0;
    double coupling = 0.0;
};

/// The N ring bonds in site order: (1,2,J1), (2,3,J2), ..., (N,1,J2).
std::vector<Bond> bond_list(const CouplingParams& params);

inline constexpr std::size_t kDenseCap = 4096;

/// out = H v within the sector. Each bond swap contributes +J to the same
/// state when the two bond bits agree and routes the amplitude to the
/// bit-swapped state when they differ; the result never leaves the sector.
void apply_into(const CouplingParams& params, const Sector& sector,
                const Eigen::Ref<const Eigen::VectorXd>& v,
                Eigen::Ref<Eigen::VectorXd> out);

Eigen::VectorXd apply(const CouplingParams& params, const Sector& sector,
                      const Eigen::Ref<const Eigen::VectorXd>& v);

/// Dense sector matrix; column k is apply() on the k-th unit vector.
/// Throws std::invalid_argument when the sector exceeds max_dim.
Eigen::MatrixXd dense_matrix(const CouplingParams& params, const Sector& sector,
                             std::size_t max_dim = kDenseCap);

/// <v| S_ab |v> for a normalized sector vector; lies in [-1, 1]. Sites are
/// 1-based, any distinct pair. Throws if ||v|| deviates from 1 by > 1e-12.
double swap_expectation(const Sector& sector,
                        const Eigen::Ref<const Eigen::VectorXd>& v,
                        int site_a, int site_b);

}  // namespace spindimer
