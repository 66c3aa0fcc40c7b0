// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#include "spindimer/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "spindimer/errors.hpp"

namespace spindimer {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void require_usable(const GroundState& gs) {
    if (!gs.converged) {
        throw NumericalError("ground state did not meet the residual criterion");
    }
    if (is_degenerate(gs)) {
        throw DegeneracyError("ground state is degenerate (gap " +
                              std::to_string(gs.gap) + "); concurrence undefined");
    }
}

void require_sites(const GroundState& gs, int site_a, int site_b) {
    const int n = gs.params.num_sites;
    if (site_a < 1 || site_a > n || site_b < 1 || site_b > n || site_a == site_b) {
        throw std::invalid_argument("sites must be distinct and within 1..N");
    }
}

Sector sector_of(const GroundState& gs) {
    return enumerate_sector(gs.params.num_sites, gs.sector_r);
}

}  // namespace

double signed_concurrence(const GroundState& gs, int site_a, int site_b) {
    require_usable(gs);
    require_sites(gs, site_a, site_b);
    return -swap_expectation(sector_of(gs), gs.coefficients, site_a, site_b);
}

Eigen::Matrix4d reduced_density_matrix(const GroundState& gs, int site_a, int site_b) {
    require_sites(gs, site_a, site_b);
    const Sector sector = sector_of(gs);
    if (std::abs(gs.coefficients.norm() - 1.0) > 1e-12) {
        throw NumericalError("state vector is not normalized");
    }

    // Group amplitudes by the environment configuration (all bits except the
    // two traced sites); each group contributes a rank-one term.
    const std::uint32_t bit_a = std::uint32_t{1} << (site_a - 1);
    const std::uint32_t bit_b = std::uint32_t{1} << (site_b - 1);
    std::unordered_map<std::uint32_t, std::array<double, 4>> groups;
    groups.reserve(sector.size());
    for (std::size_t k = 0; k < sector.size(); ++k) {
        const std::uint32_t s = sector.state(k);
        const int local = static_cast<int>(((s & bit_a) != 0) << 1 | ((s & bit_b) != 0));
        groups[s & ~(bit_a | bit_b)][static_cast<std::size_t>(local)] +=
            gs.coefficients[static_cast<Eigen::Index>(k)];
    }

    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
    for (const auto& [env, amps] : groups) {
        (void)env;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) rho(i, j) += amps[static_cast<std::size_t>(i)] *
                                                     amps[static_cast<std::size_t>(j)];
        }
    }
    return rho;
}

double wootters_from_rho(const Eigen::Matrix4d& rho) {
    // Real density matrix, so the spin-flipped state is Y rho Y with
    // Y = sigma_y (x) sigma_y, which is real: antidiag(-1, 1, 1, -1).
    Eigen::Matrix4d y = Eigen::Matrix4d::Zero();
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;

    const Eigen::Matrix4d sym = 0.5 * (rho + rho.transpose());

    // The needed values are sqrt(eig(rho * rho_tilde)). With A = rho^(1/2)
    // the product is similar to (A Y A)^2, so they equal the absolute
    // eigenvalues of the symmetric A Y A. Square-rooting a matrix instead of
    // near-zero eigenvalues keeps small values accurate to machine epsilon
    // rather than its square root.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> rho_solver(sym);
    const Eigen::Vector4d d = rho_solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Eigen::Matrix4d root =
        rho_solver.eigenvectors() * d.asDiagonal() * rho_solver.eigenvectors().transpose();

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> flip_solver(root * y * root);
    std::array<double, 4> lambda{};
    for (int i = 0; i < 4; ++i) {
        lambda[static_cast<std::size_t>(i)] = std::abs(flip_solver.eigenvalues()[i]);
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double wootters_concurrence(const GroundState& gs, int site_a, int site_b) {
    require_usable(gs);
    return wootters_from_rho(reduced_density_matrix(gs, site_a, site_b));
}

MeanConcurrence mean_concurrence(const GroundState& gs) {
    require_usable(gs);
    const int n = gs.params.num_sites;
    const Sector sector = sector_of(gs);

    // Odd-origin bonds carry J1, even-origin bonds carry J2; translation by
    // one dimer must leave each class's correlator unchanged.
    std::array<std::vector<double>, 2> classes;
    for (int i = 1; i <= n; ++i) {
        const double value = -swap_expectation(sector, gs.coefficients, i, i % n + 1);
        classes[static_cast<std::size_t>(i % 2 == 0)].push_back(value);
    }
    for (const auto& values : classes) {
        const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        if (*hi - *lo > 1e-9) {
            throw NumericalError("bond correlators within one coupling class differ by " +
                                 std::to_string(*hi - *lo) +
                                 "; state is not translation symmetric");
        }
    }

    MeanConcurrence mean;
    for (const auto& values : classes) {
        for (double v : values) {
            mean.signed_mean += v;
            mean.clipped_mean += std::max(0.0, v);
        }
    }
    mean.signed_mean /= n;
    mean.clipped_mean /= n;
    return mean;
}

ConcurrenceReport concurrence_report(const GroundState& gs) {
    ConcurrenceReport report;
    report.params = gs.params;
    report.energy = gs.energy;
    report.gap = gs.gap;

    if (!gs.converged || is_degenerate(gs)) {
        report.degenerate = true;
        report.c12_signed = report.c23_signed = kNan;
        report.c12 = report.c23 = kNan;
        report.c_mean_signed = report.c_mean = kNan;
        report.energy_relation_residual = kNan;
        return report;
    }

    report.c12_signed = signed_concurrence(gs, 1, 2);
    report.c23_signed = signed_concurrence(gs, 2, 3);
    report.c12 = std::max(0.0, report.c12_signed);
    report.c23 = std::max(0.0, report.c23_signed);
    const MeanConcurrence mean = mean_concurrence(gs);
    report.c_mean_signed = mean.signed_mean;
    report.c_mean = mean.clipped_mean;
    report.energy_relation_residual = energy_relation_residual(gs, report);
    return report;
}

double energy_relation_residual(const GroundState& gs, const ConcurrenceReport& report) {
    const double per_site = gs.energy / gs.params.num_sites;
    return std::abs(per_site + 0.5 * (gs.params.j1 * report.c12_signed +
                                      gs.params.j2 * report.c23_signed));
}

double feynman_hellmann_check(const CouplingParams& params, double h,
                              const SolveOptions& opts) {
    if (!(h >= 1e-7 && h <= 1e-3)) {
        throw std::invalid_argument("step size must lie in [1e-7, 1e-3]");
    }
    validate(params);
    if (params.j1 - h <= 0.0 && params.j2 == 0.0) {
        throw std::invalid_argument("stencil leaves the valid coupling domain");
    }

    const GroundState center = ground_state(params, opts);
    require_usable(center);

    // d E / d J1 equals the summed swap expectation over the J1 bonds.
    const Sector sector = enumerate_sector(params.num_sites, center.sector_r);
    double bond_sum = 0.0;
    for (const Bond& bond : bond_list(params)) {
        if (bond.site_a % 2 == 1) {
            bond_sum += swap_expectation(sector, center.coefficients,
                                         bond.site_a, bond.site_b);
        }
    }

    CouplingParams plus = params;
    plus.j1 += h;
    CouplingParams minus = params;
    minus.j1 -= h;
    const GroundState e_plus = ground_state(plus, opts);
    const GroundState e_minus = ground_state(minus, opts);
    require_usable(e_plus);
    require_usable(e_minus);

    const double derivative = (e_plus.energy - e_minus.energy) / (2.0 * h);
    return std::abs(derivative - bond_sum);
}

}  // namespace spindimer
