// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#include "spindimer/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "spindimer/analytic4.hpp"
#include "spindimer/entanglement.hpp"
#include "spindimer/fullspace.hpp"

namespace spindimer {

namespace {

constexpr int kPointsPerCheck = 5;

double uniform_coupling(std::mt19937_64& rng) {
    // (0, 4]: stays inside the valid domain and spans both phases.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return 4.0 * (1.0 - u);
}

Eigen::VectorXd random_sector_vector(const Sector& sector, std::mt19937_64& rng) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(sector.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        v[i] = 2.0 * u - 1.0;
    }
    return v / v.norm();
}

/// Largest |difference| between H applied after and before a basis
/// permutation of the sector (an exact symmetry of the ring).
double commutator_deviation(const CouplingParams& params, const Sector& from,
                            const Sector& to, const std::vector<std::uint32_t>& image,
                            const Eigen::VectorXd& v) {
    Eigen::VectorXd permuted = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(to.size()));
    const Eigen::VectorXd hv = apply(params, from, v);
    Eigen::VectorXd hv_permuted =
        Eigen::VectorXd::Zero(static_cast<Eigen::Index>(to.size()));
    for (std::size_t k = 0; k < from.size(); ++k) {
        const auto target = static_cast<Eigen::Index>(to.index_of(image[k]));
        permuted[target] = v[static_cast<Eigen::Index>(k)];
        hv_permuted[target] = hv[static_cast<Eigen::Index>(k)];
    }
    return (apply(params, to, permuted) - hv_permuted).lpNorm<Eigen::Infinity>();
}

}  // namespace

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerificationCheck& c) { return c.passed; });
}

VerificationReport verify(const std::vector<int>& n_list, std::uint64_t seed) {
    if (n_list.empty()) {
        throw std::invalid_argument("verification needs at least one site count");
    }
    for (int n : n_list) {
        validate(CouplingParams{n, 1.0, 1.0});
    }
    std::mt19937_64 rng(seed);

    VerificationReport report;
    auto& checks = report.checks;
    const bool has_n4 = std::find(n_list.begin(), n_list.end(), 4) != n_list.end();

    // --- Closed-form N=4 spectrum: per-sector dense against the labeled
    // sixteen-value multiset.
    {
        VerificationCheck check{"analytic_spectrum_n4", {}, 0.0, 1e-10, false};
        if (has_n4) {
            check.sizes = {4};
            for (int p = 0; p < kPointsPerCheck; ++p) {
                const CouplingParams params{4, uniform_coupling(rng), uniform_coupling(rng)};
                const std::vector<double> numeric = full_spectrum(params).eigenvalues;
                const std::vector<double> closed =
                    analytic4::full_spectrum(params.j1, params.j2).expanded();
                for (std::size_t i = 0; i < numeric.size(); ++i) {
                    check.max_deviation = std::max(check.max_deviation,
                                                   std::abs(numeric[i] - closed[i]));
                }
            }
        }
        check.passed = check.max_deviation <= check.tolerance;
        checks.push_back(check);
    }

    // --- Closed-form N=4 concurrences and thresholds.
    {
        VerificationCheck check{"analytic_concurrence_n4", {}, 0.0, 1e-10, false};
        if (has_n4) {
            check.sizes = {4};
            for (int p = 0; p < kPointsPerCheck; ++p) {
                const CouplingParams params{4, uniform_coupling(rng), uniform_coupling(rng)};
                const ConcurrenceReport row = concurrence_report(ground_state(params));
                if (row.degenerate) continue;
                const double dev = std::max(
                    {std::abs(row.c12_signed - analytic4::c12(params.j1, params.j2)),
                     std::abs(row.c23_signed - analytic4::c23(params.j1, params.j2)),
                     std::abs(row.c_mean_signed - analytic4::c_mean(params.j1, params.j2)),
                     std::abs(row.energy - analytic4::ground_energy(params.j1, params.j2))});
                check.max_deviation = std::max(check.max_deviation, dev);
            }
        }
        check.passed = check.max_deviation <= check.tolerance;
        checks.push_back(check);
    }

    // --- Wootters concurrence against the clipped swap correlator on every
    // nearest-neighbor bond.
    {
        VerificationCheck check{"wootters_vs_swap", n_list, 0.0, 1e-9, false};
        for (int n : n_list) {
            for (int p = 0; p < kPointsPerCheck; ++p) {
                const CouplingParams params{n, uniform_coupling(rng), uniform_coupling(rng)};
                const GroundState gs = ground_state(params);
                if (is_degenerate(gs)) continue;
                for (int site = 1; site <= n; ++site) {
                    const double clipped =
                        std::max(0.0, signed_concurrence(gs, site, site % n + 1));
                    const double wootters = wootters_concurrence(gs, site, site % n + 1);
                    check.max_deviation =
                        std::max(check.max_deviation, std::abs(wootters - clipped));
                }
            }
        }
        check.passed = check.max_deviation <= check.tolerance;
        checks.push_back(check);
    }

    // --- Ground energy decomposed into bond correlators.
    {
        VerificationCheck check{"energy_relation", n_list, 0.0, 1e-9, false};
        for (int n : n_list) {
            for (int p = 0; p < kPointsPerCheck; ++p) {
                const CouplingParams params{n, uniform_coupling(rng), uniform_coupling(rng)};
                const ConcurrenceReport row = concurrence_report(ground_state(params));
                if (row.degenerate) continue;
                check.max_deviation =
                    std::max(check.max_deviation, row.energy_relation_residual);
            }
        }
        check.passed = check.max_deviation <= check.tolerance;
        checks.push_back(check);
    }

    // --- Derivative of the ground energy against the summed J1-bond
    // correlator (central difference, h = 1e-5, error O(h^2)).
    {
        VerificationCheck check{"feynman_hellmann", {}, 0.0, 1e-6, false};
        for (int n : n_list) {
            if (n > 10) continue;  // three solves per point; keep the suite quick
            check.sizes.push_back(n);
            for (int p = 0; p < 2; ++p) {
                const CouplingParams params{n, uniform_coupling(rng), uniform_coupling(rng)};
                check.max_deviation =
                    std::max(check.max_deviation, feynman_hellmann_check(params, 1e-5));
            }
        }
        check.passed = check.max_deviation <= check.tolerance;
        checks.push_back(check);
    }

    // --- H commutes with the global spin flip (sector r -> N - r).
    {
        VerificationCheck check{"spin_flip_commutes", n_list, 0.0, 1e-12, false};
        for (int n : n_list) {
            const int r = n / 2 - 1;
            const Sector from = enumerate_sector(n, r);
            const Sector to = enumerate_sector(n, n - r);
            std::vector<std::uint32_t> image(from.size());
            for (std::size_t k = 0; k < from.size(); ++k) {
                image[k] = spin_flip(from.basis_state(k)).bits;
            }
            const CouplingParams params{n, uniform_coupling(rng), uniform_coupling(rng)};
            check.max_deviation =
                std::max(check.max_deviation,
                         commutator_deviation(params, from, to, image,
                                              random_sector_vector(from, rng)));
        }
        check.passed = check.max_deviation <= check.tolerance;
        checks.push_back(check);
    }

    // --- H commutes with translation by one dimer (two sites).
    {
        VerificationCheck check{"pair_swap_commutes", n_list, 0.0, 1e-12, false};
        for (int n : n_list) {
            const Sector sector = enumerate_sector(n, n / 2);
            std::vector<std::uint32_t> image(sector.size());
            for (std::size_t k = 0; k < sector.size(); ++k) {
                image[k] = pair_swap(sector.basis_state(k)).bits;
            }
            const CouplingParams params{n, uniform_coupling(rng), uniform_coupling(rng)};
            check.max_deviation =
                std::max(check.max_deviation,
                         commutator_deviation(params, sector, sector, image,
                                              random_sector_vector(sector, rng)));
        }
        check.passed = check.max_deviation <= check.tolerance;
        checks.push_back(check);
    }

    // --- Lanczos against dense in the half-filling sector.
    {
        VerificationCheck check{"dense_vs_lanczos", {}, 0.0, 1e-9, false};
        for (int n : n_list) {
            const Sector sector = enumerate_sector(n, n / 2);
            if (sector.size() > kDenseCap) continue;  // no dense oracle at this size
            check.sizes.push_back(n);
            for (int p = 0; p < kPointsPerCheck; ++p) {
                const CouplingParams params{n, uniform_coupling(rng), uniform_coupling(rng)};
                const GroundState dense = dense_ground(params, sector);
                const GroundState lanczos = lanczos_ground(params, sector, seed + p);
                check.max_deviation = std::max(check.max_deviation,
                                               std::abs(dense.energy - lanczos.energy));
            }
        }
        check.passed = check.max_deviation <= check.tolerance;
        checks.push_back(check);
    }

    // --- Sector machinery against the naive full 2^N matrix.
    {
        VerificationCheck check{"fullspace_ground", {}, 0.0, 1e-10, false};
        for (int n : n_list) {
            if (n > 10) continue;  // 2^N dense oracle cap
            check.sizes.push_back(n);
            for (int p = 0; p < 2; ++p) {
                const CouplingParams params{n, uniform_coupling(rng), uniform_coupling(rng)};
                SolveOptions opts;
                opts.search_all_sectors = true;
                const GroundState gs = ground_state(params, opts);
                check.max_deviation = std::max(
                    check.max_deviation,
                    std::abs(gs.energy - full_space_ground_energy(params)));
            }
        }
        check.passed = check.max_deviation <= check.tolerance;
        checks.push_back(check);
    }

    return report;
}

}  // namespace spindimer
