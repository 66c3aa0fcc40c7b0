// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#include "spindimer/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "spindimer/errors.hpp"

namespace spindimer {

namespace {

constexpr double kRitzStagnationTol = 1e-12;
constexpr double kResidualBoundTol = 1e-10;
constexpr double kDegeneracyTol = 1e-10;
constexpr int kMaxKrylov = 400;
constexpr int kMaxBreakdownRestarts = 3;

double residual_norm(const CouplingParams& params, const Sector& sector,
                     const Eigen::VectorXd& v, double energy) {
    return (apply(params, sector, v) - energy * v).norm();
}

// Deterministic start vector: mt19937_64 output mapped to [-1, 1). The
// mt19937_64 sequence is pinned by the standard, so runs are reproducible
// across platforms for a fixed seed.
Eigen::VectorXd seeded_vector(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Eigen::VectorXd v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        v[i] = 2.0 * u - 1.0;
    }
    const double norm = v.norm();
    if (norm < 1e-12) return seeded_vector(dim, seed + 0x9e3779b97f4a7c15ull);
    return v / norm;
}

struct RitzPair {
    double theta0 = 0.0;
    double theta1 = std::numeric_limits<double>::quiet_NaN();
    Eigen::VectorXd y;  // tridiagonal eigenvector of theta0
};

RitzPair lowest_ritz(const std::vector<double>& alpha, const std::vector<double>& beta) {
    const auto k = static_cast<Eigen::Index>(alpha.size());
    Eigen::VectorXd diag(k), sub(std::max<Eigen::Index>(k - 1, 0));
    for (Eigen::Index i = 0; i < k; ++i) diag[i] = alpha[static_cast<std::size_t>(i)];
    for (Eigen::Index i = 0; i + 1 < k; ++i) sub[i] = beta[static_cast<std::size_t>(i)];

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);

    RitzPair out;
    out.theta0 = solver.eigenvalues()[0];
    if (k > 1) out.theta1 = solver.eigenvalues()[1];
    out.y = solver.eigenvectors().col(0);
    return out;
}

}  // namespace

bool is_degenerate(const GroundState& gs) {
    return gs.gap < kDegeneracyTol * std::max(1.0, std::abs(gs.energy));
}

GroundState dense_ground(const CouplingParams& params, const Sector& sector,
                         std::size_t max_dim) {
    const Eigen::MatrixXd h = dense_matrix(params, sector, max_dim);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);

    GroundState gs;
    gs.params = params;
    gs.sector_r = sector.reversed_spins();
    gs.energy = solver.eigenvalues()[0];
    gs.gap = h.rows() > 1 ? solver.eigenvalues()[1] - gs.energy
                          : std::numeric_limits<double>::infinity();
    gs.coefficients = solver.eigenvectors().col(0);
    gs.coefficients /= gs.coefficients.norm();
    gs.method = SolverMethod::Dense;
    // Residual recomputed through the matrix-free path, cross-checking the
    // two Hamiltonian representations.
    gs.residual = residual_norm(params, sector, gs.coefficients, gs.energy);
    gs.converged = gs.residual <= 1e-9 * std::max(1.0, std::abs(gs.energy));
    return gs;
}

GroundState lanczos_ground(const CouplingParams& params, const Sector& sector,
                           std::uint64_t seed, int max_iterations) {
    validate(params);
    const std::size_t dim = sector.size();
    if (dim < 2) {
        throw std::invalid_argument("lanczos_ground needs a sector of dimension >= 2");
    }

    const auto edim = static_cast<Eigen::Index>(dim);
    const int max_krylov = static_cast<int>(std::min<std::size_t>(dim, kMaxKrylov));

    int iterations = 0;
    for (int attempt = 0; attempt <= kMaxBreakdownRestarts; ++attempt) {
        Eigen::VectorXd v0 =
            seeded_vector(dim, seed + static_cast<std::uint64_t>(attempt));
        double carried_gap = std::numeric_limits<double>::quiet_NaN();
        bool broke_down_early = false;

        while (iterations < max_iterations && !broke_down_early) {
            std::vector<Eigen::VectorXd> krylov{v0};
            std::vector<double> alpha, beta;
            double prev_theta = std::numeric_limits<double>::infinity();
            RitzPair ritz;

            for (int k = 0; k < max_krylov && iterations < max_iterations; ++k) {
                ++iterations;
                Eigen::VectorXd w = apply(params, sector, krylov.back());
                if (k > 0) w -= beta.back() * krylov[krylov.size() - 2];
                const double a = krylov.back().dot(w);
                alpha.push_back(a);
                w -= a * krylov.back();

                // Full reorthogonalization, two passes.
                for (int pass = 0; pass < 2; ++pass) {
                    for (const Eigen::VectorXd& q : krylov) w -= q.dot(w) * q;
                }

                ritz = lowest_ritz(alpha, beta);
                const double b = w.norm();
                const double scale = std::max(1.0, std::abs(ritz.theta0));

                if (b <= 1e-14 * scale) {
                    // Invariant subspace. With the full Krylov basis the
                    // tridiagonal problem is exact; otherwise accept only a
                    // Ritz pair whose explicit residual already passes.
                    broke_down_early = krylov.size() < dim;
                    break;
                }

                const double resid_bound = b * std::abs(ritz.y[ritz.y.size() - 1]);
                if (alpha.size() >= 2 && std::abs(ritz.theta0 - prev_theta) < kRitzStagnationTol &&
                    resid_bound < kResidualBoundTol * scale) {
                    break;
                }
                prev_theta = ritz.theta0;

                beta.push_back(b);
                krylov.push_back(w / b);
            }

            Eigen::VectorXd x = Eigen::VectorXd::Zero(edim);
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                x += ritz.y[static_cast<Eigen::Index>(i)] * krylov[i];
            }
            x /= x.norm();
            const double resid = residual_norm(params, sector, x, ritz.theta0);

            if (resid <= kResidualBoundTol * std::max(1.0, std::abs(ritz.theta0))) {
                double gap = ritz.theta1 - ritz.theta0;
                if (!std::isfinite(gap)) gap = carried_gap;
                if (!std::isfinite(gap)) {
                    // Converged at the very first step with no second Ritz
                    // value anywhere; a fresh start recovers the gap.
                    broke_down_early = true;
                } else {
                    GroundState gs;
                    gs.params = params;
                    gs.sector_r = sector.reversed_spins();
                    gs.energy = ritz.theta0;
                    gs.gap = gap;
                    gs.coefficients = std::move(x);
                    gs.method = SolverMethod::Lanczos;
                    gs.residual = resid;
                    gs.converged = true;
                    return gs;
                }
            } else if (!broke_down_early) {
                if (iterations >= max_iterations) {
                    throw ConvergenceError(
                        "Lanczos did not converge after " + std::to_string(iterations) +
                        " iterations (residual " + std::to_string(resid) + ")");
                }
                // Krylov cap hit: restart from the current Ritz vector.
                if (std::isfinite(ritz.theta1)) carried_gap = ritz.theta1 - ritz.theta0;
                v0 = std::move(x);
            }
        }
        // Early breakdown: retry with a perturbed seed.
    }
    throw ConvergenceError("Lanczos did not converge: breakdown restarts or the iteration budget were exhausted");
}

GroundState ground_state(const CouplingParams& params, const SolveOptions& opts) {
    validate(params);
    const int n = params.num_sites;

    auto solve_sector = [&](const Sector& sector) {
        SolverMethod method = opts.method;
        if (method == SolverMethod::Auto) {
            method = sector.size() <= opts.dense_cap ? SolverMethod::Dense
                                                     : SolverMethod::Lanczos;
        }
        if (method == SolverMethod::Lanczos && sector.size() >= 2) {
            return lanczos_ground(params, sector, opts.seed, opts.max_iterations);
        }
        return dense_ground(params, sector, opts.dense_cap);
    };

    if (!opts.search_all_sectors) {
        return solve_sector(enumerate_sector(n, n / 2));
    }

    // Validation fallback: solve every magnetization sector and keep the
    // global minimum; the gap then spans the whole searched space.
    GroundState best;
    bool have_best = false;
    double runner_up = std::numeric_limits<double>::infinity();
    for (int r = 0; r <= n; ++r) {
        GroundState gs = solve_sector(enumerate_sector(n, r));
        const double second = gs.energy + gs.gap;
        if (!have_best || gs.energy < best.energy) {
            if (have_best) runner_up = std::min(runner_up, best.energy);
            best = std::move(gs);
            have_best = true;
        } else {
            runner_up = std::min(runner_up, gs.energy);
        }
        runner_up = std::min(runner_up, second);
    }
    best.gap = runner_up - best.energy;
    return best;
}

SpectrumReport full_spectrum(const CouplingParams& params) {
    validate(params);
    const int n = params.num_sites;
    if ((std::size_t{1} << n) > kDenseCap) {
        throw std::invalid_argument("full_spectrum needs 2^N <= 4096 (N <= 12)");
    }

    SpectrumReport report;
    report.eigenvalues.reserve(std::size_t{1} << n);
    for (int r = 0; r <= n; ++r) {
        const Sector sector = enumerate_sector(n, r);
        const Eigen::MatrixXd h = dense_matrix(params, sector);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
        std::vector<double> values(solver.eigenvalues().begin(), solver.eigenvalues().end());
        report.eigenvalues.insert(report.eigenvalues.end(), values.begin(), values.end());
        report.sector_breakdown.emplace(r, std::move(values));
    }
    std::sort(report.eigenvalues.begin(), report.eigenvalues.end());
    return report;
}

}  // namespace spindimer
