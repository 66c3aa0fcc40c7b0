// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "spindimer/analytic4.hpp"
#include "spindimer/entanglement.hpp"
#include "spindimer/errors.hpp"

using namespace spindimer;

TEST_CASE("signed concurrences frozen from an independent dense diagonalization") {
    struct Point {
        int n;
        double j1, j2, c12s, c23s;
    };
    // Reference values computed with a separate full-space eigensolver.
    const Point points[] = {
        {4, 1.0, 1.0, 0.5, 0.5},
        {4, 1.0, 0.0, 1.0, -0.5},
        {4, 1.0, 3.0, -0.18898223650461415, 0.94491118252306883},
        {6, 1.0, 1.0, 0.43425854591066504, 0.43425854591066504},
        {6, 1.0, 0.7, 0.77262269149059482, 0.035131305491966469},
        {6, 1.0, 1.5, -0.0076929312334789593, 0.80189009993658811},
        {8, 1.0, 1.0, 0.41277335223429379, 0.41277335223429379},
        {8, 1.0, 0.6, 0.88261428882468129, -0.16216570052136423},
    };
    for (const Point& p : points) {
        CAPTURE(p.n);
        CAPTURE(p.j2);
        const GroundState gs = ground_state(CouplingParams{p.n, p.j1, p.j2});
        CHECK(std::abs(signed_concurrence(gs, 1, 2) - p.c12s) < 1e-10);
        CHECK(std::abs(signed_concurrence(gs, 2, 3) - p.c23s) < 1e-10);
    }
}

TEST_CASE("four-site concurrences match the closed forms everywhere") {
    for (int i = 0; i <= 32; ++i) {
        const double j2 = 4.0 * i / 32.0;
        const GroundState gs = ground_state(CouplingParams{4, 1.0, j2});
        const ConcurrenceReport report = concurrence_report(gs);
        REQUIRE_FALSE(report.degenerate);
        CHECK(std::abs(report.c12_signed - analytic4::c12(1.0, j2)) < 1e-10);
        CHECK(std::abs(report.c23_signed - analytic4::c23(1.0, j2)) < 1e-10);
        CHECK(std::abs(report.c_mean_signed - analytic4::c_mean(1.0, j2)) < 1e-10);
        CHECK(report.c12 == std::max(0.0, report.c12_signed));
        CHECK(report.c23 == std::max(0.0, report.c23_signed));
    }
}

TEST_CASE("reduced density matrix is a valid two-site state") {
    const GroundState gs = ground_state(CouplingParams{6, 1.0, 0.7});
    const Eigen::Matrix4d rho = reduced_density_matrix(gs, 1, 2);
    CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
    CHECK((rho - rho.transpose()).lpNorm<Eigen::Infinity>() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(rho);
    CHECK(solver.eigenvalues().minCoeff() > -1e-12);

    // The pair correlator is recoverable from the reduced state alone:
    // tr(rho * SWAP) must equal the sector-level expectation.
    Eigen::Matrix4d swap = Eigen::Matrix4d::Zero();
    swap(0, 0) = swap(3, 3) = 1.0;
    swap(1, 2) = swap(2, 1) = 1.0;
    CHECK(std::abs((rho * swap).trace() + signed_concurrence(gs, 1, 2)) < 1e-12);
}

TEST_CASE("spectral concurrence formula on hand-built two-qubit states") {
    SUBCASE("maximally entangled") {
        // (|01> - |10>)/sqrt(2)
        Eigen::Vector4d psi(0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0);
        CHECK(wootters_from_rho(psi * psi.transpose()) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("product state") {
        Eigen::Vector4d psi(1.0, 0.0, 0.0, 0.0);
        CHECK(wootters_from_rho(psi * psi.transpose()) == doctest::Approx(0.0));
    }
    SUBCASE("singlet-weighted mixture") {
        // p |singlet><singlet| + (1-p) I/4 has concurrence max(0, (3p-1)/2).
        Eigen::Vector4d psi(0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0);
        for (double p : {0.0, 0.2, 1.0 / 3.0, 0.6, 0.9}) {
            const Eigen::Matrix4d rho = p * psi * psi.transpose() +
                                        (1.0 - p) * 0.25 * Eigen::Matrix4d::Identity();
            const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
            CHECK(wootters_from_rho(rho) == doctest::Approx(expected).epsilon(1e-10));
        }
    }
}

TEST_CASE("spectral and swap-correlator concurrences coincide on ground states") {
    for (double j2 : {0.0, 0.4, 1.0, 1.9, 3.1}) {
        for (int n : {4, 6, 8}) {
            const GroundState gs = ground_state(CouplingParams{n, 1.0, j2});
            for (int site = 1; site <= n; ++site) {
                const int next = site % n + 1;
                const double clipped = std::max(0.0, signed_concurrence(gs, site, next));
                CHECK(std::abs(wootters_concurrence(gs, site, next) - clipped) < 1e-9);
            }
        }
    }
}

TEST_CASE("ring average collapses to the two bond classes") {
    const GroundState gs = ground_state(CouplingParams{6, 1.0, 1.5});
    const MeanConcurrence mean = mean_concurrence(gs);
    const double c12s = signed_concurrence(gs, 1, 2);
    const double c23s = signed_concurrence(gs, 2, 3);
    CHECK(mean.signed_mean == doctest::Approx(0.5 * (c12s + c23s)).epsilon(1e-12));
    CHECK(mean.clipped_mean ==
          doctest::Approx(0.5 * (std::max(0.0, c12s) + std::max(0.0, c23s)))
              .epsilon(1e-12));
    // Here c12 is negative, so the clipped mean exceeds the signed one.
    CHECK(mean.clipped_mean > mean.signed_mean);
}

TEST_CASE("energy decomposes into coupling-weighted bond correlators") {
    for (int n : {4, 6, 8}) {
        for (double j2 : {0.2, 0.7, 1.0, 2.5}) {
            const GroundState gs = ground_state(CouplingParams{n, 1.0, j2});
            const ConcurrenceReport report = concurrence_report(gs);
            REQUIRE_FALSE(report.degenerate);
            CHECK(report.energy_relation_residual < 1e-12);
        }
    }
}

TEST_CASE("degenerate or unconverged states are refused") {
    GroundState fake = ground_state(CouplingParams{4, 1.0, 1.0});

    SUBCASE("tiny gap") {
        fake.gap = 1e-13;
        CHECK(is_degenerate(fake));
        CHECK_THROWS_AS((void)signed_concurrence(fake, 1, 2), DegeneracyError);
        CHECK_THROWS_AS((void)wootters_concurrence(fake, 1, 2), DegeneracyError);
        CHECK_THROWS_AS((void)mean_concurrence(fake), DegeneracyError);
        const ConcurrenceReport report = concurrence_report(fake);
        CHECK(report.degenerate);
        CHECK(std::isnan(report.c12_signed));
        CHECK(std::isnan(report.c_mean));
        CHECK(std::isnan(report.energy_relation_residual));
        CHECK(report.energy == fake.energy);
    }
    SUBCASE("unconverged") {
        fake.converged = false;
        CHECK_THROWS_AS((void)signed_concurrence(fake, 1, 2), NumericalError);
        CHECK(concurrence_report(fake).degenerate);
    }
    SUBCASE("site validation") {
        CHECK_THROWS_AS((void)signed_concurrence(fake, 1, 1), std::invalid_argument);
        CHECK_THROWS_AS((void)reduced_density_matrix(fake, 0, 2), std::invalid_argument);
        CHECK_THROWS_AS((void)wootters_concurrence(fake, 2, 5), std::invalid_argument);
    }
}

TEST_CASE("ground-energy derivative matches the summed bond correlator") {
    CHECK(feynman_hellmann_check(CouplingParams{4, 1.0, 1.0}, 1e-5) < 1e-6);
    CHECK(feynman_hellmann_check(CouplingParams{4, 1.0, 2.4}, 1e-5) < 1e-6);
    CHECK(feynman_hellmann_check(CouplingParams{6, 1.0, 0.7}, 1e-5) < 1e-6);
    CHECK(feynman_hellmann_check(CouplingParams{6, 1.0, 1.5}, 1e-4) < 1e-5);
    CHECK_THROWS_AS((void)feynman_hellmann_check(CouplingParams{4, 1.0, 1.0}, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)feynman_hellmann_check(CouplingParams{4, 1.0, 1.0}, 0.01),
                    std::invalid_argument);
}
