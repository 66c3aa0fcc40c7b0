// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "spindimer/fullspace.hpp"
#include "spindimer/hamiltonian.hpp"

using namespace spindimer;

TEST_CASE("coupling validation enforces the ring domain") {
    CHECK_NOTHROW(validate(CouplingParams{4, 1.0, 0.0}));
    CHECK_NOTHROW(validate(CouplingParams{24, 0.0, 2.5}));
    CHECK_THROWS_AS(validate(CouplingParams{5, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(CouplingParams{2, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(CouplingParams{26, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(CouplingParams{4, -0.1, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(CouplingParams{4, 1.0, -2.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(CouplingParams{4, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("bond list alternates intra- and inter-dimer couplings around the ring") {
    const std::vector<Bond> bonds = bond_list(CouplingParams{6, 1.5, 0.25});
    REQUIRE(bonds.size() == 6);
    const std::vector<Bond> expected{{1, 2, 1.5}, {2, 3, 0.25}, {3, 4, 1.5},
                                     {4, 5, 0.25}, {5, 6, 1.5}, {6, 1, 0.25}};
    for (std::size_t i = 0; i < bonds.size(); ++i) {
        CHECK(bonds[i].site_a == expected[i].site_a);
        CHECK(bonds[i].site_b == expected[i].site_b);
        CHECK(bonds[i].coupling == expected[i].coupling);
    }
}

TEST_CASE("dense sector matrix is symmetric and traces to the aligned-bond count") {
    const CouplingParams params{6, 1.3, 0.4};
    double sector_trace_sum = 0.0;
    for (int r = 0; r <= 6; ++r) {
        const Eigen::MatrixXd h = dense_matrix(params, enumerate_sector(6, r));
        CHECK((h - h.transpose()).lpNorm<Eigen::Infinity>() == 0.0);
        sector_trace_sum += h.trace();
    }
    // Each bond swap contributes its coupling on every aligned configuration:
    // summed over the whole space that is 2^(N-1) per bond.
    const double expected = 32.0 * (3 * 1.3 + 3 * 0.4);
    CHECK(sector_trace_sum == doctest::Approx(expected).epsilon(1e-13));
    CHECK(full_space_matrix(params).trace() == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("matrix-free apply agrees with the dense matrix") {
    const CouplingParams params{6, 0.8, 1.7};
    const Sector sector = enumerate_sector(6, 3);
    const Eigen::MatrixXd h = dense_matrix(params, sector);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        Eigen::VectorXd v(static_cast<Eigen::Index>(sector.size()));
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            v[i] = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
        }
        CHECK((apply(params, sector, v) - h * v).lpNorm<Eigen::Infinity>() < 1e-12);
    }
}

TEST_CASE("apply conserves the magnetization sector") {
    // A two-spin-flip image of any sector state stays inside the sector, so
    // H acting on a sector unit vector must reproduce exactly the dense
    // column; cross-sector leakage would show up as a norm mismatch.
    const CouplingParams params{8, 1.0, 0.9};
    const Sector sector = enumerate_sector(8, 4);
    const Eigen::MatrixXd h = dense_matrix(params, sector);
    Eigen::VectorXd unit = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(sector.size()));
    unit[17] = 1.0;
    CHECK((apply(params, sector, unit) - h.col(17)).norm() == 0.0);
}

TEST_CASE("dense matrix refuses sectors beyond the cap") {
    const Sector big = enumerate_sector(16, 8);  // 12870 states
    CHECK_THROWS_AS((void)dense_matrix(CouplingParams{16, 1.0, 1.0}, big),
                    std::invalid_argument);
    CHECK_NOTHROW((void)dense_matrix(CouplingParams{16, 1.0, 1.0},
                                     enumerate_sector(16, 2)));  // 120 states
}

TEST_CASE("swap expectation reproduces hand-computed singlet values") {
    // Two-singlet product state on sites (1,2) and (3,4): the state
    // (|10> - |01>)/sqrt(2) on each dimer, embedded in the r=2 sector.
    const Sector sector = enumerate_sector(4, 2);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(6);
    // |1010> - |1001> - |0110> + |0101>, sites left to right, amplitude 1/2.
    v[static_cast<Eigen::Index>(sector.index_of(bits_from_ket("1010")))] = 0.5;
    v[static_cast<Eigen::Index>(sector.index_of(bits_from_ket("1001")))] = -0.5;
    v[static_cast<Eigen::Index>(sector.index_of(bits_from_ket("0110")))] = -0.5;
    v[static_cast<Eigen::Index>(sector.index_of(bits_from_ket("0101")))] = 0.5;

    // A singlet bond has swap expectation -1. Across two different singlets
    // the spins are uncorrelated, so only the identity half of the swap
    // survives: +1/2.
    CHECK(swap_expectation(sector, v, 1, 2) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(swap_expectation(sector, v, 3, 4) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(swap_expectation(sector, v, 2, 3) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(swap_expectation(sector, v, 1, 3) == doctest::Approx(0.5).epsilon(1e-14));

    SUBCASE("site and norm validation") {
        CHECK_THROWS_AS((void)swap_expectation(sector, v, 1, 1), std::invalid_argument);
        CHECK_THROWS_AS((void)swap_expectation(sector, v, 0, 2), std::invalid_argument);
        CHECK_THROWS_AS((void)swap_expectation(sector, v, 1, 5), std::invalid_argument);
        CHECK_THROWS((void)swap_expectation(sector, 2.0 * v, 1, 2));
    }
}

TEST_CASE("energy scale is linear in the couplings") {
    const Sector sector = enumerate_sector(6, 3);
    const Eigen::MatrixXd h1 = dense_matrix(CouplingParams{6, 1.0, 0.5}, sector);
    const Eigen::MatrixXd h2 = dense_matrix(CouplingParams{6, 3.0, 1.5}, sector);
    CHECK((h2 - 3.0 * h1).lpNorm<Eigen::Infinity>() < 1e-12);
}
