// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#include <bit>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "spindimer/basis.hpp"

using namespace spindimer;

TEST_CASE("binomial matches Pascal recursion") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(24, 12) == 2704156);
    CHECK(binomial(24, 0) == 1);
    CHECK(binomial(24, 24) == 1);
    for (int n = 1; n <= 24; ++n) {
        for (int k = 1; k < n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("ket labels map to bits with site 1 on the least significant bit") {
    CHECK(bits_from_ket("1000") == 1);
    CHECK(bits_from_ket("0010") == 4);
    CHECK(bits_from_ket("1100") == 3);
    CHECK(bits_from_ket("0011") == 12);
    CHECK(bits_from_ket("1001") == 9);
    CHECK(bits_from_ket("0110") == 6);
    CHECK(bits_from_ket("0101") == 10);
    CHECK(bits_from_ket("1010") == 5);
    CHECK(ket_from_bits(9, 4) == "1001");
    CHECK(ket_from_bits(0, 6) == "000000");
    for (std::uint32_t s = 0; s < 64; ++s) {
        CHECK(bits_from_ket(ket_from_bits(s, 6)) == s);
    }
    CHECK_THROWS_AS((void)bits_from_ket("10x0"), std::invalid_argument);
    CHECK_THROWS_AS((void)bits_from_ket(""), std::invalid_argument);
}

TEST_CASE("spin flip complements every site and is an involution") {
    const BasisState s{bits_from_ket("1010"), 4};
    CHECK(spin_flip(s) == BasisState{bits_from_ket("0101"), 4});
    for (std::uint32_t bits = 0; bits < 16; ++bits) {
        const BasisState t{bits, 4};
        CHECK(spin_flip(spin_flip(t)) == t);
        CHECK(std::popcount(spin_flip(t).bits) == 4 - std::popcount(bits));
    }
}

TEST_CASE("pair swap translates by one dimer") {
    CHECK(pair_swap(BasisState{bits_from_ket("1100"), 4}) ==
          BasisState{bits_from_ket("0011"), 4});
    CHECK(pair_swap(BasisState{bits_from_ket("1001"), 4}) ==
          BasisState{bits_from_ket("0110"), 4});
    CHECK(pair_swap(BasisState{bits_from_ket("0101"), 4}) ==
          BasisState{bits_from_ket("0101"), 4});
    CHECK(pair_swap(BasisState{bits_from_ket("100000"), 6}) ==
          BasisState{bits_from_ket("001000"), 6});

    // N/2 applications walk all the way around the ring.
    for (std::uint32_t bits = 0; bits < 64; ++bits) {
        BasisState t{bits, 6};
        for (int hop = 0; hop < 3; ++hop) {
            CHECK(std::popcount(pair_swap(t).bits) == std::popcount(t.bits));
            t = pair_swap(t);
        }
        CHECK(t == BasisState{bits, 6});
    }
}

TEST_CASE("sector enumeration is the ascending popcount-r basis") {
    const Sector sector = enumerate_sector(4, 2);
    CHECK(sector.num_sites() == 4);
    CHECK(sector.reversed_spins() == 2);
    REQUIRE(sector.size() == 6);
    const std::vector<std::uint32_t> expected{3, 5, 6, 9, 10, 12};
    CHECK(sector.states() == expected);

    SUBCASE("index_of inverts state() and rejects foreign patterns") {
        for (std::size_t i = 0; i < sector.size(); ++i) {
            CHECK(sector.index_of(sector.state(i)) == i);
        }
        CHECK_THROWS_AS((void)sector.index_of(1), std::invalid_argument);   // popcount 1
        CHECK_THROWS_AS((void)sector.index_of(17), std::invalid_argument);  // bit outside N
    }
}

TEST_CASE("sector sizes and ranks stay consistent at larger N") {
    for (int n : {6, 10, 12}) {
        for (int r : {0, 1, n / 2, n}) {
            const Sector sector = enumerate_sector(n, r);
            REQUIRE(sector.size() == binomial(n, r));
            for (std::size_t i = 1; i < sector.size(); ++i) {
                CHECK(sector.state(i - 1) < sector.state(i));
            }
            // Spot-check the rank inversion on a deterministic sample.
            std::mt19937_64 rng(7);
            for (int probe = 0; probe < 32 && sector.size() > 0; ++probe) {
                const std::size_t i = rng() % sector.size();
                CHECK(sector.index_of(sector.state(i)) == i);
            }
        }
    }
    CHECK_THROWS_AS((void)enumerate_sector(5, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)enumerate_sector(26, 13), std::invalid_argument);
    CHECK_THROWS_AS((void)enumerate_sector(6, 7), std::invalid_argument);
}

TEST_CASE("symmetry-adapted four-site basis splits into translation blocks") {
    SUBCASE("single reversed spin") {
        const SymmetrizedBasis4 basis = build_symmetrized_basis4(1);
        CHECK(basis.sector_r == 1);
        REQUIRE(basis.plus_block.size() == 2);
        REQUIRE(basis.minus_block.size() == 2);
        CHECK(basis.plus_block[0].a == BasisState{bits_from_ket("1000"), 4});
        CHECK(basis.plus_block[0].b == BasisState{bits_from_ket("0010"), 4});
        CHECK(basis.plus_block[1].a == BasisState{bits_from_ket("0100"), 4});
        CHECK(basis.plus_block[1].b == BasisState{bits_from_ket("0001"), 4});
    }
    SUBCASE("two reversed spins") {
        const SymmetrizedBasis4 basis = build_symmetrized_basis4(2);
        REQUIRE(basis.plus_block.size() == 3);
        REQUIRE(basis.minus_block.size() == 3);
        CHECK(basis.plus_block[0].a == BasisState{bits_from_ket("1100"), 4});
        CHECK(basis.plus_block[0].b == BasisState{bits_from_ket("0011"), 4});
        CHECK(basis.plus_block[1].a == BasisState{bits_from_ket("1001"), 4});
        CHECK(basis.plus_block[1].b == BasisState{bits_from_ket("0110"), 4});
        CHECK(basis.plus_block[2].a == BasisState{bits_from_ket("0101"), 4});
        CHECK(basis.plus_block[2].b == BasisState{bits_from_ket("1010"), 4});
    }
    SUBCASE("every pair is a translation image with the matching sign") {
        for (int r : {1, 2}) {
            const SymmetrizedBasis4 basis = build_symmetrized_basis4(r);
            for (const SymmetrizedPair& pair : basis.plus_block) {
                CHECK(pair.sign == +1);
            }
            for (const SymmetrizedPair& pair : basis.minus_block) {
                CHECK(pair.sign == -1);
            }
        }
    }
    CHECK_THROWS_AS((void)build_symmetrized_basis4(0), std::invalid_argument);
    CHECK_THROWS_AS((void)build_symmetrized_basis4(3), std::invalid_argument);
}
