// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#include "spindimer/basis.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace spindimer {

namespace {

constexpr int kTableSize = kMaxSites + 1;

constexpr std::array<std::array<std::uint64_t, kTableSize>, kTableSize> make_binomial_table() {
    std::array<std::array<std::uint64_t, kTableSize>, kTableSize> c{};
    for (int n = 0; n < kTableSize; ++n) {
        c[n][0] = 1;
        for (int k = 1; k <= n; ++k) {
            c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
    return c;
}

constexpr auto kBinomial = make_binomial_table();

void check_sites(int num_sites) {
    if (num_sites < kMinSites || num_sites > kMaxSites || num_sites % 2 != 0) {
        throw std::invalid_argument("num_sites must be even and in [4, 24], got " +
                                    std::to_string(num_sites));
    }
}

// Rank of a fixed-popcount pattern in ascending numeric order: the i-th set
// bit (i = 1.., positions ascending) at position p contributes C(p, i).
std::size_t combinatorial_rank(std::uint32_t bits) {
    std::size_t rank = 0;
    int seen = 0;
    while (bits != 0) {
        const int p = std::countr_zero(bits);
        ++seen;
        rank += kBinomial[p][seen];
        bits &= bits - 1;
    }
    return rank;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (n < 0 || n >= kTableSize || k < 0 || k > n) return 0;
    return kBinomial[n][k];
}

std::uint32_t bits_from_ket(std::string_view ket) {
    if (ket.empty() || ket.size() > static_cast<std::size_t>(kMaxSites)) {
        throw std::invalid_argument("ket label must have 1..24 digits");
    }
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < ket.size(); ++i) {
        if (ket[i] == '1') {
            bits |= 1u << i;
        } else if (ket[i] != '0') {
            throw std::invalid_argument("ket label must be binary digits");
        }
    }
    return bits;
}

std::string ket_from_bits(std::uint32_t bits, int num_sites) {
    std::string ket(static_cast<std::size_t>(num_sites), '0');
    for (int i = 0; i < num_sites; ++i) {
        if ((bits >> i) & 1u) ket[static_cast<std::size_t>(i)] = '1';
    }
    return ket;
}

BasisState spin_flip(const BasisState& s) {
    const std::uint32_t mask = (s.num_sites == 32) ? ~0u : ((1u << s.num_sites) - 1u);
    return {static_cast<std::uint32_t>(~s.bits) & mask, s.num_sites};
}

BasisState pair_swap(const BasisState& s) {
    const int n = s.num_sites;
    const std::uint32_t mask = (1u << n) - 1u;
    const std::uint32_t rotated = ((s.bits << 2) | (s.bits >> (n - 2))) & mask;
    return {rotated, n};
}

Sector::Sector(int num_sites, int reversed_spins, std::vector<std::uint32_t> basis)
    : num_sites_(num_sites), reversed_(reversed_spins), basis_(std::move(basis)) {}

std::size_t Sector::index_of(std::uint32_t bits) const {
    if (std::popcount(bits) != reversed_ || bits >= (1u << num_sites_)) {
        throw std::invalid_argument("state is not a member of this sector");
    }
    return combinatorial_rank(bits);
}

Sector enumerate_sector(int num_sites, int reversed_spins) {
    check_sites(num_sites);
    if (reversed_spins < 0 || reversed_spins > num_sites) {
        throw std::invalid_argument("reversed_spins must be in [0, N], got " +
                                    std::to_string(reversed_spins));
    }

    std::vector<std::uint32_t> basis;
    basis.reserve(kBinomial[num_sites][reversed_spins]);

    if (reversed_spins == 0) {
        basis.push_back(0);
        return Sector(num_sites, reversed_spins, std::move(basis));
    }

    // Gosper's hack walks the popcount-r patterns in ascending order.
    const std::uint32_t limit = 1u << num_sites;
    std::uint32_t v = (1u << reversed_spins) - 1u;
    while (v < limit) {
        basis.push_back(v);
        const std::uint32_t t = v | (v - 1u);
        if (t == ~0u) break;
        v = (t + 1u) | (((~t & (t + 1u)) - 1u) >> (std::countr_zero(v) + 1));
    }
    return Sector(num_sites, reversed_spins, std::move(basis));
}

SymmetrizedBasis4 build_symmetrized_basis4(int r) {
    if (r != 1 && r != 2) {
        throw std::invalid_argument("symmetrized N=4 basis is defined for r in {1, 2}");
    }

    auto pair = [](std::string_view ka, std::string_view kb, int sign) {
        return SymmetrizedPair{{bits_from_ket(ka), 4}, {bits_from_ket(kb), 4}, sign};
    };

    SymmetrizedBasis4 out;
    out.sector_r = r;
    if (r == 1) {
        out.plus_block = {pair("1000", "0010", +1), pair("0100", "0001", +1)};
        out.minus_block = {pair("1000", "0010", -1), pair("0100", "0001", -1)};
    } else {
        out.plus_block = {pair("1100", "0011", +1), pair("1001", "0110", +1),
                          pair("0101", "1010", +1)};
        out.minus_block = {pair("1100", "0011", -1), pair("1001", "0110", -1),
                           pair("0101", "1010", -1)};
    }
    return out;
}

}  // namespace spindimer
