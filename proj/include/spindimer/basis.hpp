// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spindimer {

// Site/bit convention, used everywhere: site i (1-based, as in ket labels
// |m1 m2 ... mN>) lives on bit i-1, so the leftmost ket digit is the least
// significant bit. A set bit marks a reversed spin.

inline constexpr int kMinSites = 4;
inline constexpr int kMaxSites = 24;

/// One computational-basis spin configuration of an N-site ring.
struct BasisState {
    std::uint32_t bits = 0;
    int num_sites = 0;

    friend bool operator==(const BasisState&, const BasisState&) = default;
};

/// Parse a ket label like "1001" into a bit pattern (leftmost digit = site 1).
std::uint32_t bits_from_ket(std::string_view ket);

/// Inverse of bits_from_ket.
std::string ket_from_bits(std::uint32_t bits, int num_sites);

std::uint64_t binomial(int n, int k);

/// Global spin flip Sigma_x: complements all N bits. Involution; maps the
/// r sector onto the N-r sector.
BasisState spin_flip(const BasisState& s);

/// Translation by two sites: bit i -> bit (i+2) mod N. At N=4 this is the
/// dimer-block exchange |m1 m2 m3 m4> -> |m3 m4 m1 m2>. Preserves popcount;
/// applying it N/2 times is the identity.
BasisState pair_swap(const BasisState& s);

/// Invariant subspace of fixed reversed-spin count r. The basis is every
/// N-bit pattern with popcount r, in ascending numeric order.
class Sector {
public:
    Sector(int num_sites, int reversed_spins, std::vector<std::uint32_t> basis);

    int num_sites() const { return num_sites_; }
    int reversed_spins() const { return reversed_; }
    std::size_t size() const { return basis_.size(); }
    std::uint32_t state(std::size_t i) const { return basis_[i]; }
    BasisState basis_state(std::size_t i) const { return {basis_[i], num_sites_}; }
    const std::vector<std::uint32_t>& states() const { return basis_; }

    /// Position of a pattern in the ascending basis order (combinatorial
    /// rank). Throws std::invalid_argument if the pattern is not in the
    /// sector.
    std::size_t index_of(std::uint32_t bits) const;

private:
    int num_sites_;
    int reversed_;
    std::vector<std::uint32_t> basis_;
};

/// All popcount-r states of an even N-site ring, 4 <= N <= 24, 0 <= r <= N.
Sector enumerate_sector(int num_sites, int reversed_spins);

/// Two-term superposition (|a> + sign * |b>) / sqrt(2); a pair_swap
/// eigenvector with eigenvalue `sign`.
struct SymmetrizedPair {
    BasisState a;
    BasisState b;
    int sign = +1;
};

/// The symmetry-adapted N=4 basis of the r=1 or r=2 sector, split into
/// pair_swap eigenvalue +1 / -1 blocks.
struct SymmetrizedBasis4 {
    int sector_r = 0;
    std::vector<SymmetrizedPair> plus_block;
    std::vector<SymmetrizedPair> minus_block;
};

SymmetrizedBasis4 build_symmetrized_basis4(int r);

}  // namespace spindimer
