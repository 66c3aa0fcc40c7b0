// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#include "spindimer/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spindimer {

namespace {

struct BondMask {
    std::uint32_t mask = 0;  // both bond bits
    int shift_a = 0;
    int shift_b = 0;
    double coupling = 0.0;
};

std::vector<BondMask> bond_masks(const CouplingParams& params) {
    std::vector<BondMask> masks;
    masks.reserve(static_cast<std::size_t>(params.num_sites));
    for (const Bond& b : bond_list(params)) {
        const int sa = b.site_a - 1;
        const int sb = b.site_b - 1;
        masks.push_back({(1u << sa) | (1u << sb), sa, sb, b.coupling});
    }
    return masks;
}

void check_site(int site, int num_sites, const char* name) {
    if (site < 1 || site > num_sites) {
        throw std::invalid_argument(std::string(name) + " must be in [1, N]");
    }
}

}  // namespace

void validate(const CouplingParams& params) {
    if (params.num_sites < kMinSites || params.num_sites > kMaxSites ||
        params.num_sites % 2 != 0) {
        throw std::invalid_argument("num_sites must be even and in [4, 24], got " +
                                    std::to_string(params.num_sites));
    }
    if (!(params.j1 >= 0.0) || !(params.j2 >= 0.0)) {
        throw std::invalid_argument("couplings must satisfy J1 >= 0 and J2 >= 0");
    }
    if (params.j1 == 0.0 && params.j2 == 0.0) {
        throw std::invalid_argument("couplings must not both be zero");
    }
}

std::vector<Bond> bond_list(const CouplingParams& params) {
    validate(params);
    const int n = params.num_sites;
    std::vector<Bond> bonds;
    bonds.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n / 2; ++i) {
        bonds.push_back({2 * i - 1, 2 * i, params.j1});
        bonds.push_back({2 * i, (2 * i) % n + 1, params.j2});
    }
    return bonds;
}

void apply_into(const CouplingParams& params, const Sector& sector,
                const Eigen::Ref<const Eigen::VectorXd>& v,
                Eigen::Ref<Eigen::VectorXd> out) {
    const auto dim = static_cast<Eigen::Index>(sector.size());
    if (v.size() != dim || out.size() != dim) {
        throw std::invalid_argument("vector length must equal the sector dimension");
    }
    const std::vector<BondMask> masks = bond_masks(params);
    const std::vector<std::uint32_t>& states = sector.states();

    out.setZero();
    for (Eigen::Index k = 0; k < dim; ++k) {
        const std::uint32_t s = states[static_cast<std::size_t>(k)];
        const double amp = v[k];
        double diag = 0.0;
        for (const BondMask& m : masks) {
            const std::uint32_t x = ((s >> m.shift_a) ^ (s >> m.shift_b)) & 1u;
            diag += m.coupling * static_cast<double>(1u - x);
            if (x != 0u) {
                out[static_cast<Eigen::Index>(sector.index_of(s ^ m.mask))] +=
                    m.coupling * amp;
            }
        }
        out[k] += diag * amp;
    }
}

Eigen::VectorXd apply(const CouplingParams& params, const Sector& sector,
                      const Eigen::Ref<const Eigen::VectorXd>& v) {
    Eigen::VectorXd out(v.size());
    apply_into(params, sector, v, out);
    return out;
}

Eigen::MatrixXd dense_matrix(const CouplingParams& params, const Sector& sector,
                             std::size_t max_dim) {
    if (sector.size() > max_dim) {
        throw std::invalid_argument("sector dimension " + std::to_string(sector.size()) +
                                    " exceeds the dense cap " + std::to_string(max_dim));
    }
    const auto dim = static_cast<Eigen::Index>(sector.size());
    const std::vector<BondMask> masks = bond_masks(params);
    const std::vector<std::uint32_t>& states = sector.states();

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const std::uint32_t s = states[static_cast<std::size_t>(k)];
        double diag = 0.0;
        for (const BondMask& m : masks) {
            const std::uint32_t x = ((s >> m.shift_a) ^ (s >> m.shift_b)) & 1u;
            diag += m.coupling * static_cast<double>(1u - x);
            if (x != 0u) {
                h(static_cast<Eigen::Index>(sector.index_of(s ^ m.mask)), k) += m.coupling;
            }
        }
        h(k, k) += diag;
    }
    return h;
}

double swap_expectation(const Sector& sector,
                        const Eigen::Ref<const Eigen::VectorXd>& v,
                        int site_a, int site_b) {
    const int n = sector.num_sites();
    check_site(site_a, n, "site_a");
    check_site(site_b, n, "site_b");
    if (site_a == site_b) {
        throw std::invalid_argument("swap expectation needs two distinct sites");
    }
    if (v.size() != static_cast<Eigen::Index>(sector.size())) {
        throw std::invalid_argument("vector length must equal the sector dimension");
    }
    if (std::abs(v.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("swap expectation requires a normalized vector");
    }

    const int sa = site_a - 1;
    const int sb = site_b - 1;
    const std::uint32_t mask = (1u << sa) | (1u << sb);
    const std::vector<std::uint32_t>& states = sector.states();

    double acc = 0.0;
    for (std::size_t k = 0; k < states.size(); ++k) {
        const std::uint32_t s = states[k];
        const std::uint32_t x = ((s >> sa) ^ (s >> sb)) & 1u;
        const double amp = v[static_cast<Eigen::Index>(k)];
        if (x == 0u) {
            acc += amp * amp;
        } else {
            acc += amp * v[static_cast<Eigen::Index>(sector.index_of(s ^ mask))];
        }
    }
    return acc;
}

}  // namespace spindimer
