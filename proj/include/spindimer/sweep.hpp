// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "spindimer/entanglement.hpp"

namespace spindimer {

enum class OutputFormat { Csv, Json };

struct SweepConfig {
    int num_sites = 4;
    double j1 = 1.0;
    double j2_min = 0.0;  // requires 0 <= j2_min < j2_max
    double j2_max = 4.0;
    int steps = 81;       // grid points, at least 2
    SolverMethod method = SolverMethod::Auto;
    std::uint64_t seed = 42;
    OutputFormat format = OutputFormat::Csv;
    std::string output_path;  // empty = stdout
    bool ratio_grid = false;  // grid values are J2/J1 instead of J2
    int threads = 0;          // 0 = hardware concurrency
};

struct Thresholds {
    std::optional<double> j2th_12;  // signed C12 root (entanglement of J1 bonds dies)
    std::optional<double> j2th_23;  // signed C23 root (entanglement of J2 bonds appears)
};

struct SweepResult {
    std::vector<ConcurrenceReport> rows;  // ascending J2
    double argmax_cmean = 0.0;            // refined argmax of the signed mean
    Thresholds thresholds;
};

/// One ground-state solve and concurrence report per grid point,
/// parallelized over points with deterministic per-point seeding, followed
/// by threshold bisection and golden-section refinement of the mean-
/// concurrence maximum. Degenerate points are flagged and skipped by the
/// refinements.
SweepResult run_sweep(const SweepConfig& config);

enum class BondClass { C12, C23 };

/// Bisection root of the signed concurrence in J2 at fixed J1, to
/// |dJ2| < tol. Returns nullopt when the bracket shows no sign change.
std::optional<double> find_threshold(int num_sites, double j1, BondClass which,
                                     std::pair<double, double> bracket,
                                     const SolveOptions& opts = {},
                                     double tol = 1e-8);

// CSV columns, in order:
//   j2, c12_signed, c23_signed, c12, c23, c_mean_signed, c_mean, e_gs,
//   gap, energy_relation_residual, degenerate
// Doubles are written with 17 significant digits so parsing reproduces
// them bitwise.
void write_csv(const SweepResult& result, std::ostream& out);

/// Parse rows written by write_csv; N and J1 are not stored in the file.
std::vector<ConcurrenceReport> read_csv(std::istream& in, int num_sites, double j1);

/// One metadata object (n, j1, seed, method, version), the row array with
/// the CSV field names, and the refined summary.
void write_json(const SweepConfig& config, const SweepResult& result, std::ostream& out);

}  // namespace spindimer
