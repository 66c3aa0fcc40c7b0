// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0

#include "spindimer/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "spindimer/errors.hpp"
#include "spindimer/version.hpp"

namespace spindimer {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

const char* method_name(SolverMethod method) {
    switch (method) {
        case SolverMethod::Dense: return "dense";
        case SolverMethod::Lanczos: return "lanczos";
        case SolverMethod::Auto: return "auto";
    }
    return "auto";
}

ConcurrenceReport failed_row(const CouplingParams& params) {
    ConcurrenceReport row;
    row.params = params;
    row.degenerate = true;
    row.c12_signed = row.c23_signed = kNan;
    row.c12 = row.c23 = kNan;
    row.c_mean_signed = row.c_mean = kNan;
    row.energy = row.gap = kNan;
    row.energy_relation_residual = kNan;
    return row;
}

ConcurrenceReport solve_point(const CouplingParams& params, const SolveOptions& opts) {
    try {
        return concurrence_report(ground_state(params, opts));
    } catch (const std::exception&) {
        // Invalid couplings or a solver failure at one point must not kill
        // the sweep; the row is emitted flagged so downstream scans skip it.
        return failed_row(params);
    }
}

double bond_value(const ConcurrenceReport& row, BondClass which) {
    return which == BondClass::C12 ? row.c12_signed : row.c23_signed;
}

/// Golden-section maximum of f on [lo, hi] to interval width `width`.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double width) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > width) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = f(x1);
        }
    }
    return 0.5 * (lo + hi);
}

void append_double(std::string& line, double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    line += buf;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
    if (config.steps < 2) {
        throw std::invalid_argument("a sweep needs at least two grid points");
    }
    if (!(config.j2_min >= 0.0)) {
        throw std::invalid_argument("grid lower bound must be non-negative");
    }
    if (!(config.j2_max > config.j2_min)) {
        throw std::invalid_argument("grid upper bound must exceed the lower bound");
    }
    // Fails fast on a bad site count or negative J1; individual points may
    // still be invalid (J1 = J2 = 0) and are flagged instead.
    validate(CouplingParams{config.num_sites, config.j1, 1.0});

    std::vector<double> grid(static_cast<std::size_t>(config.steps));
    for (int i = 0; i < config.steps; ++i) {
        const double t = static_cast<double>(i) / (config.steps - 1);
        double value = config.j2_min + t * (config.j2_max - config.j2_min);
        if (config.ratio_grid) value *= config.j1;
        grid[static_cast<std::size_t>(i)] = value;
    }

    SweepResult result;
    result.rows.resize(grid.size());

    unsigned workers = config.threads > 0
                           ? static_cast<unsigned>(config.threads)
                           : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) {
            SolveOptions opts;
            opts.method = config.method;
            opts.seed = config.seed + i;
            result.rows[i] = solve_point(
                CouplingParams{config.num_sites, config.j1, grid[i]}, opts);
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    // Threshold refinement: bisection inside the first sign-changing cell of
    // each bond class, skipping flagged rows.
    SolveOptions refine_opts;
    refine_opts.method = config.method;
    refine_opts.seed = config.seed;
    for (BondClass which : {BondClass::C12, BondClass::C23}) {
        std::optional<double> found;
        for (std::size_t i = 0; i + 1 < result.rows.size() && !found; ++i) {
            const ConcurrenceReport& a = result.rows[i];
            const ConcurrenceReport& b = result.rows[i + 1];
            if (a.degenerate || b.degenerate) continue;
            const double fa = bond_value(a, which);
            const double fb = bond_value(b, which);
            if (fa == 0.0) {
                found = a.params.j2;
            } else if (fa * fb < 0.0) {
                try {
                    found = find_threshold(config.num_sites, config.j1, which,
                                           {a.params.j2, b.params.j2}, refine_opts);
                } catch (const std::exception&) {
                    found.reset();
                }
            }
        }
        (which == BondClass::C12 ? result.thresholds.j2th_12
                                 : result.thresholds.j2th_23) = found;
    }

    // Mean-concurrence maximum: coarse grid argmax, then golden-section on
    // the two neighboring cells when the winner is interior.
    std::size_t best = result.rows.size();
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        if (result.rows[i].degenerate) continue;
        if (best == result.rows.size() ||
            result.rows[i].c_mean_signed > result.rows[best].c_mean_signed) {
            best = i;
        }
    }
    if (best < result.rows.size()) {
        result.argmax_cmean = result.rows[best].params.j2;
        if (best > 0 && best + 1 < result.rows.size() &&
            !result.rows[best - 1].degenerate && !result.rows[best + 1].degenerate) {
            auto objective = [&](double j2) {
                return mean_concurrence(
                           ground_state(CouplingParams{config.num_sites, config.j1, j2},
                                        refine_opts))
                    .signed_mean;
            };
            try {
                result.argmax_cmean =
                    golden_max(objective, result.rows[best - 1].params.j2,
                               result.rows[best + 1].params.j2, 1e-6);
            } catch (const std::exception&) {
                result.argmax_cmean = result.rows[best].params.j2;
            }
        }
    } else {
        result.argmax_cmean = kNan;
    }
    return result;
}

std::optional<double> find_threshold(int num_sites, double j1, BondClass which,
                                     std::pair<double, double> bracket,
                                     const SolveOptions& opts, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    double lo = bracket.first;
    double hi = bracket.second;
    if (!(hi > lo)) throw std::invalid_argument("bracket must have positive width");

    auto f = [&](double j2) {
        const GroundState gs = ground_state(CouplingParams{num_sites, j1, j2}, opts);
        return which == BondClass::C12 ? signed_concurrence(gs, 1, 2)
                                       : signed_concurrence(gs, 2, 3);
    };

    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) return std::nullopt;

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if (flo * fmid < 0.0) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

void write_csv(const SweepResult& result, std::ostream& out) {
    out << "j2,c12_signed,c23_signed,c12,c23,c_mean_signed,c_mean,e_gs,gap,"
           "energy_relation_residual,degenerate\n";
    for (const ConcurrenceReport& row : result.rows) {
        std::string line;
        for (double value : {row.params.j2, row.c12_signed, row.c23_signed, row.c12,
                             row.c23, row.c_mean_signed, row.c_mean, row.energy,
                             row.gap, row.energy_relation_residual}) {
            append_double(line, value);
            line += ',';
        }
        line += row.degenerate ? '1' : '0';
        line += '\n';
        out << line;
    }
}

std::vector<ConcurrenceReport> read_csv(std::istream& in, int num_sites, double j1) {
    std::vector<ConcurrenceReport> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("j2,", 0) == 0) continue;  // header
        }
        std::istringstream fields(line);
        std::string field;
        std::vector<double> values;
        while (std::getline(fields, field, ',')) values.push_back(std::stod(field));
        if (values.size() != 11) {
            throw std::invalid_argument("expected 11 fields per row, got " +
                                        std::to_string(values.size()));
        }
        ConcurrenceReport row;
        row.params = CouplingParams{num_sites, j1, values[0]};
        row.c12_signed = values[1];
        row.c23_signed = values[2];
        row.c12 = values[3];
        row.c23 = values[4];
        row.c_mean_signed = values[5];
        row.c_mean = values[6];
        row.energy = values[7];
        row.gap = values[8];
        row.energy_relation_residual = values[9];
        row.degenerate = values[10] != 0.0;
        rows.push_back(row);
    }
    return rows;
}

void write_json(const SweepConfig& config, const SweepResult& result, std::ostream& out) {
    nlohmann::json doc;
    doc["meta"] = {{"n", config.num_sites},
                   {"j1", config.j1},
                   {"seed", config.seed},
                   {"method", method_name(config.method)},
                   {"version", kVersion}};
    doc["rows"] = nlohmann::json::array();
    for (const ConcurrenceReport& row : result.rows) {
        doc["rows"].push_back({{"j2", row.params.j2},
                               {"c12_signed", row.c12_signed},
                               {"c23_signed", row.c23_signed},
                               {"c12", row.c12},
                               {"c23", row.c23},
                               {"c_mean_signed", row.c_mean_signed},
                               {"c_mean", row.c_mean},
                               {"e_gs", row.energy},
                               {"gap", row.gap},
                               {"energy_relation_residual", row.energy_relation_residual},
                               {"degenerate", row.degenerate}});
    }
    doc["summary"]["argmax_cmean"] = result.argmax_cmean;
    if (result.thresholds.j2th_12) {
        doc["summary"]["j2th_12"] = *result.thresholds.j2th_12;
    } else {
        doc["summary"]["j2th_12"] = nullptr;
    }
    if (result.thresholds.j2th_23) {
        doc["summary"]["j2th_23"] = *result.thresholds.j2th_23;
    } else {
        doc["summary"]["j2th_23"] = nullptr;
    }
    out << doc.dump(2) << '\n';
}

}  // namespace spindimer
