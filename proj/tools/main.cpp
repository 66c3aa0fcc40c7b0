// Copyright 2026 The Spindimer Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: ground-state concurrence sweeps, threshold
// bisection, the cross-validation suite, and spectrum dumps for dimerized
// Heisenberg rings.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spindimer/errors.hpp"
#include "spindimer/eigensolver.hpp"
#include "spindimer/sweep.hpp"
#include "spindimer/verify.hpp"
#include "spindimer/version.hpp"

namespace {

spindimer::SolverMethod parse_method(const std::string& name) {
    if (name == "dense") return spindimer::SolverMethod::Dense;
    if (name == "lanczos") return spindimer::SolverMethod::Lanczos;
    return spindimer::SolverMethod::Auto;
}

/// Writes through `sink` to the file at `path`, or to stdout when empty.
int with_output(const std::string& path, const std::function<void(std::ostream&)>& sink) {
    if (path.empty()) {
        sink(std::cout);
        return 0;
    }
    std::ofstream file(path);
    if (!file) {
        throw std::invalid_argument("cannot open output file: " + path);
    }
    sink(file);
    return 0;
}

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

int run_sweep_command(const spindimer::SweepConfig& config) {
    const spindimer::SweepResult result = spindimer::run_sweep(config);
    return with_output(config.output_path, [&](std::ostream& out) {
        if (config.format == spindimer::OutputFormat::Json) {
            spindimer::write_json(config, result, out);
        } else {
            spindimer::write_csv(result, out);
        }
    });
}

int run_threshold_command(int n, double j1, const std::string& which,
                          const std::vector<double>& bracket,
                          const std::string& method, std::uint64_t seed) {
    spindimer::SolveOptions opts;
    opts.method = parse_method(method);
    opts.seed = seed;
    const auto bond_class =
        which == "c23" ? spindimer::BondClass::C23 : spindimer::BondClass::C12;
    const std::optional<double> j2 = spindimer::find_threshold(
        n, j1, bond_class, {bracket[0], bracket[1]}, opts);
    if (j2) {
        std::cout << format_double(*j2) << '\n';
        return 0;
    }
    std::cout << "none (no sign change of " << which << " in ["
              << format_double(bracket[0]) << ", " << format_double(bracket[1]) << "])\n";
    return 0;
}

int run_verify_command(const std::vector<int>& n_list, std::uint64_t seed) {
    const spindimer::VerificationReport report = spindimer::verify(n_list, seed);
    for (const spindimer::VerificationCheck& check : report.checks) {
        std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << " (N=";
        for (std::size_t i = 0; i < check.sizes.size(); ++i) {
            std::cout << (i ? "," : "") << check.sizes[i];
        }
        std::cout << ") max_deviation=" << format_double(check.max_deviation)
                  << " tolerance=" << format_double(check.tolerance) << '\n';
    }
    if (!report.all_passed()) {
        std::cerr << "verification failed\n";
        return 2;
    }
    return 0;
}

int run_spectrum_command(int n, double j1, double j2, const std::string& format,
                         const std::string& out_path) {
    const spindimer::SpectrumReport report =
        spindimer::full_spectrum(spindimer::CouplingParams{n, j1, j2});
    return with_output(out_path, [&](std::ostream& out) {
        if (format == "json") {
            nlohmann::json doc;
            doc["meta"] = {{"n", n}, {"j1", j1}, {"j2", j2},
                           {"version", spindimer::kVersion}};
            doc["eigenvalues"] = report.eigenvalues;
            for (const auto& [r, values] : report.sector_breakdown) {
                doc["sectors"][std::to_string(r)] = values;
            }
            out << doc.dump(2) << '\n';
        } else {
            out << "r,index,energy\n";
            for (const auto& [r, values] : report.sector_breakdown) {
                for (std::size_t i = 0; i < values.size(); ++i) {
                    out << r << ',' << i << ',' << format_double(values[i]) << '\n';
                }
            }
        }
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ground-state pairwise entanglement of dimerized Heisenberg rings"};
    app.set_version_flag("--version", spindimer::kVersion);
    app.require_subcommand(1);

    // --- sweep ---
    spindimer::SweepConfig config;
    std::string sweep_method = "auto";
    std::string sweep_format = "csv";
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Concurrence and energy across a J2 grid at fixed J1");
    sweep->add_option("--n", config.num_sites, "Number of sites (even, 4..24)")
        ->capture_default_str();
    sweep->add_option("--j1", config.j1, "Intra-dimer coupling")->capture_default_str();
    sweep->add_option("--j2-min", config.j2_min, "Grid lower bound")->capture_default_str();
    sweep->add_option("--j2-max", config.j2_max, "Grid upper bound")->capture_default_str();
    sweep->add_option("--steps", config.steps, "Grid point count")->capture_default_str();
    sweep->add_option("--method", sweep_method, "Solver: dense, lanczos, auto")
        ->check(CLI::IsMember({"dense", "lanczos", "auto"}))
        ->capture_default_str();
    sweep->add_option("--seed", config.seed, "Lanczos start-vector seed")
        ->capture_default_str();
    sweep->add_option("--format", sweep_format, "Output format: csv, json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep->add_option("--out", config.output_path, "Output file (default stdout)");
    sweep->add_flag("--ratio", config.ratio_grid,
                    "Interpret the grid as J2/J1 instead of J2");
    sweep->add_option("--threads", config.threads,
                      "Worker threads (0 = hardware concurrency)")
        ->capture_default_str();

    // --- threshold ---
    int th_n = 4;
    double th_j1 = 1.0;
    std::string th_which = "c12";
    std::vector<double> th_bracket{0.0, 4.0};
    std::string th_method = "auto";
    std::uint64_t th_seed = 42;
    CLI::App* threshold = app.add_subcommand(
        "threshold", "Bisect the J2 where a bond class's concurrence vanishes");
    threshold->add_option("--n", th_n, "Number of sites (even, 4..24)")
        ->capture_default_str();
    threshold->add_option("--j1", th_j1, "Intra-dimer coupling")->capture_default_str();
    threshold->add_option("--which", th_which, "Bond class: c12, c23")
        ->check(CLI::IsMember({"c12", "c23"}))
        ->capture_default_str();
    threshold->add_option("--bracket", th_bracket, "J2 bracket (two values)")
        ->expected(2);
    threshold->add_option("--method", th_method, "Solver: dense, lanczos, auto")
        ->check(CLI::IsMember({"dense", "lanczos", "auto"}))
        ->capture_default_str();
    threshold->add_option("--seed", th_seed, "Lanczos start-vector seed")
        ->capture_default_str();

    // --- verify ---
    std::vector<int> verify_n{4, 6, 8};
    std::uint64_t verify_seed = 42;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Run the bundled cross-validation suite");
    verify_cmd->add_option("--n", verify_n, "Site counts to cover")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_seed, "Random-point seed")
        ->capture_default_str();

    // --- spectrum ---
    int sp_n = 4;
    double sp_j1 = 1.0;
    double sp_j2 = 1.0;
    std::string sp_format = "csv";
    std::string sp_out;
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "All eigenvalues by magnetization sector (2^N <= 4096)");
    spectrum->add_option("--n", sp_n, "Number of sites (even, 4..12)")
        ->capture_default_str();
    spectrum->add_option("--j1", sp_j1, "Intra-dimer coupling")->capture_default_str();
    spectrum->add_option("--j2", sp_j2, "Inter-dimer coupling")->capture_default_str();
    spectrum->add_option("--format", sp_format, "Output format: csv, json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    spectrum->add_option("--out", sp_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(sweep)) {
            config.method = parse_method(sweep_method);
            config.format = sweep_format == "json" ? spindimer::OutputFormat::Json
                                                   : spindimer::OutputFormat::Csv;
            return run_sweep_command(config);
        }
        if (app.got_subcommand(threshold)) {
            return run_threshold_command(th_n, th_j1, th_which, th_bracket, th_method,
                                         th_seed);
        }
        if (app.got_subcommand(verify_cmd)) {
            return run_verify_command(verify_n, verify_seed);
        }
        if (app.got_subcommand(spectrum)) {
            return run_spectrum_command(sp_n, sp_j1, sp_j2, sp_format, sp_out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
