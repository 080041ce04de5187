// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dipole/vec3.hpp"

namespace dipole {

/// Resolved run configuration. Field units are the CLI-facing ones
/// (Gauss, cm, Volt); conversion to internal Gaussian-CGS happens in the
/// runners.
struct ScenarioConfig {
    double b0 = 100.0;        // Gauss (field strength of the slab)
    double y0 = 0.01;         // cm (slab thickness; defaults give n_B = 1 Gauss*cm)
    bool thin_sheet = false;
    double a = 1.0;           // cm (path standoff above the slab)
    double z = 0.0;           // cm (evaluation point for `momentum`)
    double z_i = -20.0;       // cm
    double z_f = 20.0;        // cm
    std::string dipole = "hydrogen-2s2p";  // or "custom"
    double d_x = 0.0, d_y = 0.0, d_z = 0.0;  // esu*cm, for dipole=custom
    double rel_tol = 1e-6;
    double abs_tol = 1e-12;
    long max_evals = 10'000'000;
    std::string gauge = "step-gauge";  // or "quadratic-shifted"
    double lambda = 0.0;               // Gauss/cm
    std::string sweep_axis;            // "", "z" (momentum) or "n_B" (interfere)
    double sweep_min = 0.0;
    double sweep_max = 26.0;
    long sweep_points = 101;
    std::string format = "json";  // or "csv"
    std::string output;           // empty = stdout
    double n_e_volt = 1.0;        // dual: linear electric flux density [Volt]
    double mu_nuclear = -1.913042730;  // dual: moment in nuclear magnetons
    double cutoff_z = 0.0;        // 0 = auto (1e4 * a)
    double loop_margin = 1.0;     // cm (hmw rectangle clearance)
    bool path_method = true;      // `phase`: also run the path-integral form
    double fd_step = 0.0;         // 0 = auto (standoff / 200)
};

/// One config key: name, help text, and a setter that parses a string value.
struct ConfigKey {
    std::string name;
    std::string help;
    bool (*set)(ScenarioConfig&, const std::string&);
};
const std::vector<ConfigKey>& config_keys();

/// Parses a flat `key = value` file (# comments). Unknown keys and bad
/// values are reported as "<path>:<line>: message" strings; on any error the
/// config is left untouched and false is returned.
bool load_config_file(const std::string& path, ScenarioConfig& cfg,
                      std::vector<std::string>& errors);

/// Cross-field validation; returns human-readable messages, empty if valid.
std::vector<std::string> validate(const ScenarioConfig& cfg, const std::string& command);

struct ResultEntry {
    std::string name;
    double value = 0.0;
    double error_estimate = 0.0;
    std::string unit;
    std::string method;
};

struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct RunOutput {
    std::string command;
    nlohmann::ordered_json inputs;
    std::vector<ResultEntry> results;
    std::vector<std::string> errors;  // non-fatal flags (e.g. non-convergence)
    nlohmann::ordered_json meta;
    std::optional<SweepTable> sweep;
    int exit_code = 0;
};

nlohmann::ordered_json to_json(const RunOutput& out);
std::string to_csv(const SweepTable& table);

/// Executes one subcommand (momentum, phase, interfere, hmw, dual,
/// gauge-compare). `verify` is handled by the battery in verify.hpp.
RunOutput run_command(const std::string& command, const ScenarioConfig& cfg);

/// Serializes per `cfg.format` and writes to `cfg.output` (or stdout).
/// Returns false (with a message in `error`) on I/O failure.
bool write_output(const RunOutput& out, const ScenarioConfig& cfg, std::string& error);

}  // namespace dipole
