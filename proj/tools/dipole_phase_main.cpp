// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0

// dipole-phase: geometric-phase laboratory for a moving electric dipole
// under a distant semi-infinite magnetic sheet.
//
// Exit codes: 0 success, 1 configuration error, 2 numerical non-convergence
// (partial results flagged in the output), 3 invariant violation (verify).

#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dipole/errors.hpp"
#include "dipole/scenario.hpp"
#include "dipole/verify.hpp"

namespace {

int run_verify(const dipole::ScenarioConfig& cfg) {
    const std::vector<dipole::CheckResult> checks = dipole::run_verify_battery();
    std::size_t passed = 0;
    double total_seconds = 0.0;
    std::printf("%-34s %-6s %8s  %s\n", "check", "result", "time", "detail");
    for (const auto& c : checks) {
        std::printf("%-34s %-6s %7.2fs  %s\n", c.name.c_str(), c.pass ? "PASS" : "FAIL",
                    c.seconds, c.detail.c_str());
        passed += c.pass ? 1 : 0;
        total_seconds += c.seconds;
    }
    std::printf("%zu/%zu checks passed in %.1f s\n", passed, checks.size(), total_seconds);

    if (!cfg.output.empty()) {
        dipole::RunOutput out;
        out.command = "verify";
        out.meta["checks"] = checks.size();
        out.meta["passed"] = passed;
        out.meta["seconds"] = total_seconds;
        for (const auto& c : checks) {
            out.results.push_back({c.name, c.pass ? 1.0 : 0.0, 0.0, "pass", "invariant"});
            if (!c.pass) out.errors.push_back(c.name + ": " + c.detail);
        }
        dipole::ScenarioConfig file_cfg = cfg;
        file_cfg.format = "json";
        std::string err;
        if (!dipole::write_output(out, file_cfg, err)) {
            std::cerr << "error: " << err << "\n";
            return 1;
        }
    }
    return passed == checks.size() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric phase of a moving dipole under a magnetic field at a distance"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "flat key = value configuration file");

    // Every config key is also a command-line flag; flags override the file.
    std::map<std::string, std::string> flag_values;
    for (const dipole::ConfigKey& key : dipole::config_keys()) {
        app.add_option_function<std::string>(
            "--" + key.name,
            [&flag_values, name = key.name](const std::string& v) { flag_values[name] = v; },
            key.help);
    }

    const std::vector<std::string> commands = {"momentum", "phase",        "interfere", "hmw",
                                               "dual",     "gauge-compare", "verify"};
    for (const std::string& c : commands) app.add_subcommand(c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion") {
            return app.exit(e);
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const std::string command = app.get_subcommands().front()->get_name();

    dipole::ScenarioConfig cfg;
    std::vector<std::string> errors;
    if (!config_path.empty() && !dipole::load_config_file(config_path, cfg, errors)) {
        for (const auto& e : errors) std::cerr << "error: " << e << "\n";
        return 1;
    }
    for (const dipole::ConfigKey& key : dipole::config_keys()) {
        const auto it = flag_values.find(key.name);
        if (it == flag_values.end()) continue;
        if (!key.set(cfg, it->second)) {
            std::cerr << "error: invalid value '" << it->second << "' for --" << key.name
                      << "\n";
            return 1;
        }
    }

    const std::vector<std::string> invalid = dipole::validate(cfg, command);
    if (!invalid.empty()) {
        for (const auto& e : invalid) std::cerr << "error: " << e << "\n";
        return 1;
    }

    try {
        if (command == "verify") return run_verify(cfg);

        const dipole::RunOutput out = dipole::run_command(command, cfg);
        std::string err;
        if (!dipole::write_output(out, cfg, err)) {
            std::cerr << "error: " << err << "\n";
            return 1;
        }
        return out.exit_code;
    } catch (const dipole::OverlapViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const dipole::NonFiniteSample& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
