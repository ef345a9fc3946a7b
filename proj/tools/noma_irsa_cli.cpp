/*
   Copyright 2026 The noma-irsa Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nomairsa/sweep.hpp"

namespace {

std::string trim(const std::string& text)
{
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

// Line-oriented key=value config: keys are the long option names without
// dashes. Values for options already present on the command line are
// dropped, so explicit flags override the file.
std::vector<std::string> args_from_config(const std::string& path,
                                          const std::vector<std::string>& cli_args)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read config file '" + path + "'");

    auto given_on_cli = [&cli_args](const std::string& option) {
        return std::any_of(cli_args.begin(), cli_args.end(), [&option](const std::string& arg) {
            return arg == option || arg.rfind(option + "=", 0) == 0;
        });
    };

    std::vector<std::string> extra;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string content = trim(line);
        if (content.empty() || content[0] == '#')
            continue;
        const auto equals = content.find('=');
        if (equals == std::string::npos)
            throw std::runtime_error("config file '" + path + "' line " +
                                     std::to_string(line_number) + ": expected key=value");
        const std::string key = trim(content.substr(0, equals));
        const std::string value = trim(content.substr(equals + 1));
        if (key.empty())
            throw std::runtime_error("config file '" + path + "' line " +
                                     std::to_string(line_number) + ": empty key");
        const std::string option = "--" + key;
        if (!given_on_cli(option))
            extra.push_back(option + "=" + value);
    }
    return extra;
}

// Pulls "--config <path>" / "--config=<path>" out of the argument list and
// appends the file-derived options (they stay in the subcommand's scope).
std::vector<std::string> expand_args(int argc, char** argv)
{
    std::vector<std::string> args;
    std::string config_path;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config") {
            if (i + 1 >= argc)
                throw std::runtime_error("--config needs a file path");
            config_path = argv[++i];
        } else if (arg.rfind("--config=", 0) == 0) {
            config_path = arg.substr(9);
        } else {
            args.push_back(arg);
        }
    }
    if (!config_path.empty())
        for (const std::string& extra : args_from_config(config_path, args))
            args.push_back(extra);
    return args;
}

void note_config_flag(CLI::App& cmd)
{
    // Handled in expand_args before parsing; declared so help lists it.
    static std::string ignored;
    cmd.add_option("--config", ignored, "Read options from a line-oriented key=value file")
        ->group("Configuration");
}

void add_common_options(CLI::App& cmd, nomairsa::SweepSpec& spec)
{
    cmd.add_option("--slots", spec.slots, "Slots per frame (with --loads)");
    cmd.add_option("--levels", spec.levels, "Number of power levels L");
    cmd.add_option("--gamma-db", spec.gamma_db, "SINR threshold in dB");
    cmd.add_option("--dist", spec.dist_text,
                   "Degree distribution as comma-separated r:prob pairs");
    cmd.add_option("--loads", spec.loads, "Channel-load grid (comma separated)")
        ->delimiter(',');
    cmd.add_option("--slot-grid", spec.slot_grid, "Slot-count grid (comma separated)")
        ->delimiter(',');
    cmd.add_option("--load", spec.fixed_load, "Channel load used with --slot-grid");
    cmd.add_option("--seed", spec.seed, "Master seed");
    cmd.add_option("--max-frames", spec.max_frames, "Frame budget per grid point");
    cmd.add_option("--min-losses", spec.min_losses,
                   "Stop a grid point after this many loss events");
    cmd.add_option("--out", spec.out_path, "Output CSV path")->required();
    cmd.add_option("--threads", spec.threads, "Worker threads (0 = all cores)");
    note_config_flag(cmd);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"NOMA-IRSA frame simulator and error-floor analytics", "noma_irsa"};
    app.require_subcommand(1);

    nomairsa::SweepSpec sweep_spec;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Simulate a parameter grid and emit packet-loss-rate rows");
    add_common_options(*sweep, sweep_spec);
    sweep->add_flag("--s1-baseline,!--no-s1-baseline", sweep_spec.s1_baseline,
                    "Fill the plr_s1only column (default on)");
    sweep->add_flag("--census", sweep_spec.with_census,
                    "Also write stopping-set counts to <out>.census.csv");

    nomairsa::SweepSpec census_spec;
    census_spec.max_frames = 100'000;
    CLI::App* census = app.add_subcommand(
        "census", "Count stopping-set occurrences against their expected rates");
    add_common_options(*census, census_spec);

    nomairsa::FitSpec fit_spec;
    CLI::App* fit = app.add_subcommand(
        "fit", "Calibrate the triangle stopping set's effective bin count");
    fit->add_option("--slot-grid", fit_spec.slot_grid, "Slot-count grid (>= 3 points)")
        ->delimiter(',')
        ->required();
    fit->add_option("--load", fit_spec.load, "Common channel load");
    fit->add_option("--dist", fit_spec.dist_text, "Degree distribution (needs lambda_2 > 0)");
    fit->add_option("--gamma-db", fit_spec.gamma_db, "SINR threshold in dB");
    fit->add_option("--seed", fit_spec.seed, "Master seed");
    fit->add_option("--max-frames", fit_spec.max_frames, "Frame budget per grid point");
    fit->add_option("--min-losses", fit_spec.min_losses,
                    "Attributed losses to collect per grid point");
    fit->add_option("--out", fit_spec.out_path, "Optional per-point CSV path");
    fit->add_option("--threads", fit_spec.threads, "Worker threads (0 = all cores)");
    note_config_flag(*fit);

    std::vector<std::string> args;
    try {
        args = expand_args(argc, argv);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    }
    std::reverse(args.begin(), args.end()); // CLI11 vector parse order
    try {
        app.parse(args);
    } catch (const CLI::ParseError& error) {
        return app.exit(error);
    }

    try {
        if (sweep->parsed()) {
            nomairsa::run_sweep(sweep_spec, std::cerr);
        } else if (census->parsed()) {
            nomairsa::run_census(census_spec, std::cerr);
        } else if (fit->parsed()) {
            const nomairsa::FitReport report = nomairsa::run_fit(fit_spec, std::cerr);
            std::printf("a0 = %.6f\na1 = %.6f\n", report.fit.a0, report.fit.a1);
            std::printf("%8s %8s %12s %12s %12s %12s\n", "n", "m", "plr", "g2", "fit",
                        "residual");
            for (std::size_t i = 0; i < report.points.size(); ++i) {
                const auto& point = report.points[i];
                const auto& fit_point = report.fit.points[i];
                std::printf("%8d %8d %12.5g %12.6g %12.6g %12.3g\n", point.n, point.users,
                            point.plr_corrected, fit_point.g2, fit_point.fitted,
                            fit_point.g2 - fit_point.fitted);
            }
        }
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    }
    return 0;
}
