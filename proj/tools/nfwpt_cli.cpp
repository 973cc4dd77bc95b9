// SPDX-License-Identifier: Apache-2.0
//
// nfwpt: near-field wireless power transfer simulation library
// Copyright (C) 2026 The nfwpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nfwpt/emf.hpp"
#include "nfwpt/errors.hpp"
#include "nfwpt/experiments.hpp"
#include "nfwpt/results.hpp"
#include "nfwpt/scenario.hpp"

namespace {

struct OutputOptions {
    std::string out;
    std::string format;
    std::optional<std::uint64_t> seed;
};

void add_output_options(CLI::App *cmd, OutputOptions &opts) {
    cmd->add_option("--out,-o", opts.out, "Output file (stdout when omitted)");
    cmd->add_option("--format,-f", opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", opts.seed, "PSO seed");
}

void apply(const OutputOptions &opts, nfwpt::ScenarioConfig &config) {
    if (!opts.out.empty())
        config.output = opts.out;
    if (!opts.format.empty())
        config.format = nfwpt::parse_output_format(opts.format);
    if (opts.seed)
        config.pso.seed = *opts.seed;
}

void write(const nfwpt::ResultTable &table, const nfwpt::ScenarioConfig &config) {
    if (config.output.empty() || config.output == "-")
        std::cout << nfwpt::render(table, config.format);
    else
        nfwpt::emit_results(table, config.output, config.format);
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open scenario file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nfwpt::ResultTable limits_table(double f_ghz, const std::vector<double> &minutes,
                                nfwpt::emf::Population pop) {
    nfwpt::ResultTable table{{"f_ghz", "zone", "quantity", "t_min", "limit", "unit"}, {}};
    for (const auto &row : nfwpt::emf::limit_table(f_ghz, minutes, pop)) {
        const bool energy = row.quantity == nfwpt::emf::Quantity::EnergyDensity;
        table.rows.push_back({row.frequency_ghz, nfwpt::emf::to_string(row.zone),
                              nfwpt::emf::to_string(row.quantity), row.averaging_minutes,
                              row.value, std::string(energy ? "kJ/m^2" : "W/m^2")});
    }
    return table;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Near-field wireless power transfer simulator"};
    app.require_subcommand(0, 1);
    bool describe = false;
    app.add_flag("--describe", describe, "Print constants and defaults as JSON and exit");

    OutputOptions fig2_opts, fig4_opts, run_opts, limits_opts;
    auto *fig2 = app.add_subcommand("fig2", "Sphere density sweep around a focused array");
    add_output_options(fig2, fig2_opts);
    auto *fig4 = app.add_subcommand("fig4", "Consumed power of RIS and DMA transmitters");
    add_output_options(fig4, fig4_opts);

    auto *run = app.add_subcommand("run", "Run a scenario file");
    std::string scenario_path;
    run->add_option("--scenario,-s", scenario_path, "Scenario file")->required();
    add_output_options(run, run_opts);

    auto *limits = app.add_subcommand("limits", "Exposure limits at one frequency");
    double freq = 0.0;
    std::vector<double> minutes;
    bool occupational = false;
    limits->add_option("--freq", freq, "Frequency in GHz")->required();
    limits->add_option("--time", minutes, "Exposure intervals in minutes for energy rows");
    limits->add_flag("--occupational", occupational, "Occupational instead of general public");
    limits->add_option("--out,-o", limits_opts.out, "Output file (stdout when omitted)");
    limits->add_option("--format,-f", limits_opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (describe) {
            std::cout << nfwpt::describe();
            return 0;
        }
        nfwpt::ScenarioConfig config;
        if (*fig2) {
            config = nfwpt::default_scenario(nfwpt::Experiment::Fig2Sweep);
            apply(fig2_opts, config);
        } else if (*fig4) {
            config = nfwpt::default_scenario(nfwpt::Experiment::Fig4Sweep);
            apply(fig4_opts, config);
        } else if (*run) {
            config = nfwpt::parse_scenario(read_file(scenario_path));
            apply(run_opts, config);
        } else if (*limits) {
            const auto pop = occupational ? nfwpt::emf::Population::Occupational
                                          : nfwpt::emf::Population::GeneralPublic;
            config.output = limits_opts.out;
            if (!limits_opts.format.empty())
                config.format = nfwpt::parse_output_format(limits_opts.format);
            write(limits_table(freq, minutes, pop), config);
            return 0;
        } else {
            std::cerr << app.help();
            return 2;
        }
        write(nfwpt::run_experiment(config), config);
        return 0;
    } catch (const nfwpt::ConfigError &e) {
        std::cerr << "nfwpt: scenario error: " << e.what() << '\n';
    } catch (const std::exception &e) {
        std::cerr << "nfwpt: error: " << e.what() << '\n';
    }
    return 1;
}
