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

#include "nfwpt/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "nfwpt/errors.hpp"

namespace nfwpt {

std::string ArchSelection::name() const {
    switch (kind) {
    case ArchKind::Digital:
        return "digital";
    case ArchKind::Ris:
        return "ris";
    case ArchKind::Dma:
        return "dma";
    }
    return "unknown";
}

std::string ArchSelection::bits_label() const {
    return bits ? std::to_string(*bits) : std::string("inf");
}

std::string to_string(Experiment experiment) {
    switch (experiment) {
    case Experiment::Fig2Sweep:
        return "fig2";
    case Experiment::Fig4Sweep:
        return "fig4";
    case Experiment::Custom:
        return "custom";
    }
    return "unknown";
}

ScenarioConfig default_scenario(Experiment experiment) {
    ScenarioConfig c;
    c.experiment = experiment;
    if (experiment == Experiment::Fig2Sweep) {
        c.frequencies_ghz = {3.0, 10.0, 30.0};
        c.d_prime_m = {2.0, 8.0, 15.0};
        c.er_distance_m = 8.0;
        c.radii_m = {0.005, 0.01, 0.018, 0.02, 0.04, 0.08, 0.16, 0.32};
        c.sphere_samples = 10000;
        return c;
    }
    for (int k = 4; k <= 60; ++k)
        c.frequencies_ghz.push_back(0.5 * k);
    c.edge_length_m = 0.5;
    c.er_distance_m = 3.0;
    c.density_radius_m = 0.15;
    c.architectures = {{ArchKind::Ris, std::nullopt}, {ArchKind::Ris, 2u}, {ArchKind::Dma, std::nullopt}};
    c.sphere_samples = 1000;
    return c;
}

namespace {

[[noreturn]] void constraint(const std::string &key, const std::string &what) {
    throw ConfigError(key + ": " + what, 0, key);
}

void require_positive(const std::string &key, double v) {
    if (!(v > 0.0) || !std::isfinite(v))
        constraint(key, "must be positive");
}

void require_positive_list(const std::string &key, const std::vector<double> &values) {
    if (values.empty())
        constraint(key, "must not be empty");
    for (double v : values)
        if (!(v > 0.0) || !std::isfinite(v))
            constraint(key, "values must be positive (got " + std::to_string(v) + ")");
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

struct Entry {
    std::string value;
    std::size_t line;
};

[[noreturn]] void bad_value(const std::string &key, const Entry &e, const std::string &what) {
    throw ConfigError("line " + std::to_string(e.line) + ": " + key + ": " + what, e.line, key);
}

double parse_double(const std::string &key, const Entry &e, std::string_view text) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
        bad_value(key, e, "expected a number, got '" + t + "'");
    return v;
}

std::vector<double> parse_list(const std::string &key, const Entry &e) {
    std::vector<double> out;
    std::string item;
    std::istringstream is(e.value);
    while (std::getline(is, item, ','))
        out.push_back(parse_double(key, e, item));
    if (out.empty())
        bad_value(key, e, "expected a comma-separated list of numbers");
    return out;
}

std::size_t parse_count(const std::string &key, const Entry &e) {
    const double v = parse_double(key, e, e.value);
    if (v < 0.0 || std::floor(v) != v)
        bad_value(key, e, "expected a non-negative integer");
    return static_cast<std::size_t>(v);
}

bool parse_bool(const std::string &key, const Entry &e) {
    const std::string t = trim(e.value);
    if (t == "true" || t == "yes" || t == "1")
        return true;
    if (t == "false" || t == "no" || t == "0")
        return false;
    bad_value(key, e, "expected true or false");
}

std::vector<ArchSelection> parse_architectures(const std::string &key, const Entry &e) {
    std::vector<ArchSelection> out;
    std::string item;
    std::istringstream is(e.value);
    while (std::getline(is, item, ',')) {
        const std::string t = trim(item);
        const auto colon = t.find(':');
        const std::string kind = trim(t.substr(0, colon));
        ArchSelection sel;
        if (kind == "digital")
            sel.kind = ArchKind::Digital;
        else if (kind == "ris")
            sel.kind = ArchKind::Ris;
        else if (kind == "dma")
            sel.kind = ArchKind::Dma;
        else
            bad_value(key, e, "unknown architecture '" + kind + "'");
        if (colon != std::string::npos) {
            const std::string bits = trim(t.substr(colon + 1));
            if (bits != "inf") {
                const double b = parse_double(key, e, bits);
                if (b < 1.0 || b > 16.0 || std::floor(b) != b)
                    bad_value(key, e, "phase bits must be an integer in 1..16 or inf");
                sel.bits = static_cast<unsigned>(b);
            }
        }
        if (sel.kind == ArchKind::Digital && sel.bits)
            bad_value(key, e, "the fully digital array has no phase resolution");
        out.push_back(sel);
    }
    if (out.empty())
        bad_value(key, e, "expected at least one architecture");
    return out;
}

using Setter = std::function<void(ScenarioConfig &, const std::string &, const Entry &)>;

const std::vector<std::pair<std::string, Setter>> &setters() {
    static const std::vector<std::pair<std::string, Setter>> table = {
        {"experiment", [](ScenarioConfig &, const std::string &, const Entry &) {}},
        {"frequencies", [](auto &c, auto &k, auto &e) { c.frequencies_ghz = parse_list(k, e); }},
        {"d_prime", [](auto &c, auto &k, auto &e) { c.d_prime_m = parse_list(k, e); }},
        {"edge_length", [](auto &c, auto &k, auto &e) { c.edge_length_m = parse_double(k, e, e.value); }},
        {"er_distance", [](auto &c, auto &k, auto &e) { c.er_distance_m = parse_double(k, e, e.value); }},
        {"target_power", [](auto &c, auto &k, auto &e) { c.target_power_w = parse_double(k, e, e.value); }},
        {"transmit_power", [](auto &c, auto &k, auto &e) { c.transmit_power_w = parse_double(k, e, e.value); }},
        {"radii", [](auto &c, auto &k, auto &e) { c.radii_m = parse_list(k, e); }},
        {"density_radius", [](auto &c, auto &k, auto &e) { c.density_radius_m = parse_double(k, e, e.value); }},
        {"array_rows", [](auto &c, auto &k, auto &e) { c.array_rows = parse_count(k, e); }},
        {"array_cols", [](auto &c, auto &k, auto &e) { c.array_cols = parse_count(k, e); }},
        {"element_gain_db", [](auto &c, auto &k, auto &e) { c.element_gain_db = parse_double(k, e, e.value); }},
        {"feeder_gain_db", [](auto &c, auto &k, auto &e) { c.feeder_gain_db = parse_double(k, e, e.value); }},
        {"ris_element_gain_db", [](auto &c, auto &k, auto &e) { c.ris_element_gain_db = parse_double(k, e, e.value); }},
        {"dma_element_gain_db", [](auto &c, auto &k, auto &e) { c.dma_element_gain_db = parse_double(k, e, e.value); }},
        {"dma_effective_index", [](auto &c, auto &k, auto &e) { c.dma_effective_index = parse_double(k, e, e.value); }},
        {"rx_gain_db", [](auto &c, auto &k, auto &e) { c.rx_gain_db = parse_double(k, e, e.value); }},
        {"architectures", [](auto &c, auto &k, auto &e) { c.architectures = parse_architectures(k, e); }},
        {"hpa_efficiency",
         [](auto &c, auto &k, auto &e) {
             const double v = parse_double(k, e, e.value);
             c.digital_profile.hpa_efficiency = v;
             c.ris_profile.hpa_efficiency = v;
             c.dma_profile.hpa_efficiency = v;
         }},
        {"digital_board_w", [](auto &c, auto &k, auto &e) { c.digital_profile.control_board = parse_double(k, e, e.value); }},
        {"digital_element_w", [](auto &c, auto &k, auto &e) { c.digital_profile.per_element_drive = parse_double(k, e, e.value); }},
        {"ris_board_w", [](auto &c, auto &k, auto &e) { c.ris_profile.control_board = parse_double(k, e, e.value); }},
        {"ris_element_w", [](auto &c, auto &k, auto &e) { c.ris_profile.per_element_drive = parse_double(k, e, e.value); }},
        {"dma_board_w", [](auto &c, auto &k, auto &e) { c.dma_profile.control_board = parse_double(k, e, e.value); }},
        {"dma_element_w", [](auto &c, auto &k, auto &e) { c.dma_profile.per_element_drive = parse_double(k, e, e.value); }},
        {"dma_zero_static_variant", [](auto &c, auto &k, auto &e) { c.dma_zero_static_variant = parse_bool(k, e); }},
        {"pso_swarm_size", [](auto &c, auto &k, auto &e) { c.pso.swarm_size = parse_count(k, e); }},
        {"pso_iterations", [](auto &c, auto &k, auto &e) { c.pso.iterations = parse_count(k, e); }},
        {"pso_inertia", [](auto &c, auto &k, auto &e) { c.pso.inertia = parse_double(k, e, e.value); }},
        {"pso_cognitive", [](auto &c, auto &k, auto &e) { c.pso.cognitive = parse_double(k, e, e.value); }},
        {"pso_social", [](auto &c, auto &k, auto &e) { c.pso.social = parse_double(k, e, e.value); }},
        {"seed", [](auto &c, auto &k, auto &e) { c.pso.seed = parse_count(k, e); }},
        {"sphere_samples", [](auto &c, auto &k, auto &e) { c.sphere_samples = parse_count(k, e); }},
        {"exposure",
         [](auto &c, auto &k, auto &e) {
             const std::string t = trim(e.value);
             if (t == "general_public")
                 c.population = emf::Population::GeneralPublic;
             else if (t == "occupational")
                 c.population = emf::Population::Occupational;
             else
                 bad_value(k, e, "expected general_public or occupational");
         }},
        {"output", [](auto &c, auto &, auto &e) { c.output = trim(e.value); }},
        {"format",
         [](auto &c, auto &k, auto &e) {
             try {
                 c.format = parse_output_format(trim(e.value));
             } catch (const std::invalid_argument &ex) {
                 bad_value(k, e, ex.what());
             }
         }},
    };
    return table;
}

} // namespace

const std::vector<std::string> &scenario_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto &[name, _] : setters())
            k.push_back(name);
        return k;
    }();
    return keys;
}

void ScenarioConfig::validate() const {
    require_positive_list("frequencies", frequencies_ghz);
    for (double f : frequencies_ghz)
        if (f < emf::kMinFrequencyGhz || f > emf::kMaxFrequencyGhz)
            constraint("frequencies", "values must lie in 2..300 GHz for exposure checks");
    require_positive("er_distance", er_distance_m);
    require_positive("target_power", target_power_w);
    require_positive("transmit_power", transmit_power_w);
    if (!(rx_gain_db > -100.0 && rx_gain_db < 100.0))
        constraint("rx_gain_db", "must be a finite gain");
    if (experiment == Experiment::Fig2Sweep) {
        require_positive_list("d_prime", d_prime_m);
        require_positive_list("radii", radii_m);
        if (array_rows < 1)
            constraint("array_rows", "must be at least 1");
        if (array_cols < 1)
            constraint("array_cols", "must be at least 1");
        if (!(element_gain_db >= 0.0))
            constraint("element_gain_db", "cosine-power elements need a gain of at least 0 dB");
    } else {
        require_positive("edge_length", edge_length_m);
        require_positive("density_radius", density_radius_m);
        if (architectures.empty())
            constraint("architectures", "must list at least one architecture");
        const bool digital = std::any_of(architectures.begin(), architectures.end(),
                                         [](const ArchSelection &a) { return a.kind == ArchKind::Digital; });
        if (digital && experiment != Experiment::Custom)
            constraint("architectures", "digital is only available in custom experiments");
        if (digital && (array_rows < 1 || array_cols < 1))
            constraint("array_rows", "must be at least 1");
        for (const auto &[key, gain] : {std::pair{"feeder_gain_db", feeder_gain_db},
                                        std::pair{"ris_element_gain_db", ris_element_gain_db},
                                        std::pair{"dma_element_gain_db", dma_element_gain_db},
                                        std::pair{"element_gain_db", element_gain_db}})
            if (!(gain >= 0.0))
                constraint(key, "cosine-power elements need a gain of at least 0 dB");
        require_positive("dma_effective_index", dma_effective_index);
    }
    for (const auto &[key, profile] : {std::pair{"ris", ris_profile}, std::pair{"dma", dma_profile},
                                       std::pair{"digital", digital_profile}}) {
        if (!(profile.hpa_efficiency > 0.0 && profile.hpa_efficiency <= 1.0))
            constraint("hpa_efficiency", "must lie in (0, 1]");
        if (!(profile.control_board >= 0.0))
            constraint(std::string(key) + "_board_w", "must be non-negative");
        if (!(profile.per_element_drive >= 0.0))
            constraint(std::string(key) + "_element_w", "must be non-negative");
    }
    if (pso.swarm_size < 2)
        constraint("pso_swarm_size", "must be at least 2");
    if (pso.iterations < 1)
        constraint("pso_iterations", "must be at least 1");
    if (!(pso.inertia >= 0.0))
        constraint("pso_inertia", "must be non-negative");
    if (!(pso.cognitive >= 0.0))
        constraint("pso_cognitive", "must be non-negative");
    if (!(pso.social >= 0.0))
        constraint("pso_social", "must be non-negative");
    if (sphere_samples < 100)
        constraint("sphere_samples", "must be at least 100");
}

ScenarioConfig parse_scenario(std::string_view text) {
    std::map<std::string, Entry> entries;
    std::istringstream is{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'",
                              line_no);
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": missing key before '='",
                              line_no);
        const auto &keys = scenario_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'",
                              line_no, key);
        if (value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": " + key + ": missing value",
                              line_no, key);
        if (!entries.emplace(key, Entry{value, line_no}).second)
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'",
                              line_no, key);
    }

    const auto exp = entries.find("experiment");
    if (exp == entries.end())
        throw ConfigError("missing experiment", 0, "experiment");
    Experiment experiment;
    if (exp->second.value == "fig2")
        experiment = Experiment::Fig2Sweep;
    else if (exp->second.value == "fig4")
        experiment = Experiment::Fig4Sweep;
    else if (exp->second.value == "custom")
        experiment = Experiment::Custom;
    else
        bad_value("experiment", exp->second, "expected fig2, fig4 or custom");

    ScenarioConfig config = default_scenario(experiment);
    for (const auto &[key, setter] : setters())
        if (const auto it = entries.find(key); it != entries.end())
            setter(config, key, it->second);
    config.validate();
    return config;
}

} // namespace nfwpt
