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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfwpt/emf.hpp"
#include "nfwpt/optimize.hpp"
#include "nfwpt/powermodel.hpp"
#include "nfwpt/results.hpp"

namespace nfwpt {

enum class Experiment { Fig2Sweep, Fig4Sweep, Custom };

enum class ArchKind { Digital, Ris, Dma };

/// One transmitter to evaluate in a power sweep; `bits` empty means continuous phases.
struct ArchSelection {
    ArchKind kind = ArchKind::Ris;
    std::optional<unsigned> bits;

    std::string name() const;        // "digital", "ris", "dma"
    std::string bits_label() const;  // "inf" or the bit count
    bool operator==(const ArchSelection &) const = default;
};

/// Full experiment description. Units: frequencies GHz, lengths m, powers W, gains dB.
struct ScenarioConfig {
    Experiment experiment = Experiment::Fig2Sweep;
    std::vector<double> frequencies_ghz;
    std::vector<double> d_prime_m;       // density sweep: near/far thresholds
    double edge_length_m = 0.5;          // power sweep: transmitter edge length
    double er_distance_m = 8.0;
    double target_power_w = 1.0;         // RF power delivered to the receiver
    double transmit_power_w = 1.0;       // density sweep radiated power
    std::vector<double> radii_m;         // density sweep sphere radii
    double density_radius_m = 0.15;      // power sweep sphere radius
    std::size_t array_rows = 10;
    std::size_t array_cols = 10;
    double element_gain_db = 13.0;       // fully digital elements
    double feeder_gain_db = 3.0;
    double ris_element_gain_db = 7.0;
    double dma_element_gain_db = 13.0;
    double dma_effective_index = 1.0;
    double rx_gain_db = 0.0;
    std::vector<ArchSelection> architectures;
    ConsumptionProfile digital_profile = digital_default_profile();
    ConsumptionProfile ris_profile = ris_default_profile();
    ConsumptionProfile dma_profile = dma_default_profile();
    bool dma_zero_static_variant = true;
    PsoParams pso;
    std::size_t sphere_samples = 10000;
    emf::Population population = emf::Population::GeneralPublic;
    std::string output;
    OutputFormat format = OutputFormat::Csv;

    /// Throws ConfigError naming the offending key.
    void validate() const;
};

ScenarioConfig default_scenario(Experiment experiment);

/// Parses the `key = value` scenario format (comments start with '#', lists are
/// comma-separated). Unset keys take the defaults of the chosen experiment.
/// Throws ConfigError with a line number for syntax errors and unknown keys.
ScenarioConfig parse_scenario(std::string_view text);

std::string to_string(Experiment experiment);

/// Keys accepted by parse_scenario, in documentation order.
const std::vector<std::string> &scenario_keys();

} // namespace nfwpt
