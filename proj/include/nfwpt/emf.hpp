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

// ICNIRP exposure limits for 2-300 GHz and compliance checks on density time series.

#include <span>
#include <string>
#include <vector>

namespace nfwpt::emf {

inline constexpr double kMinFrequencyGhz = 2.0;
inline constexpr double kMaxFrequencyGhz = 300.0;
inline constexpr double kLocalWindowMinutes = 6.0;
inline constexpr double kWholeBodyWindowMinutes = 30.0;
/// Occupational limits are this many times the general-public ones.
inline constexpr double kOccupationalFactor = 5.0;

enum class Zone { WholeBody, Local };
enum class Quantity { PowerDensity, EnergyDensity };
enum class Population { GeneralPublic, Occupational };

struct EmfLimit {
    Zone zone = Zone::Local;
    Quantity quantity = Quantity::PowerDensity;
    double frequency_ghz = 0.0;
    double averaging_minutes = 0.0; // exposure interval t for energy density
    double value = 0.0;             // W/m^2 or kJ/m^2
};

double local_power_density_limit(double f_ghz, Population pop = Population::GeneralPublic);
double whole_body_power_density_limit(double f_ghz,
                                      Population pop = Population::GeneralPublic);
/// Incident energy density limit (kJ/m^2) for an exposure interval of 0 < t < 6 minutes.
double local_energy_density_limit(double f_ghz, double t_minutes,
                                  Population pop = Population::GeneralPublic);

/// Rows of the limit table at one frequency; energy rows for each requested t.
std::vector<EmfLimit> limit_table(double f_ghz, std::span<const double> energy_minutes,
                                  Population pop = Population::GeneralPublic);

std::string to_string(Zone zone);
std::string to_string(Quantity quantity);

struct Sample {
    double time = 0.0;    // s
    double density = 0.0; // W/m^2
};

/// Time-weighted mean over (T - window, T] for every sample time T at least one window
/// after the first sample. Samples are held constant until the next sample time.
/// Throws std::invalid_argument for unsorted times or a non-positive window.
std::vector<Sample> sliding_window_average(std::span<const Sample> series, double window_s);

struct ConstraintVerdict {
    std::string name;
    EmfLimit limit;
    double measured = 0.0;  // same unit as limit.value
    double margin = 0.0;    // (limit - measured) / limit
    double window_s = 0.0;  // interval that produced `measured`
    double window_start = 0.0;
    bool truncated = false; // record shorter than the averaging window
    bool satisfied = true;
};

struct ExposureReport {
    std::vector<ConstraintVerdict> verdicts;
    bool compliant = true;
    std::string energy_window_rule = "windows anchored at sample times, zero-order hold";
};

/// Evaluates every applicable limit for the zone. The power-density rows use sliding
/// averages; the local energy row checks every sample-anchored interval shorter than 6 min.
ExposureReport check_compliance(std::span<const Sample> series, double f_ghz, Zone zone,
                                Population pop = Population::GeneralPublic);

/// True when `measured <= limit` up to floating-point round-off.
bool within_limit(double measured, double limit);

} // namespace nfwpt::emf
