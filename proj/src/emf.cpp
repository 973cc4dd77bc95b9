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

#include "nfwpt/emf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "nfwpt/errors.hpp"

namespace nfwpt::emf {

namespace {

void require_frequency(double f_ghz) {
    if (!(f_ghz >= kMinFrequencyGhz && f_ghz <= kMaxFrequencyGhz))
        throw FrequencyRangeError("frequency " + std::to_string(f_ghz) +
                                  " GHz is outside the 2-300 GHz limit table");
}

double population_factor(Population pop) {
    return pop == Population::Occupational ? kOccupationalFactor : 1.0;
}

void require_sorted(std::span<const Sample> series) {
    for (std::size_t i = 1; i < series.size(); ++i)
        if (!(series[i].time >= series[i - 1].time))
            throw std::invalid_argument("exposure series must be sorted by time");
}

// Running integral of the zero-order-hold signal, in J/m^2.
class HoldIntegral {
  public:
    explicit HoldIntegral(std::span<const Sample> series) : series_(series) {
        prefix_.resize(series.size(), 0.0);
        for (std::size_t i = 1; i < series.size(); ++i)
            prefix_[i] = prefix_[i - 1] +
                         series[i - 1].density * (series[i].time - series[i - 1].time);
    }

    double at_sample(std::size_t i) const { return prefix_[i]; }

    // Integral from the first sample up to time t (t within the record).
    double at(double t) const {
        auto it = std::upper_bound(series_.begin(), series_.end(), t,
                                   [](double v, const Sample &s) { return v < s.time; });
        const auto i = static_cast<std::size_t>(std::distance(series_.begin(), it));
        if (i == 0)
            return 0.0;
        return prefix_[i - 1] + series_[i - 1].density * (t - series_[i - 1].time);
    }

  private:
    std::span<const Sample> series_;
    std::vector<double> prefix_;
};

ConstraintVerdict finish(ConstraintVerdict v) {
    v.margin = (v.limit.value - v.measured) / v.limit.value;
    v.satisfied = within_limit(v.measured, v.limit.value);
    return v;
}

ConstraintVerdict power_density_verdict(std::span<const Sample> series, double f_ghz, Zone zone,
                                        Population pop) {
    ConstraintVerdict v;
    v.name = zone == Zone::Local ? "local power density" : "whole-body power density";
    v.limit.zone = zone;
    v.limit.quantity = Quantity::PowerDensity;
    v.limit.frequency_ghz = f_ghz;
    v.limit.averaging_minutes = zone == Zone::Local ? kLocalWindowMinutes : kWholeBodyWindowMinutes;
    v.limit.value = zone == Zone::Local ? local_power_density_limit(f_ghz, pop)
                                        : whole_body_power_density_limit(f_ghz, pop);
    const double window = 60.0 * v.limit.averaging_minutes;
    v.window_s = window;
    if (series.empty())
        return finish(v);

    const double duration = series.back().time - series.front().time;
    if (duration >= window) {
        const auto avg = sliding_window_average(series, window);
        for (const auto &a : avg) {
            if (a.density > v.measured) {
                v.measured = a.density;
                v.window_start = a.time - window;
            }
        }
    } else {
        // Short record: the mean over what was observed stands in for the window mean.
        v.truncated = true;
        v.window_start = series.front().time;
        v.window_s = duration;
        v.measured = duration > 0.0 ? HoldIntegral(series).at_sample(series.size() - 1) / duration
                                    : series.front().density;
    }
    return finish(v);
}

ConstraintVerdict energy_density_verdict(std::span<const Sample> series, double f_ghz,
                                         Population pop) {
    ConstraintVerdict worst;
    worst.name = "local energy density";
    worst.limit = {Zone::Local, Quantity::EnergyDensity, f_ghz, 0.0, 0.0};
    worst.margin = std::numeric_limits<double>::infinity();
    const double max_span = 60.0 * kLocalWindowMinutes;
    const HoldIntegral integral(series);
    bool any = false;
    for (std::size_t i = 0; i < series.size(); ++i) {
        for (std::size_t j = i + 1; j < series.size(); ++j) {
            const double span = series[j].time - series[i].time;
            if (span >= max_span)
                break;
            if (!(span > 0.0))
                continue;
            const double energy_kj = (integral.at_sample(j) - integral.at_sample(i)) / 1000.0;
            const double t_min = span / 60.0;
            const double limit = local_energy_density_limit(f_ghz, t_min, pop);
            const double margin = (limit - energy_kj) / limit;
            if (margin < worst.margin) {
                any = true;
                worst.margin = margin;
                worst.measured = energy_kj;
                worst.limit.averaging_minutes = t_min;
                worst.limit.value = limit;
                worst.window_s = span;
                worst.window_start = series[i].time;
            }
        }
    }
    if (!any) {
        worst.limit.averaging_minutes = kLocalWindowMinutes;
        worst.limit.value = local_power_density_limit(f_ghz, pop) * 0.36; // 6-minute value, kJ/m^2
        worst.measured = 0.0;
    }
    return finish(worst);
}

} // namespace

bool within_limit(double measured, double limit) { return measured <= limit * (1.0 + 1e-12); }

double local_power_density_limit(double f_ghz, Population pop) {
    require_frequency(f_ghz);
    const double base = f_ghz <= 6.0 ? 40.0 : 55.0 / std::pow(f_ghz, 0.177);
    return base * population_factor(pop);
}

double whole_body_power_density_limit(double f_ghz, Population pop) {
    require_frequency(f_ghz);
    return 10.0 * population_factor(pop);
}

double local_energy_density_limit(double f_ghz, double t_minutes, Population pop) {
    require_frequency(f_ghz);
    if (!(t_minutes > 0.0) || !(t_minutes < kLocalWindowMinutes))
        throw std::invalid_argument("energy density limit applies to 0 < t < 6 minutes");
    const double shape = 0.05 + 0.95 * std::sqrt(t_minutes / 6.0);
    const double base = f_ghz <= 6.0 ? 14.4 * shape : 19.8 * shape / std::pow(f_ghz, 0.177);
    return base * population_factor(pop);
}

std::vector<EmfLimit> limit_table(double f_ghz, std::span<const double> energy_minutes,
                                  Population pop) {
    std::vector<EmfLimit> rows;
    rows.push_back({Zone::WholeBody, Quantity::PowerDensity, f_ghz, kWholeBodyWindowMinutes,
                    whole_body_power_density_limit(f_ghz, pop)});
    rows.push_back({Zone::Local, Quantity::PowerDensity, f_ghz, kLocalWindowMinutes,
                    local_power_density_limit(f_ghz, pop)});
    for (double t : energy_minutes)
        rows.push_back({Zone::Local, Quantity::EnergyDensity, f_ghz, t,
                        local_energy_density_limit(f_ghz, t, pop)});
    return rows;
}

std::string to_string(Zone zone) { return zone == Zone::Local ? "local" : "whole_body"; }

std::string to_string(Quantity quantity) {
    return quantity == Quantity::PowerDensity ? "power_density" : "energy_density";
}

std::vector<Sample> sliding_window_average(std::span<const Sample> series, double window_s) {
    if (!(window_s > 0.0))
        throw std::invalid_argument("averaging window must be positive");
    require_sorted(series);
    std::vector<Sample> out;
    if (series.empty())
        return out;
    const HoldIntegral integral(series);
    const double t0 = series.front().time;
    for (std::size_t k = 0; k < series.size(); ++k) {
        const double t = series[k].time;
        if (t - t0 < window_s)
            continue;
        const double energy = integral.at_sample(k) - integral.at(t - window_s);
        out.push_back({t, energy / window_s});
    }
    return out;
}

ExposureReport check_compliance(std::span<const Sample> series, double f_ghz, Zone zone,
                                Population pop) {
    require_frequency(f_ghz);
    require_sorted(series);
    ExposureReport report;
    report.verdicts.push_back(power_density_verdict(series, f_ghz, zone, pop));
    if (zone == Zone::Local)
        report.verdicts.push_back(energy_density_verdict(series, f_ghz, pop));
    report.compliant = std::all_of(report.verdicts.begin(), report.verdicts.end(),
                                   [](const ConstraintVerdict &v) { return v.satisfied; });
    return report;
}

} // namespace nfwpt::emf
