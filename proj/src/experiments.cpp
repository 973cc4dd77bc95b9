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

#include "nfwpt/experiments.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "nfwpt/emf.hpp"
#include "nfwpt/errors.hpp"
#include "nfwpt/field.hpp"
#include "nfwpt/optimize.hpp"

namespace nfwpt {

namespace {

constexpr double kHzPerGhz = 1e9;

Vec3 receiver_point(double distance) { return {0.0, 0.0, distance}; }

struct Candidate {
    ArchSelection selection;
    OptimizedArchitecture solved;
    double density = 0.0; // sphere max at the solved transmit power
};

EtArchitecture build_selection(const ScenarioConfig &c, const ArchSelection &sel,
                               double wavelength) {
    switch (sel.kind) {
    case ArchKind::Ris:
        return build_ris_et(c.edge_length_m, wavelength, db_to_linear(c.feeder_gain_db),
                            db_to_linear(c.ris_element_gain_db), sel.bits);
    case ArchKind::Dma:
        return build_dma_et(c.edge_length_m, wavelength, db_to_linear(c.dma_element_gain_db),
                            c.dma_effective_index, sel.bits);
    case ArchKind::Digital:
        break;
    }
    return build_fully_digital(make_planar_array(
        c.array_rows, c.array_cols, c.edge_length_m, {}, {0.0, 0.0, 1.0},
        ElementPattern::cosine_power_db(c.element_gain_db)));
}

const ConsumptionProfile &profile_for(const ScenarioConfig &c, ArchKind kind) {
    switch (kind) {
    case ArchKind::Ris:
        return c.ris_profile;
    case ArchKind::Dma:
        return c.dma_profile;
    case ArchKind::Digital:
        break;
    }
    return c.digital_profile;
}

// Sphere-max density for every candidate of one kind, sharing the propagation work.
void fill_densities(std::vector<Candidate> &candidates, ArchKind kind, const Vec3 &center,
                    double radius, std::size_t samples, double wavelength) {
    std::vector<Candidate *> group;
    for (auto &cand : candidates)
        if (cand.selection.kind == kind)
            group.push_back(&cand);
    if (group.empty())
        return;
    require_clear_sphere(radiator_positions(group.front()->solved.arch), center, radius);
    RadiatorSet radiators;
    std::vector<std::vector<cd>> amplitudes;
    for (const Candidate *cand : group) {
        Excitation ex = excitation(cand->solved.arch, cand->solved.transmit_power, wavelength);
        if (amplitudes.empty())
            radiators = std::move(ex.radiators);
        amplitudes.push_back(std::move(ex.amplitudes));
    }
    const auto stats =
        sphere_density_stats(radiators, amplitudes, center, radius, samples, wavelength);
    for (std::size_t i = 0; i < group.size(); ++i)
        group[i]->density = stats[i].max;
}

void append_power_row(ResultTable &table, double f_ghz, const std::string &arch,
                      const std::string &bits, std::size_t n_elements, double p_tx,
                      double p_consumed, double density, double limit) {
    table.rows.push_back({f_ghz, arch, bits, static_cast<std::int64_t>(n_elements), p_tx,
                          p_consumed, density, limit, emf::within_limit(density, limit)});
}

} // namespace

const std::vector<std::string> &fig2_columns() {
    static const std::vector<std::string> cols = {
        "f_ghz",     "d_prime_m", "r_m", "s_max_norm_per_m2", "s_mean_norm_per_m2",
        "s_at_1w_w_per_m2", "local_limit_w_per_m2", "compliant"};
    return cols;
}

const std::vector<std::string> &fig4_columns() {
    static const std::vector<std::string> cols = {
        "f_ghz",  "arch", "bits", "n_elements", "p_tx_w", "p_consumed_w", "s_15cm_w_per_m2",
        "local_limit_w_per_m2", "compliant"};
    return cols;
}

ResultTable run_fig2(const ScenarioConfig &config) {
    if (config.experiment != Experiment::Fig2Sweep)
        throw std::invalid_argument("run_fig2 needs a fig2 scenario");
    config.validate();
    ResultTable table{fig2_columns(), {}};
    const Vec3 er = receiver_point(config.er_distance_m);
    const double rx_gain = db_to_linear(config.rx_gain_db);
    const auto pattern = ElementPattern::cosine_power_db(config.element_gain_db);

    for (double f_ghz : config.frequencies_ghz) {
        const double lambda = wavelength_for(f_ghz * kHzPerGhz);
        const double limit = emf::local_power_density_limit(f_ghz, config.population);
        for (double d_prime : config.d_prime_m) {
            const double edge = edge_length_for_threshold(d_prime, lambda);
            EtArchitecture arch = build_fully_digital(make_planar_array(
                config.array_rows, config.array_cols, edge, {}, {0.0, 0.0, 1.0}, pattern));
            auto solved = optimize_architecture(std::move(arch), config.target_power_w, er,
                                                lambda, config.pso, rx_gain);
            const double delivered =
                delivered_power(solved.channel, config.transmit_power_w);
            for (double r : config.radii_m) {
                const SphereStats raw =
                    sphere_density_stats(solved.arch, config.transmit_power_w, er, r,
                                         config.sphere_samples, lambda);
                const double s_max = raw.max / delivered;
                const double s_mean = raw.mean / delivered;
                const double s_1w = s_max * 1.0;
                table.rows.push_back({f_ghz, d_prime, r, s_max, s_mean, s_1w, limit,
                                      emf::within_limit(s_1w, limit)});
            }
        }
    }
    return table;
}

ResultTable run_fig4(const ScenarioConfig &config) {
    if (config.experiment == Experiment::Fig2Sweep)
        throw std::invalid_argument("run_fig4 needs a fig4 or custom scenario");
    config.validate();
    ResultTable table{fig4_columns(), {}};
    const Vec3 er = receiver_point(config.er_distance_m);
    const double rx_gain = db_to_linear(config.rx_gain_db);
    ConsumptionProfile zero_static = config.dma_profile;
    zero_static.control_board = 0.0;
    zero_static.per_element_drive = 0.0;

    for (double f_ghz : config.frequencies_ghz) {
        const double lambda = wavelength_for(f_ghz * kHzPerGhz);
        const double limit = emf::local_power_density_limit(f_ghz, config.population);

        std::vector<Candidate> candidates;
        candidates.reserve(config.architectures.size());
        for (const auto &sel : config.architectures) {
            auto solved = optimize_architecture(build_selection(config, sel, lambda),
                                                config.target_power_w, er, lambda,
                                                config.pso, rx_gain);
            candidates.push_back({sel, std::move(solved), 0.0});
        }
        for (ArchKind kind : {ArchKind::Digital, ArchKind::Ris, ArchKind::Dma})
            fill_densities(candidates, kind, er, config.density_radius_m,
                           config.sphere_samples, lambda);

        for (const auto &cand : candidates) {
            const auto &sel = cand.selection;
            const std::size_t n = cand.solved.arch.element_count();
            const double p_tx = cand.solved.transmit_power;
            append_power_row(table, f_ghz, sel.name(), sel.bits_label(), n, p_tx,
                             et_consumed_power(p_tx, n, profile_for(config, sel.kind)),
                             cand.density, limit);
            if (sel.kind == ArchKind::Dma && config.dma_zero_static_variant)
                append_power_row(table, f_ghz, "dma_zero_static", sel.bits_label(), n, p_tx,
                                 et_consumed_power(p_tx, n, zero_static), cand.density, limit);
        }
    }
    return table;
}

ResultTable run_experiment(const ScenarioConfig &config) {
    return config.experiment == Experiment::Fig2Sweep ? run_fig2(config) : run_fig4(config);
}

std::string describe() {
    using nlohmann::ordered_json;
    auto profile_json = [](const ConsumptionProfile &p) {
        return ordered_json{{"hpa_efficiency", p.hpa_efficiency},
                            {"control_board_w", p.control_board},
                            {"per_element_drive_w", p.per_element_drive}};
    };
    auto scenario_json = [&](const ScenarioConfig &c) {
        ordered_json arch = ordered_json::array();
        for (const auto &a : c.architectures)
            arch.push_back(a.name() + ":" + a.bits_label());
        return ordered_json{
            {"frequencies_ghz", c.frequencies_ghz},
            {"d_prime_m", c.d_prime_m},
            {"edge_length_m", c.edge_length_m},
            {"er_distance_m", c.er_distance_m},
            {"target_power_w", c.target_power_w},
            {"transmit_power_w", c.transmit_power_w},
            {"radii_m", c.radii_m},
            {"density_radius_m", c.density_radius_m},
            {"array_rows", c.array_rows},
            {"array_cols", c.array_cols},
            {"element_gain_db", c.element_gain_db},
            {"feeder_gain_db", c.feeder_gain_db},
            {"ris_element_gain_db", c.ris_element_gain_db},
            {"dma_element_gain_db", c.dma_element_gain_db},
            {"dma_effective_index", c.dma_effective_index},
            {"rx_gain_db", c.rx_gain_db},
            {"architectures", arch},
            {"dma_zero_static_variant", c.dma_zero_static_variant},
            {"sphere_samples", c.sphere_samples},
            {"profiles",
             {{"digital", profile_json(c.digital_profile)},
              {"ris", profile_json(c.ris_profile)},
              {"dma", profile_json(c.dma_profile)}}},
            {"pso",
             {{"swarm_size", c.pso.swarm_size},
              {"iterations", c.pso.iterations},
              {"inertia", c.pso.inertia},
              {"cognitive", c.pso.cognitive},
              {"social", c.pso.social},
              {"seed", c.pso.seed}}}};
    };

    ordered_json limits = ordered_json::array();
    for (double f : {2.0, 6.0, 30.0, 300.0})
        limits.push_back({{"f_ghz", f},
                          {"local_power_density_w_per_m2", emf::local_power_density_limit(f)},
                          {"whole_body_power_density_w_per_m2",
                           emf::whole_body_power_density_limit(f)},
                          {"local_energy_density_1min_kj_per_m2",
                           emf::local_energy_density_limit(f, 1.0)}});

    ordered_json doc{
        {"constants",
         {{"speed_of_light_m_per_s", kSpeedOfLight},
          {"pi", kPi},
          {"density_formula", "|sum_n x_n sqrt(G_n) exp(-j k d_n) / d_n|^2 / (4 pi)"},
          {"los_coefficient", "sqrt(Gt Gr) lambda / (4 pi d) exp(-j 2 pi d / lambda)"},
          {"element_pattern", "G0 cos^(2q) theta, 2 (q + 1) = G0, zero behind the element"},
          {"sphere_lattice", "Fibonacci, z = 1 - (2i + 1)/n, azimuth = i pi (3 - sqrt 5)"}}},
        {"ris",
         {{"feeder_position", "(0, 0, 4L/sqrt(pi)), facing the surface"},
          {"element_pitch", "lambda / 5"},
          {"elements_per_side", "floor(5L/lambda) + 1"}}},
        {"dma",
         {{"waveguide_pitch", "lambda / 2"},
          {"waveguides", "floor(2L/lambda) + 1"},
          {"element_pitch", "lambda / 5"},
          {"elements_per_waveguide", "floor(5L/lambda) + 1"},
          {"element_response", "(j + exp(j phi)) / 2"}}},
        {"exposure",
         {{"general_public", limits},
          {"occupational_factor", emf::kOccupationalFactor},
          {"local_window_min", emf::kLocalWindowMinutes},
          {"whole_body_window_min", emf::kWholeBodyWindowMinutes}}},
        {"defaults",
         {{"fig2", scenario_json(default_scenario(Experiment::Fig2Sweep))},
          {"fig4", scenario_json(default_scenario(Experiment::Fig4Sweep))}}},
        {"scenario_keys", scenario_keys()},
        {"output", {{"fig2_columns", fig2_columns()}, {"fig4_columns", fig4_columns()},
                    {"significant_digits", 9}}}};
    return doc.dump(2) + "\n";
}

} // namespace nfwpt
