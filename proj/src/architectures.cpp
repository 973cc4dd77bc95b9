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

#include "nfwpt/architectures.hpp"

#include <cmath>
#include <stdexcept>

#include "nfwpt/errors.hpp"

namespace nfwpt {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

// floor(x) + 1 that tolerates x landing a hair below an integer.
std::size_t grid_count(double x) {
    return static_cast<std::size_t>(std::floor(x + 1e-9)) + 1;
}

void require_positive(double edge_length, double wavelength) {
    if (!(edge_length > 0.0))
        throw std::invalid_argument("edge length must be positive");
    if (!(wavelength > 0.0))
        throw std::invalid_argument("wavelength must be positive");
}

} // namespace

std::size_t EtArchitecture::element_count() const {
    return std::visit(overloaded{[](const FullyDigital &a) { return a.array.size(); },
                                 [](const RisBased &a) { return a.ris.size(); },
                                 [](const DmaBased &a) { return a.dma.element_count(); }},
                      variant);
}

std::string EtArchitecture::label() const {
    return std::visit(overloaded{[](const FullyDigital &) { return std::string("digital"); },
                                 [](const RisBased &) { return std::string("ris"); },
                                 [](const DmaBased &) { return std::string("dma"); }},
                      variant);
}

EtArchitecture build_fully_digital(ArrayGeometry array) {
    if (array.size() == 0)
        throw std::invalid_argument("fully digital array needs elements");
    const double a = 1.0 / std::sqrt(static_cast<double>(array.size()));
    std::vector<cd> w(array.size(), cd{a, 0.0});
    return {FullyDigital{std::move(array), std::move(w)}};
}

EtArchitecture build_ris_et(double edge_length, double wavelength, double feeder_gain,
                            double ris_element_gain, std::optional<unsigned> phase_bits) {
    require_positive(edge_length, wavelength);
    const std::size_t n = grid_count(5.0 * edge_length / wavelength);
    const double pitch = wavelength / 5.0;
    RisBased ris;
    ris.ris = make_planar_array(n, n, static_cast<double>(n - 1) * pitch, {}, {0.0, 0.0, 1.0},
                                ElementPattern::cosine_power(ris_element_gain));
    ris.feeder = Element{{0.0, 0.0, 4.0 * edge_length / std::sqrt(kPi)},
                         {0.0, 0.0, -1.0},
                         ElementPattern::cosine_power(feeder_gain)};
    ris.phase_bits = phase_bits;
    ris.phases.assign(ris.ris.size(), 0.0);
    return {std::move(ris)};
}

EtArchitecture build_dma_et(double edge_length, double wavelength, double element_gain,
                            double effective_index, std::optional<unsigned> phase_bits) {
    require_positive(edge_length, wavelength);
    if (!(effective_index > 0.0))
        throw std::invalid_argument("waveguide effective index must be positive");
    DmaConfig cfg;
    cfg.waveguide_count = grid_count(2.0 * edge_length / wavelength);
    cfg.elements_per_waveguide = grid_count(5.0 * edge_length / wavelength);
    cfg.guide_wavenumber = effective_index * kTwoPi / wavelength;
    cfg.elements.normal = {0.0, 0.0, 1.0};
    cfg.elements.pattern = ElementPattern::cosine_power(element_gain);

    const double guide_pitch = wavelength / 2.0;
    const double element_pitch = wavelength / 5.0;
    const double m0 = 0.5 * static_cast<double>(cfg.waveguide_count - 1);
    const double l0 = 0.5 * static_cast<double>(cfg.elements_per_waveguide - 1);
    for (std::size_t m = 0; m < cfg.waveguide_count; ++m) {
        for (std::size_t l = 0; l < cfg.elements_per_waveguide; ++l) {
            cfg.elements.push_back({(static_cast<double>(l) - l0) * element_pitch,
                                    (static_cast<double>(m) - m0) * guide_pitch, 0.0});
            cfg.guide_positions.push_back(static_cast<double>(l) * element_pitch);
        }
    }
    DmaBased dma{std::move(cfg), phase_bits, {}};
    dma.lorentzian_phases.assign(dma.dma.element_count(), 0.0);
    return {std::move(dma)};
}

std::vector<cd> mrt_precoder(const ChannelVector &h) {
    const double n = h.norm();
    if (!(n > 0.0))
        throw UnreachableTargetError("MRT precoder undefined for a zero channel");
    std::vector<cd> w(h.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = std::conj(h.coefficients[i]) / n;
    return w;
}

double wrap_phase(double phase) {
    double p = std::fmod(phase, kTwoPi);
    if (p < 0.0)
        p += kTwoPi;
    if (p >= kTwoPi)
        p = 0.0;
    return p;
}

std::vector<double> conjugate_ris_phases(std::span<const cd> incident,
                                         std::span<const cd> reflected) {
    if (incident.size() != reflected.size())
        throw std::invalid_argument("incident and reflected channel lengths differ");
    std::vector<double> out(incident.size());
    for (std::size_t n = 0; n < out.size(); ++n)
        out[n] = wrap_phase(-(std::arg(incident[n]) + std::arg(reflected[n])));
    return out;
}

double quantize_phase(double phase, unsigned bits) {
    if (bits == 0 || bits > 30)
        throw std::invalid_argument("phase resolution must be between 1 and 30 bits");
    const double levels = std::ldexp(1.0, static_cast<int>(bits));
    const double step = kTwoPi / levels;
    const double t = wrap_phase(phase) / step;
    double k = std::ceil(t - 0.5);
    if (k >= levels)
        k -= levels;
    return k * step;
}

std::vector<double> quantize_phases(std::span<const double> phases, unsigned bits) {
    std::vector<double> out(phases.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = quantize_phase(phases[i], bits);
    return out;
}

double delivered_power(cd effective_channel, double transmit_power) {
    if (transmit_power < 0.0)
        throw std::invalid_argument("transmit power must be non-negative");
    return transmit_power * std::norm(effective_channel);
}

double required_transmit_power(cd effective_channel, double target_power) {
    if (target_power < 0.0)
        throw std::invalid_argument("target power must be non-negative");
    if (target_power == 0.0)
        return 0.0;
    const double gain = std::norm(effective_channel);
    if (!(gain > 0.0))
        throw UnreachableTargetError("effective channel is zero; target power unreachable");
    return target_power / gain;
}

cd effective_channel(const EtArchitecture &arch, const Vec3 &point, double rx_gain,
                     double wavelength) {
    return std::visit(
        overloaded{
            [&](const FullyDigital &a) {
                const auto h = array_to_point_channel(a.array, point, rx_gain, wavelength);
                return weighted_sum(h.coefficients, a.precoder);
            },
            [&](const RisBased &a) {
                return cascaded_ris_channel(a.feeder, a.ris, a.phases, point, rx_gain,
                                            wavelength);
            },
            [&](const DmaBased &a) {
                return dma_effective_channel(a.dma, a.lorentzian_phases, point, rx_gain,
                                             wavelength);
            }},
        arch.variant);
}

Excitation excitation(const EtArchitecture &arch, double transmit_power, double wavelength) {
    if (transmit_power < 0.0)
        throw std::invalid_argument("transmit power must be non-negative");
    const double amp = std::sqrt(transmit_power);
    return std::visit(
        overloaded{
            [&](const FullyDigital &a) {
                Excitation ex{radiators_from(a.array), {}};
                ex.amplitudes.reserve(a.precoder.size());
                for (const auto &w : a.precoder)
                    ex.amplitudes.push_back(amp * w);
                return ex;
            },
            [&](const RisBased &a) {
                Excitation ex{radiators_from(a.ris), {}};
                const auto f = source_to_radiators(a.feeder, ex.radiators, wavelength);
                ex.amplitudes.resize(f.size());
                for (std::size_t n = 0; n < f.size(); ++n)
                    ex.amplitudes[n] = amp * f[n] * std::polar(1.0, a.phases[n]);
                return ex;
            },
            [&](const DmaBased &a) {
                Excitation ex{a.dma.elements, {}};
                const double scale = amp / std::sqrt(static_cast<double>(a.dma.element_count()));
                ex.amplitudes.resize(a.dma.element_count());
                for (std::size_t i = 0; i < ex.amplitudes.size(); ++i) {
                    const double cycles =
                        a.dma.guide_wavenumber * a.dma.guide_positions[i] / kTwoPi;
                    const double frac = cycles - std::floor(cycles);
                    ex.amplitudes[i] = scale * lorentzian_weight(a.lorentzian_phases[i]) *
                                       std::polar(1.0, -kTwoPi * frac);
                }
                return ex;
            }},
        arch.variant);
}

std::vector<Vec3> radiator_positions(const EtArchitecture &arch) {
    return std::visit(overloaded{[](const FullyDigital &a) {
                                     std::vector<Vec3> p;
                                     for (const auto &e : a.array.elements)
                                         p.push_back(e.position);
                                     return p;
                                 },
                                 [](const RisBased &a) {
                                     std::vector<Vec3> p{a.feeder.position};
                                     for (const auto &e : a.ris.elements)
                                         p.push_back(e.position);
                                     return p;
                                 },
                                 [](const DmaBased &a) {
                                     std::vector<Vec3> p;
                                     for (std::size_t i = 0; i < a.dma.elements.size(); ++i)
                                         p.push_back(a.dma.elements.position(i));
                                     return p;
                                 }},
                      arch.variant);
}

} // namespace nfwpt
