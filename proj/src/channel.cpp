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

#include "nfwpt/channel.hpp"

#include <stdexcept>

namespace nfwpt {

double ChannelVector::norm() const {
    CompensatedSum s;
    for (const auto &c : coefficients)
        s.add(std::norm(c));
    return std::sqrt(s.value());
}

cd los_coefficient(const Vec3 &tx_position, const Vec3 &tx_normal,
                   const ElementPattern &tx_pattern, const Vec3 &rx_position, double rx_gain,
                   double wavelength) {
    if (!(wavelength > 0.0))
        throw std::invalid_argument("wavelength must be positive");
    return los_term(tx_position, normalized(tx_normal), tx_pattern, rx_position, rx_gain,
                    wavelength);
}

ChannelVector array_to_point_channel(const ArrayGeometry &array, const Vec3 &point,
                                     double rx_gain, double wavelength, Exec exec) {
    return {radiator_to_point(radiators_from(array), point, rx_gain, wavelength, exec),
            kSpeedOfLight / wavelength};
}

RisHops ris_hops(const Element &feeder, const ArrayGeometry &ris, const Vec3 &point,
                 double rx_gain, double wavelength, Exec exec) {
    const RadiatorSet set = radiators_from(ris);
    return {source_to_radiators(feeder, set, wavelength, exec),
            radiator_to_point(set, point, rx_gain, wavelength, exec)};
}

cd weighted_sum(std::span<const cd> coefficients, std::span<const cd> weights) {
    if (coefficients.size() != weights.size())
        throw std::invalid_argument("coefficient and weight lengths differ");
    ComplexCompensatedSum acc;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        acc.add(coefficients[i] * weights[i]);
    return acc.value();
}

cd cascaded_ris_channel(std::span<const cd> incident, std::span<const cd> reflected,
                        std::span<const double> phases) {
    if (incident.size() != reflected.size() || incident.size() != phases.size())
        throw std::invalid_argument("RIS channel and phase lengths differ");
    ComplexCompensatedSum acc;
    for (std::size_t n = 0; n < phases.size(); ++n)
        acc.add(incident[n] * std::polar(1.0, phases[n]) * reflected[n]);
    return acc.value();
}

cd cascaded_ris_channel(const Element &feeder, const ArrayGeometry &ris,
                        std::span<const double> phases, const Vec3 &point, double rx_gain,
                        double wavelength) {
    if (phases.size() != ris.size())
        throw std::invalid_argument("phase count does not match RIS element count");
    const RisHops hops = ris_hops(feeder, ris, point, rx_gain, wavelength);
    return cascaded_ris_channel(hops.incident, hops.reflected, phases);
}

cd lorentzian_weight(double phase) { return 0.5 * (cd{0.0, 1.0} + std::polar(1.0, phase)); }

std::vector<cd> dma_element_coefficients(const DmaConfig &dma, const Vec3 &point, double rx_gain,
                                         double wavelength, Exec exec) {
    if (dma.elements.size() != dma.element_count() ||
        dma.guide_positions.size() != dma.element_count())
        throw std::invalid_argument("inconsistent DMA configuration");
    std::vector<cd> c = radiator_to_point(dma.elements, point, rx_gain, wavelength, exec);
    const double feed_scale = 1.0 / std::sqrt(static_cast<double>(dma.element_count()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double guide_cycles = dma.guide_wavenumber * dma.guide_positions[i] / kTwoPi;
        const double frac = guide_cycles - std::floor(guide_cycles);
        c[i] *= feed_scale * std::polar(1.0, -kTwoPi * frac);
    }
    return c;
}

cd dma_effective_channel(const DmaConfig &dma, std::span<const double> lorentzian_phases,
                         const Vec3 &point, double rx_gain, double wavelength) {
    if (lorentzian_phases.size() != dma.element_count())
        throw std::invalid_argument("phase count does not match DMA element count");
    const std::vector<cd> c = dma_element_coefficients(dma, point, rx_gain, wavelength);
    std::vector<cd> w(c.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = lorentzian_weight(lorentzian_phases[i]);
    return weighted_sum(c, w);
}

} // namespace nfwpt
