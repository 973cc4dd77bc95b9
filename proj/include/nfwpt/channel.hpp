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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "nfwpt/geometry.hpp"
#include "nfwpt/kernels.hpp"

namespace nfwpt {

/// Per-element complex channel towards one point (field-amplitude ratios).
struct ChannelVector {
    std::vector<cd> coefficients;
    double frequency = 0.0; // Hz

    std::size_t size() const { return coefficients.size(); }
    double norm() const;
};

/// Waveguide-fed metasurface: M guides along the first in-plane axis, each carrying
/// N_e elements. Element (m, l) is stored at index m * elements_per_waveguide + l.
struct DmaConfig {
    std::size_t waveguide_count = 0;
    std::size_t elements_per_waveguide = 0;
    RadiatorSet elements;
    std::vector<double> guide_positions; // distance of each element from its guide feed, m
    double guide_wavenumber = 0.0;       // rad/m

    std::size_t element_count() const { return waveguide_count * elements_per_waveguide; }
};

/// Line-of-sight coefficient between one transmit element and a receive point.
cd los_coefficient(const Vec3 &tx_position, const Vec3 &tx_normal,
                   const ElementPattern &tx_pattern, const Vec3 &rx_position, double rx_gain,
                   double wavelength);

/// Exact spherical-wave channel from every array element to `point`.
ChannelVector array_to_point_channel(const ArrayGeometry &array, const Vec3 &point,
                                     double rx_gain, double wavelength,
                                     Exec exec = Exec::Parallel);

/// The two hops of a reflecting surface: feeder -> element n (with the element pattern
/// at incidence) and element n -> point.
struct RisHops {
    std::vector<cd> incident;  // f_n
    std::vector<cd> reflected; // g_n
};

RisHops ris_hops(const Element &feeder, const ArrayGeometry &ris, const Vec3 &point,
                 double rx_gain, double wavelength, Exec exec = Exec::Parallel);

/// sum_n f_n exp(j theta_n) g_n.
cd cascaded_ris_channel(std::span<const cd> incident, std::span<const cd> reflected,
                        std::span<const double> phases);
cd cascaded_ris_channel(const Element &feeder, const ArrayGeometry &ris,
                        std::span<const double> phases, const Vec3 &point, double rx_gain,
                        double wavelength);

/// Lorentzian-constrained element weight (j + exp(j phi)) / 2.
cd lorentzian_weight(double phase);

/// Per-element DMA coefficients exp(-j beta rho) h_{m,l} / sqrt(M N_e), so that the
/// effective channel is sum_i c_i * lorentzian_weight(phi_i).
std::vector<cd> dma_element_coefficients(const DmaConfig &dma, const Vec3 &point, double rx_gain,
                                         double wavelength, Exec exec = Exec::Parallel);

cd dma_effective_channel(const DmaConfig &dma, std::span<const double> lorentzian_phases,
                         const Vec3 &point, double rx_gain, double wavelength);

/// Sum of coefficient_i * weight_i with compensated accumulation.
cd weighted_sum(std::span<const cd> coefficients, std::span<const cd> weights);

} // namespace nfwpt
