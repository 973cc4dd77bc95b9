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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nfwpt/channel.hpp"
#include "nfwpt/geometry.hpp"
#include "nfwpt/kernels.hpp"

namespace nfwpt {

/// Active array with one RF chain per element; `precoder` has unit norm.
struct FullyDigital {
    ArrayGeometry array;
    std::vector<cd> precoder;
};

/// Single feeder illuminating a passive reflecting surface. `phase_bits` empty means
/// continuous phase control.
struct RisBased {
    Element feeder;
    ArrayGeometry ris;
    std::optional<unsigned> phase_bits;
    std::vector<double> phases;
};

/// One RF chain split equally over the waveguides of a metasurface antenna.
struct DmaBased {
    DmaConfig dma;
    std::optional<unsigned> phase_bits;
    std::vector<double> lorentzian_phases;
};

struct EtArchitecture {
    std::variant<FullyDigital, RisBased, DmaBased> variant;
    double rf_chain_power = 0.0; // W at the HPA output, set once a target is solved for

    std::size_t element_count() const;
    std::string label() const;
};

/// Amplitudes (sqrt(W)) driving each radiator for a given transmit power.
struct Excitation {
    RadiatorSet radiators;
    std::vector<cd> amplitudes;
};

/// Fully digital array with a uniform (unsteered) unit-norm precoder.
EtArchitecture build_fully_digital(ArrayGeometry array);

/// (floor(5L/lambda)+1)^2 reflecting elements at pitch lambda/5 in the z = 0 plane,
/// fed from 4L/sqrt(pi) on the boresight axis. Gains are linear.
EtArchitecture build_ris_et(double edge_length, double wavelength, double feeder_gain,
                            double ris_element_gain,
                            std::optional<unsigned> phase_bits = std::nullopt);

/// floor(2L/lambda)+1 waveguides at lambda/2 pitch, floor(5L/lambda)+1 elements each at
/// lambda/5 pitch. Guide wavenumber is effective_index * 2 pi / lambda.
EtArchitecture build_dma_et(double edge_length, double wavelength, double element_gain,
                            double effective_index = 1.0,
                            std::optional<unsigned> phase_bits = std::nullopt);

/// conj(h) / ||h||. Throws UnreachableTargetError for a zero channel.
std::vector<cd> mrt_precoder(const ChannelVector &h);

/// theta_n = -(arg f_n + arg g_n) wrapped to [0, 2 pi).
std::vector<double> conjugate_ris_phases(std::span<const cd> incident,
                                         std::span<const cd> reflected);

double wrap_phase(double phase);

/// Nearest point of {2 pi k / 2^bits}; ties go to the smaller grid value.
double quantize_phase(double phase, unsigned bits);
std::vector<double> quantize_phases(std::span<const double> phases, unsigned bits);

double delivered_power(cd effective_channel, double transmit_power);
double required_transmit_power(cd effective_channel, double target_power);

/// Scalar channel from the RF chain to an isotropic-equivalent receiver at `point`.
cd effective_channel(const EtArchitecture &arch, const Vec3 &point, double rx_gain,
                     double wavelength);

Excitation excitation(const EtArchitecture &arch, double transmit_power, double wavelength);

/// Positions of every physical radiator, feeders included.
std::vector<Vec3> radiator_positions(const EtArchitecture &arch);

} // namespace nfwpt
