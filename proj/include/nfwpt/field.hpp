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
#include <span>
#include <string>
#include <vector>

#include "nfwpt/architectures.hpp"

namespace nfwpt {

inline constexpr std::size_t kDefaultSphereSamples = 10000;
inline constexpr std::size_t kMinSphereSamples = 100;

struct DensitySample {
    Vec3 point;
    double density = 0.0; // W/m^2
};

struct DensityMap {
    std::vector<DensitySample> samples;
    std::string architecture;
    double transmit_power = 0.0;
};

struct SphereStats {
    double max = 0.0;  // W/m^2 (or 1/m^2 once normalized)
    double mean = 0.0;
};

/// Incident power density |sum_n x_n sqrt(G_n) e^{-jkd}/d|^2 / (4 pi) at one point.
double power_density_at(const EtArchitecture &arch, double transmit_power, const Vec3 &point,
                        double wavelength);

DensityMap density_map(const EtArchitecture &arch, double transmit_power,
                       std::span<const Vec3> points, double wavelength,
                       Exec exec = Exec::Parallel);

/// Fibonacci lattice on the sphere of `radius` around `center`.
std::vector<Vec3> sphere_points(const Vec3 &center, double radius, std::size_t n_samples);

/// Throws SingularGeometryError when any radiator lies on or inside the sphere.
void require_clear_sphere(std::span<const Vec3> radiators, const Vec3 &center, double radius);

SphereStats sphere_density_stats(const EtArchitecture &arch, double transmit_power,
                                 const Vec3 &center, double radius, std::size_t n_samples,
                                 double wavelength, Exec exec = Exec::Parallel);

/// Stats for several excitations of one radiator set, sharing the propagation work.
std::vector<SphereStats> sphere_density_stats(const RadiatorSet &radiators,
                                              std::span<const std::vector<cd>> amplitudes,
                                              const Vec3 &center, double radius,
                                              std::size_t n_samples, double wavelength,
                                              Exec exec = Exec::Parallel);

/// Sphere max and mean density divided by the power delivered to a receiver of gain
/// `rx_gain` at the sphere center (1/m^2). Independent of transmit power.
SphereStats normalized_sphere_stats(const EtArchitecture &arch, const Vec3 &center,
                                    double radius, std::size_t n_samples, double wavelength,
                                    double rx_gain = 1.0, Exec exec = Exec::Parallel);

/// Sphere max density per watt delivered (1/m^2).
double normalized_density(const EtArchitecture &arch, const Vec3 &center, double radius,
                          std::size_t n_samples, double wavelength, double rx_gain = 1.0);

/// Total power crossing a sphere that encloses every radiator: 4 pi R^2 times the
/// lattice mean of the density.
double integrated_sphere_power(const EtArchitecture &arch, double transmit_power,
                               const Vec3 &center, double radius, std::size_t n_samples,
                               double wavelength, Exec exec = Exec::Parallel);

} // namespace nfwpt
