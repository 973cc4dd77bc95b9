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

#include "nfwpt/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "nfwpt/errors.hpp"

namespace nfwpt {

namespace {

double density_of(const cd &amplitude) { return std::norm(amplitude) / (4.0 * kPi); }

SphereStats stats_of(std::span<const cd> amplitudes) {
    SphereStats s;
    CompensatedSum sum;
    for (const auto &a : amplitudes) {
        const double d = density_of(a);
        s.max = std::max(s.max, d);
        sum.add(d);
    }
    s.mean = amplitudes.empty() ? 0.0 : sum.value() / static_cast<double>(amplitudes.size());
    return s;
}

void require_sphere_args(double radius, std::size_t n_samples) {
    if (!(radius > 0.0))
        throw std::invalid_argument("sphere radius must be positive");
    if (n_samples < kMinSphereSamples)
        throw std::invalid_argument("sphere sampling needs at least 100 points");
}

std::vector<SphereStats> lattice_stats(const RadiatorSet &radiators,
                                       std::span<const std::vector<cd>> amplitudes,
                                       const Vec3 &center, double radius, std::size_t n_samples,
                                       double wavelength, Exec exec) {
    const auto pts = sphere_points(center, radius, n_samples);
    const auto field = superpose(radiators, amplitudes, pts, wavelength, exec);
    std::vector<SphereStats> out;
    for (std::size_t k = 0; k < amplitudes.size(); ++k)
        out.push_back(stats_of(std::span(field).subspan(k * n_samples, n_samples)));
    return out;
}

} // namespace

double power_density_at(const EtArchitecture &arch, double transmit_power, const Vec3 &point,
                        double wavelength) {
    const Excitation ex = excitation(arch, transmit_power, wavelength);
    const std::vector<cd> amps[1] = {ex.amplitudes};
    const Vec3 pts[1] = {point};
    return density_of(superpose_serial(ex.radiators, amps, pts, wavelength)[0]);
}

DensityMap density_map(const EtArchitecture &arch, double transmit_power,
                       std::span<const Vec3> points, double wavelength, Exec exec) {
    if (points.empty())
        throw std::invalid_argument("density map needs at least one point");
    const Excitation ex = excitation(arch, transmit_power, wavelength);
    const std::vector<cd> amps[1] = {ex.amplitudes};
    const auto field = superpose(ex.radiators, amps, points, wavelength, exec);
    DensityMap map{{}, arch.label(), transmit_power};
    map.samples.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        map.samples.push_back({points[i], density_of(field[i])});
    return map;
}

std::vector<Vec3> sphere_points(const Vec3 &center, double radius, std::size_t n_samples) {
    auto pts = fibonacci_sphere(n_samples);
    for (auto &p : pts)
        p = center + p * radius;
    return pts;
}

void require_clear_sphere(std::span<const Vec3> radiators, const Vec3 &center, double radius) {
    for (const auto &r : radiators)
        if ((r - center).norm() <= radius)
            throw SingularGeometryError("a radiating element lies inside the evaluation sphere");
}

std::vector<SphereStats> sphere_density_stats(const RadiatorSet &radiators,
                                              std::span<const std::vector<cd>> amplitudes,
                                              const Vec3 &center, double radius,
                                              std::size_t n_samples, double wavelength,
                                              Exec exec) {
    require_sphere_args(radius, n_samples);
    std::vector<Vec3> positions;
    positions.reserve(radiators.size());
    for (std::size_t i = 0; i < radiators.size(); ++i)
        positions.push_back(radiators.position(i));
    require_clear_sphere(positions, center, radius);
    return lattice_stats(radiators, amplitudes, center, radius, n_samples, wavelength, exec);
}

SphereStats sphere_density_stats(const EtArchitecture &arch, double transmit_power,
                                 const Vec3 &center, double radius, std::size_t n_samples,
                                 double wavelength, Exec exec) {
    require_sphere_args(radius, n_samples);
    require_clear_sphere(radiator_positions(arch), center, radius);
    const Excitation ex = excitation(arch, transmit_power, wavelength);
    const std::vector<cd> amps[1] = {ex.amplitudes};
    return sphere_density_stats(ex.radiators, amps, center, radius, n_samples, wavelength,
                                exec)[0];
}

SphereStats normalized_sphere_stats(const EtArchitecture &arch, const Vec3 &center,
                                    double radius, std::size_t n_samples, double wavelength,
                                    double rx_gain, Exec exec) {
    const double delivered = delivered_power(effective_channel(arch, center, rx_gain, wavelength), 1.0);
    if (!(delivered > 0.0))
        throw UnreachableTargetError("no power is delivered to the sphere center");
    const SphereStats s = sphere_density_stats(arch, 1.0, center, radius, n_samples, wavelength, exec);
    return {s.max / delivered, s.mean / delivered};
}

double normalized_density(const EtArchitecture &arch, const Vec3 &center, double radius,
                          std::size_t n_samples, double wavelength, double rx_gain) {
    return normalized_sphere_stats(arch, center, radius, n_samples, wavelength, rx_gain).max;
}

double integrated_sphere_power(const EtArchitecture &arch, double transmit_power,
                               const Vec3 &center, double radius, std::size_t n_samples,
                               double wavelength, Exec exec) {
    require_sphere_args(radius, n_samples);
    for (const auto &r : radiator_positions(arch))
        if (!((r - center).norm() < radius))
            throw SingularGeometryError("integration sphere must enclose every radiator");
    const Excitation ex = excitation(arch, transmit_power, wavelength);
    const std::vector<cd> amps[1] = {ex.amplitudes};
    const SphereStats s =
        lattice_stats(ex.radiators, amps, center, radius, n_samples, wavelength, exec)[0];
    return 4.0 * kPi * radius * radius * s.mean;
}

} // namespace nfwpt
