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

#include "nfwpt/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include <omp.h>

#include "nfwpt/errors.hpp"

namespace nfwpt {

RadiatorSet radiators_from(const ArrayGeometry &array) {
    RadiatorSet set;
    set.normal = array.normal;
    set.pattern = array.pattern;
    set.x.reserve(array.size());
    set.y.reserve(array.size());
    set.z.reserve(array.size());
    for (const auto &e : array.elements)
        set.push_back(e.position);
    return set;
}

double pattern_amplitude(const ElementPattern &pattern, double direction_cosine) {
    if (pattern.kind() == ElementPattern::Kind::Isotropic)
        return 1.0;
    if (!(direction_cosine > 0.0))
        return 0.0;
    const double c = direction_cosine < 1.0 ? direction_cosine : 1.0;
    return std::sqrt(pattern.boresight_gain()) * std::pow(c, pattern.exponent());
}

cd propagation_phasor(double distance, double wavelength) {
    const double cycles = distance / wavelength;
    const double frac = cycles - std::floor(cycles);
    const double phase = -kTwoPi * frac;
    return {std::cos(phase), std::sin(phase)};
}

cd los_term(const Vec3 &tx, const Vec3 &tx_normal, const ElementPattern &tx_pattern,
            const Vec3 &rx, double rx_gain, double wavelength) {
    const Vec3 delta = rx - tx;
    const double d = delta.norm();
    if (!(d > 0.0))
        throw SingularGeometryError("transmitter and receiver positions coincide");
    const double amp = pattern_amplitude(tx_pattern, tx_normal.dot(delta) / d);
    if (amp == 0.0)
        return {0.0, 0.0};
    return amp * std::sqrt(rx_gain) * wavelength / (4.0 * kPi * d) *
           propagation_phasor(d, wavelength);
}

namespace {

inline bool radiator_to_point_one(const RadiatorSet &set, std::size_t n, const Vec3 &point,
                                  double scale, double wavelength, cd &out) {
    const double dx = point.x - set.x[n];
    const double dy = point.y - set.y[n];
    const double dz = point.z - set.z[n];
    const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (!(d > 0.0))
        return false;
    const double cosine = (set.normal.x * dx + set.normal.y * dy + set.normal.z * dz) / d;
    const double amp = pattern_amplitude(set.pattern, cosine);
    out = amp == 0.0 ? cd{0.0, 0.0} : (amp * scale / d) * propagation_phasor(d, wavelength);
    return true;
}

// Accumulates every excitation at one point. Returns false on a singular distance.
bool superpose_point(const RadiatorSet &set, std::span<const std::vector<cd>> excitations,
                     const Vec3 &p, double wavelength, std::vector<ComplexCompensatedSum> &acc) {
    for (auto &a : acc)
        a = ComplexCompensatedSum{};
    const std::size_t k_count = excitations.size();
    for (std::size_t n = 0; n < set.size(); ++n) {
        const double dx = p.x - set.x[n];
        const double dy = p.y - set.y[n];
        const double dz = p.z - set.z[n];
        const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
        if (!(d > 0.0))
            return false;
        const double cosine = (set.normal.x * dx + set.normal.y * dy + set.normal.z * dz) / d;
        const double amp = pattern_amplitude(set.pattern, cosine);
        if (amp == 0.0)
            continue;
        const cd term = (amp / d) * propagation_phasor(d, wavelength);
        for (std::size_t k = 0; k < k_count; ++k)
            acc[k].add(excitations[k][n] * term);
    }
    return true;
}

void check_excitations(const RadiatorSet &set, std::span<const std::vector<cd>> excitations) {
    for (const auto &x : excitations)
        if (x.size() != set.size())
            throw std::invalid_argument("excitation length does not match radiator count");
}

[[noreturn]] void throw_singular() {
    throw SingularGeometryError("observation point coincides with a radiator");
}

} // namespace

std::vector<cd> radiator_to_point_serial(const RadiatorSet &set, const Vec3 &point,
                                         double rx_gain, double wavelength) {
    const double scale = std::sqrt(rx_gain) * wavelength / (4.0 * kPi);
    std::vector<cd> out(set.size());
    for (std::size_t n = 0; n < set.size(); ++n)
        if (!radiator_to_point_one(set, n, point, scale, wavelength, out[n]))
            throw_singular();
    return out;
}

std::vector<cd> radiator_to_point_omp(const RadiatorSet &set, const Vec3 &point,
                                      double rx_gain, double wavelength) {
    const double scale = std::sqrt(rx_gain) * wavelength / (4.0 * kPi);
    const auto count = static_cast<std::ptrdiff_t>(set.size());
    std::vector<cd> out(set.size());
    int singular = 0;
#pragma omp parallel for schedule(static) reduction(| : singular)
    for (std::ptrdiff_t n = 0; n < count; ++n)
        if (!radiator_to_point_one(set, static_cast<std::size_t>(n), point, scale, wavelength,
                                   out[static_cast<std::size_t>(n)]))
            singular |= 1;
    if (singular)
        throw_singular();
    return out;
}

std::vector<cd> radiator_to_point(const RadiatorSet &set, const Vec3 &point, double rx_gain,
                                  double wavelength, Exec exec) {
    return exec == Exec::Serial ? radiator_to_point_serial(set, point, rx_gain, wavelength)
                                : radiator_to_point_omp(set, point, rx_gain, wavelength);
}

std::vector<cd> source_to_radiators(const Element &source, const RadiatorSet &set,
                                    double wavelength, Exec exec) {
    const auto count = static_cast<std::ptrdiff_t>(set.size());
    std::vector<cd> out(set.size());
    int singular = 0;
#pragma omp parallel for schedule(static) reduction(| : singular) if (exec == Exec::Parallel)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto n = static_cast<std::size_t>(i);
        const Vec3 r = set.position(n);
        const Vec3 delta = source.position - r;
        const double d = delta.norm();
        if (!(d > 0.0)) {
            singular |= 1;
            continue;
        }
        const double incidence_gain = element_gain(set.pattern, set.normal.dot(delta) / d);
        out[n] = los_term(source.position, source.normal, source.pattern, r, incidence_gain,
                          wavelength);
    }
    if (singular)
        throw SingularGeometryError("source antenna coincides with a radiator");
    return out;
}

std::vector<cd> superpose_serial(const RadiatorSet &set, std::span<const std::vector<cd>> excitations,
                                 std::span<const Vec3> points, double wavelength) {
    check_excitations(set, excitations);
    const std::size_t np = points.size();
    std::vector<cd> out(excitations.size() * np);
    std::vector<ComplexCompensatedSum> acc(excitations.size());
    for (std::size_t p = 0; p < np; ++p) {
        if (!superpose_point(set, excitations, points[p], wavelength, acc))
            throw_singular();
        for (std::size_t k = 0; k < acc.size(); ++k)
            out[k * np + p] = acc[k].value();
    }
    return out;
}

std::vector<cd> superpose_omp(const RadiatorSet &set, std::span<const std::vector<cd>> excitations,
                              std::span<const Vec3> points, double wavelength) {
    check_excitations(set, excitations);
    const std::size_t np = points.size();
    std::vector<cd> out(excitations.size() * np);
    int singular = 0;
#pragma omp parallel reduction(| : singular)
    {
        std::vector<ComplexCompensatedSum> acc(excitations.size());
#pragma omp for schedule(dynamic, 16)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(np); ++i) {
            const auto p = static_cast<std::size_t>(i);
            if (!superpose_point(set, excitations, points[p], wavelength, acc)) {
                singular |= 1;
                continue;
            }
            for (std::size_t k = 0; k < acc.size(); ++k)
                out[k * np + p] = acc[k].value();
        }
    }
    if (singular)
        throw_singular();
    return out;
}

std::vector<cd> superpose(const RadiatorSet &set, std::span<const std::vector<cd>> excitations,
                          std::span<const Vec3> points, double wavelength, Exec exec) {
    return exec == Exec::Serial ? superpose_serial(set, excitations, points, wavelength)
                                : superpose_omp(set, excitations, points, wavelength);
}

std::vector<Vec3> fibonacci_sphere(std::size_t n) {
    std::vector<Vec3> pts;
    pts.reserve(n);
    const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
    const double nd = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / nd;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        pts.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }
    return pts;
}

} // namespace nfwpt
