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

#include "nfwpt/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nfwpt {

double wavelength_for(double frequency_hz) {
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("frequency must be positive");
    return kSpeedOfLight / frequency_hz;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

Vec3 normalized(const Vec3 &v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    return v * (1.0 / n);
}

ElementPattern ElementPattern::isotropic() { return {Kind::Isotropic, 1.0, 0.0}; }

ElementPattern ElementPattern::cosine_power(double boresight_gain) {
    if (!(boresight_gain >= 1.0) || !std::isfinite(boresight_gain))
        throw std::invalid_argument("cosine-power boresight gain must be at least 1 (got " +
                                    std::to_string(boresight_gain) + ")");
    return {Kind::CosinePower, boresight_gain, (boresight_gain - 2.0) / 4.0};
}

ElementPattern ElementPattern::cosine_power_db(double boresight_gain_db) {
    return cosine_power(db_to_linear(boresight_gain_db));
}

double element_gain(const ElementPattern &pattern, double direction_cosine) {
    if (pattern.kind() == ElementPattern::Kind::Isotropic)
        return 1.0;
    if (!(direction_cosine > 0.0))
        return 0.0;
    const double c = std::min(direction_cosine, 1.0);
    return pattern.boresight_gain() * std::pow(c, 2.0 * pattern.exponent());
}

namespace {

// In-plane basis (u, v) with u x v = n. For n = +z this yields u = +x, v = +y.
void plane_basis(const Vec3 &n, Vec3 &u, Vec3 &v) {
    const Vec3 helper = std::abs(n.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    v = normalized(n.cross(helper));
    u = v.cross(n);
}

} // namespace

ArrayGeometry make_planar_array(std::size_t rows, std::size_t cols, double edge_length,
                                const Vec3 &center, const Vec3 &normal,
                                const ElementPattern &pattern) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("array needs at least one row and one column");
    const bool single = rows == 1 && cols == 1;
    if (!single && !(edge_length > 0.0))
        throw std::invalid_argument("edge length must be positive for a multi-element array");
    if (!center.finite())
        throw std::invalid_argument("array center must be finite");

    ArrayGeometry a;
    a.rows = rows;
    a.cols = cols;
    a.edge_length = single ? 0.0 : edge_length;
    a.spacing = rows > 1 ? edge_length / static_cast<double>(rows - 1) : 0.0;
    a.col_spacing = cols > 1 ? edge_length / static_cast<double>(cols - 1) : 0.0;
    a.center = center;
    a.normal = normalized(normal);
    a.pattern = pattern;

    Vec3 u, v;
    plane_basis(a.normal, u, v);
    a.elements.reserve(rows * cols);
    const double r0 = 0.5 * static_cast<double>(rows - 1);
    const double c0 = 0.5 * static_cast<double>(cols - 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const double du = (static_cast<double>(c) - c0) * a.col_spacing;
            const double dv = (static_cast<double>(r) - r0) * a.spacing;
            a.elements.push_back({center + u * du + v * dv, a.normal, pattern});
        }
    }
    return a;
}

double fraunhofer_threshold(double edge_length, double wavelength) {
    if (!(wavelength > 0.0))
        throw std::invalid_argument("wavelength must be positive");
    return edge_length * edge_length / wavelength;
}

double edge_length_for_threshold(double d_prime, double wavelength) {
    if (!(wavelength > 0.0))
        throw std::invalid_argument("wavelength must be positive");
    if (d_prime < 0.0)
        throw std::invalid_argument("threshold distance must be non-negative");
    return std::sqrt(d_prime * wavelength);
}

} // namespace nfwpt
