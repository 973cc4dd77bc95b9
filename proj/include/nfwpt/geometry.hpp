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

#include <cmath>
#include <cstddef>
#include <vector>

namespace nfwpt {

inline constexpr double kSpeedOfLight = 2.99792458e8; // m/s
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Free-space wavelength in meters for a frequency in Hz.
double wavelength_for(double frequency_hz);
double db_to_linear(double db);

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr bool operator==(const Vec3 &) const = default;

    constexpr double dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3 &o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline constexpr Vec3 operator*(double s, const Vec3 &v) { return v * s; }

/// Unit vector along `v`. Throws std::invalid_argument for zero or non-finite input.
Vec3 normalized(const Vec3 &v);

/// Radiation pattern of a single element.
///
/// CosinePower follows G(theta) = G0 * cos(theta)^(2q) in the front hemisphere and
/// zero behind, with 2(2q+1) = G0 so that the pattern integrates to 4*pi.
class ElementPattern {
  public:
    enum class Kind { Isotropic, CosinePower };

    static ElementPattern isotropic();
    /// Throws std::invalid_argument unless boresight_gain >= 1.
    static ElementPattern cosine_power(double boresight_gain);
    static ElementPattern cosine_power_db(double boresight_gain_db);

    Kind kind() const { return kind_; }
    double boresight_gain() const { return boresight_gain_; }
    double exponent() const { return exponent_; }

  private:
    ElementPattern(Kind kind, double gain, double exponent)
        : kind_(kind), boresight_gain_(gain), exponent_(exponent) {}

    Kind kind_;
    double boresight_gain_;
    double exponent_;
};

/// Linear power gain of `pattern` at the given direction cosine relative to the element normal.
double element_gain(const ElementPattern &pattern, double direction_cosine);

/// One radiating element (or a standalone feeder antenna).
struct Element {
    Vec3 position;
    Vec3 normal{0.0, 0.0, 1.0};
    ElementPattern pattern = ElementPattern::isotropic();
};

/// Regular planar grid of identical elements sharing one normal.
struct ArrayGeometry {
    std::vector<Element> elements;
    double edge_length = 0.0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    double spacing = 0.0;     // pitch between rows
    double col_spacing = 0.0; // pitch between columns
    Vec3 center;
    Vec3 normal{0.0, 0.0, 1.0};
    ElementPattern pattern = ElementPattern::isotropic();

    std::size_t size() const { return elements.size(); }
};

/// rows x cols grid spanning `edge_length` in both in-plane directions, centered at `center`.
/// The normal is normalized; edge_length must be positive unless the array is a single element.
ArrayGeometry make_planar_array(std::size_t rows, std::size_t cols, double edge_length,
                                const Vec3 &center, const Vec3 &normal,
                                const ElementPattern &pattern);

/// Near/far-field boundary distance L^2 / lambda.
double fraunhofer_threshold(double edge_length, double wavelength);

/// Edge length whose Fraunhofer distance equals d_prime: sqrt(d_prime * lambda).
double edge_length_for_threshold(double d_prime, double wavelength);

} // namespace nfwpt
