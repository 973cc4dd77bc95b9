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

// Data-parallel inner loops. Every kernel has a serial reference version and an
// OpenMP version; both produce bit-identical results because each output cell is
// accumulated by exactly one thread in a fixed order.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "nfwpt/geometry.hpp"

namespace nfwpt {

using cd = std::complex<double>;

enum class Exec { Serial, Parallel };

/// Neumaier compensated summation.
class CompensatedSum {
  public:
    void add(double v) {
        const double t = sum_ + v;
        const bool sum_larger = std::abs(sum_) >= std::abs(v);
        const double big = sum_larger ? sum_ : v;
        const double small = sum_larger ? v : sum_;
        comp_ += (big - t) + small;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexCompensatedSum {
  public:
    void add(const cd &v) {
        re_.add(v.real());
        im_.add(v.imag());
    }
    cd value() const { return {re_.value(), im_.value()}; }

  private:
    CompensatedSum re_;
    CompensatedSum im_;
};

/// Structure-of-arrays list of radiators that share one normal and one pattern.
struct RadiatorSet {
    std::vector<double> x, y, z;
    Vec3 normal{0.0, 0.0, 1.0};
    ElementPattern pattern = ElementPattern::isotropic();

    std::size_t size() const { return x.size(); }
    Vec3 position(std::size_t i) const { return {x[i], y[i], z[i]}; }
    void push_back(const Vec3 &p) {
        x.push_back(p.x);
        y.push_back(p.y);
        z.push_back(p.z);
    }
};

RadiatorSet radiators_from(const ArrayGeometry &array);

/// sqrt(G(theta)) for a pattern, given the direction cosine.
double pattern_amplitude(const ElementPattern &pattern, double direction_cosine);

/// exp(-j 2 pi d / lambda) with the phase reduced modulo one wavelength first.
cd propagation_phasor(double distance, double wavelength);

/// Free-space line-of-sight coefficient between two antennas:
/// sqrt(Gt(theta_t) Gr) * lambda / (4 pi d) * exp(-j 2 pi d / lambda).
/// Throws SingularGeometryError when the positions coincide.
cd los_term(const Vec3 &tx, const Vec3 &tx_normal, const ElementPattern &tx_pattern,
            const Vec3 &rx, double rx_gain, double wavelength);

/// Channel from every radiator in `set` to `point` (isotropic-equivalent rx gain `rx_gain`).
std::vector<cd> radiator_to_point_serial(const RadiatorSet &set, const Vec3 &point,
                                         double rx_gain, double wavelength);
std::vector<cd> radiator_to_point_omp(const RadiatorSet &set, const Vec3 &point,
                                      double rx_gain, double wavelength);
std::vector<cd> radiator_to_point(const RadiatorSet &set, const Vec3 &point, double rx_gain,
                                  double wavelength, Exec exec = Exec::Parallel);

/// Channel from a single source antenna to every radiator in `set`; the radiator
/// pattern is applied at the angle of incidence.
std::vector<cd> source_to_radiators(const Element &source, const RadiatorSet &set,
                                    double wavelength, Exec exec = Exec::Parallel);

/// Field amplitude sum_n x_n sqrt(G_n) exp(-j k d_n) / d_n at each point, for several
/// excitation vectors over the same radiators. Result index: k * points.size() + p.
/// Power density at the point is |amplitude|^2 / (4 pi).
std::vector<cd> superpose_serial(const RadiatorSet &set, std::span<const std::vector<cd>> excitations,
                                 std::span<const Vec3> points, double wavelength);
std::vector<cd> superpose_omp(const RadiatorSet &set, std::span<const std::vector<cd>> excitations,
                              std::span<const Vec3> points, double wavelength);
std::vector<cd> superpose(const RadiatorSet &set, std::span<const std::vector<cd>> excitations,
                          std::span<const Vec3> points, double wavelength,
                          Exec exec = Exec::Parallel);

/// Deterministic Fibonacci lattice of n unit vectors.
std::vector<Vec3> fibonacci_sphere(std::size_t n);

} // namespace nfwpt
