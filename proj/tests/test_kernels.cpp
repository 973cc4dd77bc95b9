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

#include <cmath>
#include <random>

#include <omp.h>

#include "doctest.h"
#include "nfwpt/errors.hpp"
#include "nfwpt/kernels.hpp"
#include "oracles/oracles.hpp"

using namespace nfwpt;

namespace {

RadiatorSet random_set(std::size_t n, std::uint64_t seed, const ElementPattern &pattern) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    RadiatorSet set;
    set.pattern = pattern;
    for (std::size_t i = 0; i < n; ++i)
        set.push_back({u(rng), u(rng), 0.0});
    return set;
}

std::vector<cd> random_excitation(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<cd> x(n);
    for (auto &v : x)
        v = {g(rng), g(rng)};
    return x;
}

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("compensated sums recover cancelled digits") {
    CompensatedSum s;
    s.add(1.0);
    s.add(1e100);
    s.add(1.0);
    s.add(-1e100);
    CHECK(s.value() == 2.0);
    ComplexCompensatedSum c;
    c.add({1e16, 1.0});
    c.add({1.0, -1e16});
    c.add({-1e16, 1e16});
    CHECK(c.value() == cd(1.0, 1.0));
}

TEST_CASE("propagation phasor is periodic in the wavelength") {
    const double lambda = 0.0123;
    for (double d : {0.3, 1.7, 8.0}) {
        const cd a = propagation_phasor(d, lambda);
        const cd b = propagation_phasor(d + lambda, lambda);
        CHECK(std::abs(a - b) < 1e-9);
        CHECK(std::abs(a) == doctest::Approx(1.0));
    }
    CHECK(std::abs(propagation_phasor(lambda, lambda) - cd(1.0, 0.0)) < 1e-12);
}

TEST_CASE("los_term matches the Friis oracle") {
    const double lambda = 0.05;
    const auto pattern = ElementPattern::cosine_power_db(13.0);
    const Vec3 tx{0.1, -0.2, 0.0};
    for (const Vec3 rx : {Vec3{0, 0, 3}, Vec3{1, 2, 0.5}, Vec3{-0.4, 0.1, 8}}) {
        const cd got = los_term(tx, {0, 0, 1}, pattern, rx, 2.0, lambda);
        const cd want = oracle::los({tx.x, tx.y, tx.z}, {rx.x, rx.y, rx.z}, lambda,
                                    pattern.boresight_gain(), 2.0);
        CHECK(std::abs(got - want) <= 1e-9 * std::abs(want));
    }
    CHECK_THROWS_AS(los_term(tx, {0, 0, 1}, pattern, tx, 1.0, lambda), SingularGeometryError);
}

TEST_CASE("radiator_to_point serial and OpenMP results are identical") {
    const auto set = random_set(777, 3, ElementPattern::cosine_power_db(7.0));
    const Vec3 p{0.2, -0.1, 1.4};
    const auto a = radiator_to_point_serial(set, p, 1.0, 0.02);
    for (int threads : {1, 2, 4}) {
        omp_set_num_threads(threads);
        const auto b = radiator_to_point_omp(set, p, 1.0, 0.02);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(a[i] == b[i]);
    }
    omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("superpose serial and OpenMP results are identical") {
    const auto set = random_set(300, 11, ElementPattern::isotropic());
    const std::vector<std::vector<cd>> x = {random_excitation(300, 1), random_excitation(300, 2)};
    std::vector<Vec3> pts;
    for (const auto &u : fibonacci_sphere(257))
        pts.push_back(Vec3{0, 0, 2} + u * 0.3);
    const auto a = superpose_serial(set, x, pts, 0.01);
    for (int threads : {1, 3}) {
        omp_set_num_threads(threads);
        const auto b = superpose_omp(set, x, pts, 0.01);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(a[i] == b[i]);
    }
    omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("superpose matches the density oracle") {
    const auto pattern = ElementPattern::cosine_power_db(13.0);
    const auto set = random_set(40, 5, pattern);
    const auto x = random_excitation(40, 6);
    std::vector<oracle::P3> src;
    for (std::size_t i = 0; i < set.size(); ++i)
        src.push_back({set.x[i], set.y[i], set.z[i]});
    const std::vector<Vec3> pts = {{0, 0, 1}, {0.5, 0.5, 0.2}, {-1, 0.3, 4}};
    const std::vector<std::vector<cd>> xs = {x};
    const auto amp = superpose(set, xs, pts, 0.03);
    for (std::size_t p = 0; p < pts.size(); ++p) {
        const double want = oracle::density(src, x, {pts[p].x, pts[p].y, pts[p].z}, 0.03,
                                            pattern.boresight_gain());
        CHECK(std::norm(amp[p]) / (4.0 * kPi) == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("superpose flags a point on a radiator") {
    const auto set = random_set(10, 9, ElementPattern::isotropic());
    const std::vector<Vec3> pts = {{0, 0, 1}, set.position(4)};
    const std::vector<std::vector<cd>> xs = {random_excitation(10, 1)};
    CHECK_THROWS_AS(superpose(set, xs, pts, 0.1, Exec::Serial), SingularGeometryError);
    CHECK_THROWS_AS(superpose(set, xs, pts, 0.1, Exec::Parallel), SingularGeometryError);
}

TEST_CASE("Fibonacci lattice is unit length, deterministic and balanced") {
    const auto a = fibonacci_sphere(1000);
    const auto b = fibonacci_sphere(1000);
    REQUIRE(a.size() == 1000);
    Vec3 mean;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(a[i].norm() == doctest::Approx(1.0).epsilon(1e-14));
        mean = mean + a[i] * 1e-3;
    }
    CHECK(mean.norm() < 2e-3);
    CHECK(a.front().z == doctest::Approx(1.0 - 1.0 / 1000));
    CHECK(fibonacci_sphere(0).empty());
}

}
