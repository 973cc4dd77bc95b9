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

// Serial reference kernels against their OpenMP counterparts.
//   ./nfwpt_bench --benchmark_filter=superpose

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "nfwpt/kernels.hpp"

namespace {

using namespace nfwpt;

constexpr double kLambda = 0.01;

RadiatorSet square_aperture(std::size_t side) {
    RadiatorSet set;
    set.pattern = ElementPattern::cosine_power_db(7.0);
    const double pitch = kLambda / 5.0;
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j)
            set.push_back({(i - 0.5 * (side - 1)) * pitch, (j - 0.5 * (side - 1)) * pitch, 0.0});
    return set;
}

std::vector<cd> random_excitation(std::size_t n) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    std::vector<cd> x(n);
    for (auto &v : x)
        v = std::polar(1.0 / std::sqrt(static_cast<double>(n)), phase(rng));
    return x;
}

template <auto Kernel>
void bm_radiator_to_point(benchmark::State &state) {
    const auto set = square_aperture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(set, Vec3{0.01, 0.02, 3.0}, 1.0, kLambda));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(set.size()));
}

template <auto Kernel>
void bm_superpose(benchmark::State &state) {
    const auto set = square_aperture(static_cast<std::size_t>(state.range(0)));
    const std::vector<std::vector<cd>> ex{random_excitation(set.size())};
    std::vector<Vec3> points;
    for (const auto &u : fibonacci_sphere(1000))
        points.push_back(Vec3{0.0, 0.0, 3.0} + 0.15 * u);
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(set, ex, points, kLambda));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(set.size() * points.size()));
}

BENCHMARK(bm_radiator_to_point<radiator_to_point_serial>)->Name("radiator_to_point/serial")->Arg(64)->Arg(256);
BENCHMARK(bm_radiator_to_point<radiator_to_point_omp>)->Name("radiator_to_point/omp")->Arg(64)->Arg(256);
BENCHMARK(bm_superpose<superpose_serial>)->Name("superpose/serial")->Arg(26)->Arg(101)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_superpose<superpose_omp>)->Name("superpose/omp")->Arg(26)->Arg(101)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
