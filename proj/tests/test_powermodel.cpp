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

#include <random>

#include "doctest.h"
#include "nfwpt/powermodel.hpp"

using namespace nfwpt;

TEST_SUITE("powermodel") {

TEST_CASE("consumed power examples") {
    CHECK(et_consumed_power(1.0, 676, ris_default_profile()) ==
          doctest::Approx(1.0 / 0.35 + 1.0 + 3.38).epsilon(1e-12));
    CHECK(et_consumed_power(1.0, 676, ris_default_profile()) == doctest::Approx(7.237).epsilon(1e-4));
    CHECK(et_consumed_power(0.0, 0, {0.35, 0.0, 0.0}) == 0.0);
    CHECK(et_consumed_power(0.35, 0, {0.35, 0.0, 0.0}) == doctest::Approx(1.0));
}

TEST_CASE("default profiles") {
    const auto ris = ris_default_profile();
    const auto dma = dma_default_profile();
    CHECK(ris.hpa_efficiency == 0.35);
    CHECK(ris.control_board == 1.0);
    CHECK(ris.per_element_drive == 0.005);
    CHECK(dma.hpa_efficiency == ris.hpa_efficiency);
    CHECK(dma.control_board == ris.control_board);
    CHECK(dma.per_element_drive == ris.per_element_drive);
    CHECK(digital_default_profile().control_board == 0.0);
}

TEST_CASE("linearity, static additivity and the efficiency bound") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 500.0), eff(0.05, 1.0);
    for (int i = 0; i < 200; ++i) {
        const ConsumptionProfile p{eff(rng), u(rng) / 100, u(rng) / 1e4};
        const std::size_t n = static_cast<std::size_t>(u(rng));
        const double a = u(rng), b = u(rng);
        const double zero = et_consumed_power(0.0, n, p);
        CHECK(et_consumed_power(a + b, n, p) - zero ==
              doctest::Approx((et_consumed_power(a, n, p) - zero) +
                              (et_consumed_power(b, n, p) - zero)));
        CHECK(zero == doctest::Approx(p.control_board + p.per_element_drive * n));
        CHECK(et_consumed_power(a, n, p) >= a);
    }
}

TEST_CASE("invalid profiles are rejected") {
    CHECK_THROWS(et_consumed_power(1.0, 1, {0.0, 1.0, 0.0}));
    CHECK_THROWS(et_consumed_power(1.0, 1, {1.2, 1.0, 0.0}));
    CHECK_THROWS(et_consumed_power(1.0, 1, {0.5, -1.0, 0.0}));
    CHECK_THROWS(et_consumed_power(-1.0, 1, ris_default_profile()));
}

}
