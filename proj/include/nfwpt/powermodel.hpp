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

namespace nfwpt {

struct ConsumptionProfile {
    double hpa_efficiency = 0.35;
    double control_board = 1.0;       // W
    double per_element_drive = 0.005; // W per tunable element

    void validate() const;
};

/// 1 W board, 5 mW per element, 35 % HPA efficiency.
ConsumptionProfile ris_default_profile();
/// Mirrors the RIS profile.
ConsumptionProfile dma_default_profile();
/// HPA only.
ConsumptionProfile digital_default_profile();

/// transmit_power / efficiency + control board + per-element drive * element_count.
double et_consumed_power(double transmit_power, std::size_t element_count,
                         const ConsumptionProfile &profile);

} // namespace nfwpt
