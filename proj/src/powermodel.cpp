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

#include "nfwpt/powermodel.hpp"

#include <cmath>
#include <stdexcept>

namespace nfwpt {

void ConsumptionProfile::validate() const {
    if (!(hpa_efficiency > 0.0 && hpa_efficiency <= 1.0))
        throw std::invalid_argument("HPA efficiency must lie in (0, 1]");
    if (!(control_board >= 0.0) || !(per_element_drive >= 0.0))
        throw std::invalid_argument("static consumption terms must be non-negative");
}

ConsumptionProfile ris_default_profile() { return {0.35, 1.0, 0.005}; }
ConsumptionProfile dma_default_profile() { return {0.35, 1.0, 0.005}; }
ConsumptionProfile digital_default_profile() { return {0.35, 0.0, 0.0}; }

double et_consumed_power(double transmit_power, std::size_t element_count,
                         const ConsumptionProfile &profile) {
    profile.validate();
    if (!(transmit_power >= 0.0))
        throw std::invalid_argument("transmit power must be non-negative");
    return transmit_power / profile.hpa_efficiency + profile.control_board +
           profile.per_element_drive * static_cast<double>(element_count);
}

} // namespace nfwpt
