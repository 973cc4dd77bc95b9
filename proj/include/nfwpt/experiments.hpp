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

#include <string>

#include "nfwpt/results.hpp"
#include "nfwpt/scenario.hpp"

namespace nfwpt {

/// Column names of the density sweep table.
const std::vector<std::string> &fig2_columns();
/// Column names of the transmitter power sweep table (also used by custom runs).
const std::vector<std::string> &fig4_columns();

/// Fully digital 10x10 array sized so that L^2/lambda equals each d', focused on the
/// receiver by MRT. One row per (frequency, d', radius) in that nesting order.
/// Throws SingularGeometryError when a sphere reaches the array.
ResultTable run_fig2(const ScenarioConfig &config);

/// One row per (frequency, architecture): optimized phases, transmit power for the
/// target, consumed power and the sphere-max density around the receiver.
/// A DMA row is followed by a `dma_zero_static` row when the variant is enabled.
ResultTable run_fig4(const ScenarioConfig &config);

/// Dispatches on config.experiment.
ResultTable run_experiment(const ScenarioConfig &config);

/// Physical constants, element models and per-experiment defaults as indented JSON.
std::string describe();

} // namespace nfwpt
