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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nfwpt/architectures.hpp"

namespace nfwpt {

/// Global-best particle swarm settings (constriction coefficients by default).
struct PsoParams {
    std::size_t swarm_size = 50;
    std::size_t iterations = 200;
    double inertia = 0.7298;
    double cognitive = 1.49618;
    double social = 1.49618;
    std::uint64_t seed = 42;

    void validate() const;
};

/// Phase vector search space; `bits` empty means continuous [0, 2 pi).
struct PhaseDomain {
    std::size_t dimension = 1;
    std::optional<unsigned> bits;

    static PhaseDomain continuous(std::size_t dimension) { return {dimension, std::nullopt}; }
    static PhaseDomain discrete(std::size_t dimension, unsigned bits) { return {dimension, bits}; }

    void validate() const;
    /// Maps a phase onto the domain (wrap, then nearest grid point for discrete domains).
    double project(double phase) const;
};

using PhaseObjective = std::function<double(std::span<const double>)>;

struct PsoResult {
    std::vector<double> best_phases; // projected onto the domain
    double best_value = 0.0;
    std::vector<double> trace;       // best value after each iteration
};

/// Minimizes `objective` over `domain`. Particles move in continuous phase space and are
/// projected onto the domain before every evaluation. `seeds` replace the first random
/// particles. Objective calls within one iteration may run concurrently, so the objective
/// must be thread-safe. Results depend only on the seed, not on the thread count.
/// Throws OptimizationError when the objective returns a non-finite value.
PsoResult pso_minimize(const PhaseObjective &objective, const PhaseDomain &domain,
                       const PsoParams &params, std::span<const std::vector<double>> seeds = {},
                       Exec exec = Exec::Parallel);

struct BruteForceResult {
    std::vector<double> best_phases;
    double best_value = 0.0;
    std::size_t evaluated = 0;
};

/// Exhaustive search of a discrete domain; ties keep the lexicographically first
/// configuration. Throws OptimizationError when 2^(bits*dimension) > max_configs.
BruteForceResult brute_force(const PhaseObjective &objective, const PhaseDomain &domain,
                             std::size_t max_configs);

/// How a phase setting becomes a complex element weight.
enum class WeightResponse { UnitModulus, Lorentzian };

cd element_weight(WeightResponse response, double phase);

/// Channel that is linear in the element weights: h = sum_i c_i w(theta_i).
/// Evaluates to -|h|^2 so that minimizing it maximizes delivered power.
class LinearGainObjective {
  public:
    LinearGainObjective(std::vector<cd> coefficients, WeightResponse response,
                        std::optional<unsigned> bits = std::nullopt);

    double operator()(std::span<const double> phases) const;
    cd channel(std::span<const double> phases) const;
    std::size_t dimension() const { return coefficients_.size(); }

  private:
    std::vector<cd> coefficients_;
    WeightResponse response_;
    std::optional<unsigned> bits_;
    std::vector<cd> table_; // weights of the grid points for discrete phases
};

/// Lorentzian phases maximizing |sum_i c_i (j + e^{j phi_i}) / 2|. The optimum aligns
/// every element's free half-circle term with j * sum_i c_i, giving
/// |h| = (|sum_i c_i| + sum_i |c_i|) / 2.
std::vector<double> lorentzian_alignment_phases(std::span<const cd> coefficients);

struct PhaseSolution {
    std::vector<double> phases;
    cd channel;
    std::vector<double> trace; // empty when solved in closed form
};

/// Maximizes |h| for a linear phase-controlled channel. Continuous domains are solved in
/// closed form; discrete ones run PSO seeded with the quantized closed-form solution.
PhaseSolution optimize_phases(std::span<const cd> coefficients, WeightResponse response,
                              std::optional<unsigned> bits, const PsoParams &params,
                              Exec exec = Exec::Parallel);

struct OptimizedArchitecture {
    EtArchitecture arch;
    double transmit_power = 0.0; // W needed for the target
    cd channel;
    std::vector<double> trace;
};

/// Configures the tunable part of `arch` for maximum power at `point`, then solves the
/// transmit power that delivers `target_power`. Throws UnreachableTargetError when the
/// best configuration still has a zero channel.
OptimizedArchitecture optimize_architecture(EtArchitecture arch, double target_power,
                                            const Vec3 &point, double wavelength,
                                            const PsoParams &params, double rx_gain = 1.0,
                                            Exec exec = Exec::Parallel);

} // namespace nfwpt
