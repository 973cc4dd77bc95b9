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

#include "nfwpt/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>

#include <omp.h>

#include "nfwpt/errors.hpp"

namespace nfwpt {

void PsoParams::validate() const {
    if (swarm_size < 2)
        throw std::invalid_argument("PSO swarm needs at least two particles");
    if (iterations < 1)
        throw std::invalid_argument("PSO needs at least one iteration");
    if (!(inertia >= 0.0) || !(cognitive >= 0.0) || !(social >= 0.0))
        throw std::invalid_argument("PSO coefficients must be non-negative");
}

void PhaseDomain::validate() const {
    if (dimension < 1)
        throw std::invalid_argument("phase domain needs at least one dimension");
    if (bits && (*bits < 1 || *bits > 30))
        throw std::invalid_argument("phase resolution must be between 1 and 30 bits");
}

double PhaseDomain::project(double phase) const {
    return bits ? quantize_phase(phase, *bits) : wrap_phase(phase);
}

namespace {

constexpr double kVelocityClamp = kPi;

// Shortest signed arc from `from` to `to`, both in [0, 2 pi).
inline double arc(double to, double from) {
    const double d = to - from;
    return d - (d > kPi ? kTwoPi : 0.0) + (d <= -kPi ? kTwoPi : 0.0);
}

struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> best_position;
    std::vector<double> scratch; // projected position handed to the objective
    double best_value = std::numeric_limits<double>::infinity();
    double value = 0.0;
    std::mt19937_64 rng;
};

class Projector {
  public:
    explicit Projector(const PhaseDomain &domain) : discrete_(domain.bits.has_value()) {
        if (discrete_) {
            levels_ = std::ldexp(1.0, static_cast<int>(*domain.bits));
            step_ = kTwoPi / levels_;
        }
    }

    // `in` is already wrapped to [0, 2 pi).
    void operator()(std::span<const double> in, std::span<double> out) const {
        if (!discrete_) {
            std::copy(in.begin(), in.end(), out.begin());
            return;
        }
        for (std::size_t i = 0; i < in.size(); ++i) {
            // ceil without a libm call; y > -1 because inputs are non-negative.
            const double y = in[i] / step_ - 0.5;
            auto k = static_cast<double>(static_cast<long>(y));
            k += k < y ? 1.0 : 0.0;
            k -= k >= levels_ ? levels_ : 0.0;
            out[i] = k * step_;
        }
    }

  private:
    bool discrete_;
    double levels_ = 0.0;
    double step_ = 0.0;
};

bool evaluate(const PhaseObjective &objective, const Projector &project, Particle &p) {
    project(p.position, p.scratch);
    p.value = objective(p.scratch);
    if (!std::isfinite(p.value))
        return false;
    if (p.value < p.best_value) {
        p.best_value = p.value;
        p.best_position = p.position;
    }
    return true;
}

[[noreturn]] void throw_non_finite() {
    throw OptimizationError("objective returned a non-finite value");
}

} // namespace

PsoResult pso_minimize(const PhaseObjective &objective, const PhaseDomain &domain,
                       const PsoParams &params, std::span<const std::vector<double>> seeds,
                       Exec exec) {
    domain.validate();
    params.validate();
    const std::size_t dim = domain.dimension;
    for (const auto &s : seeds)
        if (s.size() != dim)
            throw std::invalid_argument("seed particle has the wrong dimension");

    const Projector project(domain);
    const auto swarm = static_cast<std::ptrdiff_t>(params.swarm_size);
    std::vector<Particle> particles(params.swarm_size);
    const bool parallel = exec == Exec::Parallel;
    int bad = 0;

#pragma omp parallel for schedule(static) reduction(| : bad) if (parallel)
    for (std::ptrdiff_t i = 0; i < swarm; ++i) {
        auto &p = particles[static_cast<std::size_t>(i)];
        std::seed_seq seq{static_cast<std::uint32_t>(params.seed),
                          static_cast<std::uint32_t>(params.seed >> 32),
                          static_cast<std::uint32_t>(i)};
        p.rng.seed(seq);
        p.position.resize(dim);
        p.velocity.assign(dim, 0.0);
        p.scratch.resize(dim);
        std::uniform_real_distribution<double> angle(0.0, kTwoPi);
        std::uniform_real_distribution<double> speed(-kPi / 4.0, kPi / 4.0);
        if (static_cast<std::size_t>(i) < seeds.size()) {
            const auto &s = seeds[static_cast<std::size_t>(i)];
            for (std::size_t d = 0; d < dim; ++d)
                p.position[d] = wrap_phase(s[d]);
        } else {
            for (std::size_t d = 0; d < dim; ++d) {
                p.position[d] = angle(p.rng);
                p.velocity[d] = speed(p.rng);
            }
        }
        if (!evaluate(objective, project, p))
            bad |= 1;
    }
    if (bad)
        throw_non_finite();

    std::size_t leader = 0;
    for (std::size_t i = 1; i < particles.size(); ++i)
        if (particles[i].best_value < particles[leader].best_value)
            leader = i;
    std::vector<double> global_best = particles[leader].best_position;
    double global_value = particles[leader].best_value;

    PsoResult result;
    result.trace.reserve(params.iterations);
    const double w = params.inertia;
    const double c1 = params.cognitive;
    const double c2 = params.social;
    constexpr double kUnit = 1.0 / 4294967296.0;

    for (std::size_t it = 0; it < params.iterations; ++it) {
#pragma omp parallel for schedule(static) reduction(| : bad) if (parallel)
        for (std::ptrdiff_t i = 0; i < swarm; ++i) {
            auto &p = particles[static_cast<std::size_t>(i)];
            for (std::size_t d = 0; d < dim; ++d) {
                const std::uint64_t bits = p.rng();
                const double r1 = static_cast<double>(bits >> 32) * kUnit;
                const double r2 = static_cast<double>(bits & 0xffffffffULL) * kUnit;
                const double x = p.position[d];
                double v = w * p.velocity[d] + c1 * r1 * arc(p.best_position[d], x) +
                           c2 * r2 * arc(global_best[d], x);
                v = std::clamp(v, -kVelocityClamp, kVelocityClamp);
                p.velocity[d] = v;
                double nx = x + v;
                nx += (nx < 0.0 ? kTwoPi : 0.0) - (nx >= kTwoPi ? kTwoPi : 0.0);
                p.position[d] = nx < kTwoPi ? nx : 0.0;
            }
            if (!evaluate(objective, project, p))
                bad |= 1;
        }
        if (bad)
            throw_non_finite();
        for (const auto &p : particles) {
            if (p.best_value < global_value) {
                global_value = p.best_value;
                global_best = p.best_position;
            }
        }
        result.trace.push_back(global_value);
    }

    result.best_phases.resize(dim);
    project(global_best, result.best_phases);
    result.best_value = global_value;
    return result;
}

BruteForceResult brute_force(const PhaseObjective &objective, const PhaseDomain &domain,
                             std::size_t max_configs) {
    domain.validate();
    if (!domain.bits)
        throw std::invalid_argument("exhaustive search needs a discrete phase domain");
    const unsigned bits = *domain.bits;
    const double total_bits = static_cast<double>(bits) * static_cast<double>(domain.dimension);
    if (total_bits >= 63.0 || (std::size_t{1} << static_cast<unsigned>(total_bits)) > max_configs)
        throw OptimizationError("phase domain too large for exhaustive search (" +
                                std::to_string(bits) + " bits x " +
                                std::to_string(domain.dimension) + " elements)");
    const std::size_t levels = std::size_t{1} << bits;
    const std::size_t configs = std::size_t{1} << static_cast<unsigned>(total_bits);
    const double step = kTwoPi / static_cast<double>(levels);

    std::vector<std::size_t> digits(domain.dimension, 0);
    std::vector<double> phases(domain.dimension, 0.0);
    BruteForceResult best;
    best.best_value = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < configs; ++c) {
        for (std::size_t d = 0; d < domain.dimension; ++d)
            phases[d] = static_cast<double>(digits[d]) * step;
        const double v = objective(phases);
        if (!std::isfinite(v))
            throw_non_finite();
        if (v < best.best_value) {
            best.best_value = v;
            best.best_phases = phases;
        }
        ++best.evaluated;
        // Odometer with the first dimension most significant.
        for (std::size_t d = domain.dimension; d-- > 0;) {
            if (++digits[d] < levels)
                break;
            digits[d] = 0;
        }
    }
    return best;
}

cd element_weight(WeightResponse response, double phase) {
    return response == WeightResponse::UnitModulus ? std::polar(1.0, phase)
                                                   : lorentzian_weight(phase);
}

LinearGainObjective::LinearGainObjective(std::vector<cd> coefficients, WeightResponse response,
                                         std::optional<unsigned> bits)
    : coefficients_(std::move(coefficients)), response_(response), bits_(bits) {
    if (bits_) {
        if (*bits_ < 1 || *bits_ > 16)
            throw std::invalid_argument("lookup resolution must be between 1 and 16 bits");
        const std::size_t levels = std::size_t{1} << *bits_;
        table_.resize(levels);
        for (std::size_t k = 0; k < levels; ++k)
            table_[k] = element_weight(response_, kTwoPi * static_cast<double>(k) /
                                                      static_cast<double>(levels));
    }
}

cd LinearGainObjective::channel(std::span<const double> phases) const {
    if (phases.size() != coefficients_.size())
        throw std::invalid_argument("phase count does not match coefficient count");
    ComplexCompensatedSum acc;
    if (bits_) {
        // Phases are grid points in [0, 2 pi), so rounding half up recovers the index.
        const double inv_step = static_cast<double>(table_.size()) / kTwoPi;
        const std::size_t mask = table_.size() - 1;
        for (std::size_t i = 0; i < phases.size(); ++i) {
            const auto k = static_cast<std::size_t>(phases[i] * inv_step + 0.5) & mask;
            const cd &c = coefficients_[i];
            const cd &t = table_[k];
            acc.add({c.real() * t.real() - c.imag() * t.imag(),
                     c.real() * t.imag() + c.imag() * t.real()});
        }
    } else {
        for (std::size_t i = 0; i < phases.size(); ++i)
            acc.add(coefficients_[i] * element_weight(response_, phases[i]));
    }
    return acc.value();
}

double LinearGainObjective::operator()(std::span<const double> phases) const {
    return -std::norm(channel(phases));
}

std::vector<double> lorentzian_alignment_phases(std::span<const cd> coefficients) {
    ComplexCompensatedSum total;
    for (const auto &c : coefficients)
        total.add(c);
    const cd anchor = cd{0.0, 1.0} * total.value();
    const double target = std::abs(anchor) > 0.0 ? std::arg(anchor) : 0.0;
    std::vector<double> phases(coefficients.size());
    for (std::size_t i = 0; i < phases.size(); ++i)
        phases[i] = wrap_phase(target - std::arg(coefficients[i]));
    return phases;
}

PhaseSolution optimize_phases(std::span<const cd> coefficients, WeightResponse response,
                              std::optional<unsigned> bits, const PsoParams &params,
                              Exec exec) {
    if (coefficients.empty())
        throw std::invalid_argument("no tunable elements");
    std::vector<double> closed_form;
    if (response == WeightResponse::UnitModulus) {
        closed_form.resize(coefficients.size());
        for (std::size_t i = 0; i < coefficients.size(); ++i)
            closed_form[i] = wrap_phase(-std::arg(coefficients[i]));
    } else {
        closed_form = lorentzian_alignment_phases(coefficients);
    }

    LinearGainObjective objective({coefficients.begin(), coefficients.end()}, response, bits);
    if (!bits) {
        const cd h = objective.channel(closed_form);
        return {std::move(closed_form), h, {}};
    }
    const std::vector<double> seeds[1] = {quantize_phases(closed_form, *bits)};
    PsoResult r = pso_minimize(std::cref(objective), PhaseDomain::discrete(coefficients.size(), *bits),
                               params, seeds, exec);
    const cd h = objective.channel(r.best_phases);
    return {std::move(r.best_phases), h, std::move(r.trace)};
}

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

OptimizedArchitecture optimize_architecture(EtArchitecture arch, double target_power,
                                            const Vec3 &point, double wavelength,
                                            const PsoParams &params, double rx_gain,
                                            Exec exec) {
    OptimizedArchitecture out;
    std::visit(overloaded{
                   [&](FullyDigital &a) {
                       const auto h = array_to_point_channel(a.array, point, rx_gain, wavelength, exec);
                       a.precoder = mrt_precoder(h);
                       out.channel = weighted_sum(h.coefficients, a.precoder);
                   },
                   [&](RisBased &a) {
                       const RisHops hops = ris_hops(a.feeder, a.ris, point, rx_gain, wavelength, exec);
                       std::vector<cd> c(hops.incident.size());
                       for (std::size_t n = 0; n < c.size(); ++n)
                           c[n] = hops.incident[n] * hops.reflected[n];
                       PhaseSolution s = optimize_phases(c, WeightResponse::UnitModulus,
                                                         a.phase_bits, params, exec);
                       a.phases = std::move(s.phases);
                       out.channel = cascaded_ris_channel(hops.incident, hops.reflected, a.phases);
                       out.trace = std::move(s.trace);
                   },
                   [&](DmaBased &a) {
                       const auto c = dma_element_coefficients(a.dma, point, rx_gain, wavelength, exec);
                       PhaseSolution s = optimize_phases(c, WeightResponse::Lorentzian,
                                                         a.phase_bits, params, exec);
                       a.lorentzian_phases = std::move(s.phases);
                       out.channel = s.channel;
                       out.trace = std::move(s.trace);
                   }},
               arch.variant);
    out.transmit_power = required_transmit_power(out.channel, target_power);
    arch.rf_chain_power = out.transmit_power;
    out.arch = std::move(arch);
    return out;
}

} // namespace nfwpt
