// Copyright 2026 The squidgate Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Pulse-schedule builders for single-SQUID rotations, the three-step
 * controlled-phase gate, and linear cluster chains, plus the direct
 * amplitude formula for the chain cluster state.
 *
 * Gate recipe (control c, target t, cavity in vacuum):
 *   1. pi/2 pulse on t, |1> <-> |e>, phase chosen so |1>_t -> +|e>_t;
 *   2. cavity window with couplings omega1 (c) and ratio * omega1 (t) for
 *      omega1 * t_c = pi. |1>_c|e>_t picks up a sign, |1>_c|0>_t makes a
 *      full 2 pi cycle through the cavity, the rest is idle;
 *   3. pi/2 pulse on t, |e> -> +|1>.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "evolution.hpp"

namespace squidgate {

/// Drive phase that maps the lower level of a pi/2 pulse onto +upper.
inline constexpr double kRaisePhase = std::numbers::pi;
/// Drive phase that maps the upper level of a pi/2 pulse onto +lower.
inline constexpr double kLowerPhase = 0.0;

struct GateCondition {
    double cos_residual;   ///< |cos(omega1 t) + 1|
    double cycle_residual; ///< distance of Omega t from the nearest 2 pi k

    [[nodiscard]] bool satisfied(double tol = 1e-9) const {
        return cos_residual <= tol && cycle_residual <= tol;
    }
};

struct GateParams {
    double omega1{1.8e8};                     ///< control coupling, rad/s
    double ratio{std::numbers::sqrt3};        ///< omega2 / omega1
    double cavity_time{std::numbers::pi / 1.8e8}; ///< s
    double pulse_rabi{8.5e7};                 ///< rad/s
    double pulse1_duration{std::numbers::pi / (2.0 * 8.5e7)};
    double pulse3_duration{std::numbers::pi / (2.0 * 8.5e7)};

    /// Minimal solution omega1 t = pi, ratio = sqrt(3), pi/2 pulses.
    static GateParams standard(double omega1, double pulse_rabi) {
        GateParams p;
        p.omega1 = omega1;
        p.ratio = std::numbers::sqrt3;
        p.cavity_time = std::numbers::pi / omega1;
        p.pulse_rabi = pulse_rabi;
        p.pulse1_duration = std::numbers::pi / (2.0 * pulse_rabi);
        p.pulse3_duration = p.pulse1_duration;
        return p;
    }

    [[nodiscard]] double omega2() const { return ratio * omega1; }
    [[nodiscard]] double omega() const { return std::hypot(omega1, omega2()); }

    /// The gate is exact when cos(omega1 t) = -1 and Omega t = 0 mod 2 pi.
    [[nodiscard]] GateCondition condition() const {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        const double phase = omega() * cavity_time;
        const double cyc = phase - two_pi * std::round(phase / two_pi);
        return {std::abs(std::cos(omega1 * cavity_time) + 1.0), std::abs(cyc)};
    }

    void validate() const {
        if (!(omega1 > 0.0) || !std::isfinite(omega1)) {
            throw std::invalid_argument("GateParams: omega1 must be positive");
        }
        if (!(ratio > 0.0) || !std::isfinite(ratio)) {
            throw std::invalid_argument("GateParams: ratio must be positive");
        }
        if (!(pulse_rabi > 0.0) || !std::isfinite(pulse_rabi)) {
            throw std::invalid_argument("GateParams: pulse_rabi must be "
                                        "positive");
        }
        for (double t : {cavity_time, pulse1_duration, pulse3_duration}) {
            if (!(t >= 0.0) || !std::isfinite(t)) {
                throw std::invalid_argument("GateParams: durations must be "
                                            "finite and non-negative");
            }
        }
    }
};

/**
 * One drive segment rotating `from` <-> `to` by angle = rabi * duration:
 *   |from> -> cos|from> - e^{-i phase} sin|to>
 *   |to>   -> cos|to>   + e^{ i phase} sin|from>
 */
[[nodiscard]] inline PulseSchedule rotation_pulse(std::size_t site, Level from,
                                                  Level to, double angle,
                                                  double phase, double rabi) {
    if (from == to) {
        throw std::invalid_argument("rotation_pulse: transition levels must "
                                    "differ");
    }
    if (!(angle >= 0.0 && angle < 2.0 * std::numbers::pi)) {
        throw std::invalid_argument("rotation_pulse: angle must lie in "
                                    "[0, 2 pi)");
    }
    if (!(rabi > 0.0)) {
        throw std::invalid_argument("rotation_pulse: rabi must be positive");
    }
    PulseSchedule s;
    s.append(DriveSegment{DriveSpec{site, from, to, rabi, phase}, angle / rabi});
    return s;
}

/// pi/4 rotation on |0> <-> |1>: |1> -> (|0> + |1>)/sqrt2.
[[nodiscard]] inline PulseSchedule prepare_superposition(std::size_t site,
                                                         double rabi = 8.5e7) {
    return rotation_pulse(site, Level::Zero, Level::One, std::numbers::pi / 4.0,
                          0.0, rabi);
}

[[nodiscard]] inline PulseSchedule
qcpg_schedule(std::size_t control, std::size_t target, const GateParams &p) {
    if (control == target) {
        throw std::invalid_argument("qcpg_schedule: control and target must "
                                    "differ");
    }
    p.validate();
    PulseSchedule s;
    s.append(DriveSegment{
        DriveSpec{target, Level::One, Level::Excited, p.pulse_rabi, kRaisePhase},
        p.pulse1_duration});
    s.append(CavitySegment{CavityCouplingSpec{control, target, p.omega1,
                                              p.omega2()},
                           p.cavity_time});
    s.append(DriveSegment{
        DriveSpec{target, Level::One, Level::Excited, p.pulse_rabi, kLowerPhase},
        p.pulse3_duration});
    return s;
}

/**
 * Superposition pulses on all N SQUIDs, then gates on (i, i+1) in the
 * order given by `gate_order` (indices 0..N-2; default ascending).
 */
[[nodiscard]] inline PulseSchedule
cluster_chain_schedule(std::size_t n, const GateParams &p,
                       std::span<const std::size_t> gate_order = {}) {
    if (n < 2) {
        throw std::invalid_argument("cluster_chain_schedule: need N >= 2, got " +
                                    std::to_string(n));
    }
    std::vector<std::size_t> order(gate_order.begin(), gate_order.end());
    if (order.empty()) {
        order.resize(n - 1);
        std::iota(order.begin(), order.end(), std::size_t{0});
    }
    {
        std::vector<std::size_t> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted.size() != n - 1 || sorted[i] != i) {
                throw std::invalid_argument("cluster_chain_schedule: gate_order "
                                            "must be a permutation of 0..N-2");
            }
        }
    }
    PulseSchedule s;
    for (std::size_t i = 0; i < n; ++i) {
        s.append(prepare_superposition(i, p.pulse_rabi));
    }
    for (auto i : order) {
        s.append(qcpg_schedule(i, i + 1, p));
    }
    return s;
}

/// |1>^N with the cavity in vacuum: the starting point of a chain run.
[[nodiscard]] inline CompositeState cluster_initial_state(const SpaceLayout &l) {
    std::vector<std::size_t> digits(l.num_factors(), index_of(Level::One));
    digits.back() = 0;
    return CompositeState::basis(l, digits);
}

/**
 * Chain cluster state with the cavity in vacuum, written down directly:
 * bit string b has amplitude 2^{-N/2} (-1)^{sum_i b_i b_{i+1}}.
 */
[[nodiscard]] inline CompositeState
cluster_state_oracle(std::size_t n, std::size_t fock_cutoff = kDefaultFockCutoff) {
    if (n < 2) {
        throw std::invalid_argument("cluster_state_oracle: need N >= 2");
    }
    const SpaceLayout layout(n, fock_cutoff);
    Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.dim()));
    const double mag = std::pow(2.0, -0.5 * static_cast<double>(n));
    std::vector<std::size_t> digits(n + 1, 0);
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
        int parity = 0;
        for (std::size_t i = 0; i < n; ++i) {
            digits[i] = (bits >> (n - 1 - i)) & 1U;
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            parity ^= static_cast<int>(digits[i] & digits[i + 1]);
        }
        v(static_cast<Eigen::Index>(layout.index_of(digits))) =
            parity ? -mag : mag;
    }
    return {layout, std::move(v)};
}

} // namespace squidgate
