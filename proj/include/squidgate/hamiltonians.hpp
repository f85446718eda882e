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
 * Interaction-picture Hamiltonians of the SQUID-cavity system and the
 * collapse operators used for the open-system runs.
 */

#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbert.hpp"

namespace squidgate {

/**
 * Resonant classical drive on one SQUID transition (a <-> b).
 *
 * The generator is H = i*rabi*e^{i phase}|a><b| - i*rabi*e^{-i phase}|b><a|.
 * At phase 0 and (a, b) = (0, 1) this is i*rabi(|0><1| - |1><0|), which
 * rotates |0> -> cos|0> - sin|1> and |1> -> cos|1> + sin|0>.
 */
struct DriveSpec {
    std::size_t target_squid{0};
    Level from{Level::Zero};
    Level to{Level::One};
    double rabi{0.0};  ///< rad/s
    double phase{0.0}; ///< rad

    void validate() const {
        if (from == to) {
            throw std::invalid_argument("DriveSpec: transition levels must "
                                        "differ");
        }
        if (!(rabi >= 0.0) || !std::isfinite(rabi)) {
            throw std::invalid_argument("DriveSpec: Rabi frequency must be "
                                        "finite and non-negative");
        }
        if (!std::isfinite(phase)) {
            throw std::invalid_argument("DriveSpec: phase must be finite");
        }
    }
};

/// Two SQUIDs resonantly coupled to the cavity on their |0> <-> |1> transition.
struct CavityCouplingSpec {
    std::size_t squid_a{0};
    std::size_t squid_b{1};
    double omega1{0.0}; ///< coupling of squid_a, rad/s
    double omega2{0.0}; ///< coupling of squid_b, rad/s

    [[nodiscard]] double omega() const { return std::hypot(omega1, omega2); }

    void validate() const {
        if (squid_a == squid_b) {
            throw std::invalid_argument("CavityCouplingSpec: squid_a == squid_b");
        }
        if (!(omega1 > 0.0) || !std::isfinite(omega1)) {
            throw std::invalid_argument("CavityCouplingSpec: omega1 must be > 0");
        }
        if (!(omega2 >= 0.0) || !std::isfinite(omega2)) {
            throw std::invalid_argument("CavityCouplingSpec: omega2 must be "
                                        ">= 0");
        }
    }
};

/**
 * Device constants for the feasibility estimate and the decoherence runs.
 * Defaults are the reference operating point: Q = 1e6, omega_c = 5e10,
 * 1/gamma_e = 2.5 us, g = 1.8e8, classical Rabi 8.5e7.
 *
 * omega_c and the couplings enter the formulas as given (k = omega_c / Q,
 * T_r = pi / g), so they are treated as angular rates.
 */
struct FeasibilityParams {
    double quality_factor{1.0e6};
    double omega_c_hz{5.0e10};
    double gamma_e_per_s{4.0e5};
    double g_hz{1.8e8};
    double omega_drive_hz{8.5e7};
    double branch_ratio_e_to_0{0.5};

    /// Cavity field decay rate k = omega_c / Q. An infinite Q gives k = 0.
    [[nodiscard]] double cavity_decay_rate() const {
        return omega_c_hz / quality_factor;
    }

    /// Rejects values that make no physical sense. With `strict`, every rate
    /// must be strictly positive (the feasibility report divides by them).
    void validate(bool strict) const {
        auto check = [&](double v, const char *name) {
            if (std::isnan(v) || v < 0.0 || (strict && !(v > 0.0))) {
                throw std::invalid_argument(
                    std::string("FeasibilityParams: ") + name +
                    (strict ? " must be positive" : " must be non-negative"));
            }
        };
        check(quality_factor, "quality_factor");
        check(omega_c_hz, "omega_c_hz");
        check(gamma_e_per_s, "gamma_e_per_s");
        check(g_hz, "g_hz");
        check(omega_drive_hz, "omega_drive_hz");
        if (!(quality_factor > 0.0)) {
            throw std::invalid_argument("FeasibilityParams: quality_factor must "
                                        "be positive");
        }
        if (!(branch_ratio_e_to_0 >= 0.0 && branch_ratio_e_to_0 <= 1.0)) {
            throw std::invalid_argument("FeasibilityParams: branch_ratio_e_to_0 "
                                        "must lie in [0, 1]");
        }
    }
};

/// Truncated annihilation operator on n_max + 1 Fock levels.
[[nodiscard]] inline Matrix annihilation(std::size_t n_max) {
    const auto d = static_cast<Eigen::Index>(n_max + 1);
    Matrix a = Matrix::Zero(d, d);
    for (Eigen::Index n = 1; n < d; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

/// |row><col| on one SQUID.
[[nodiscard]] inline Matrix squid_projector(Level row, Level col) {
    Matrix m = Matrix::Zero(kSquidDim, kSquidDim);
    m(static_cast<Eigen::Index>(index_of(row)),
      static_cast<Eigen::Index>(index_of(col))) = 1.0;
    return m;
}

[[nodiscard]] inline LocalOperator drive_hamiltonian(const SpaceLayout &layout,
                                                     const DriveSpec &spec) {
    spec.validate();
    if (spec.target_squid >= layout.n_squids()) {
        throw std::out_of_range("drive_hamiltonian: target SQUID " +
                                std::to_string(spec.target_squid) +
                                " out of range");
    }
    const cplx i{0.0, 1.0};
    const cplx up = i * spec.rabi * std::exp(i * spec.phase);
    Matrix h = up * squid_projector(spec.from, spec.to);
    h += std::conj(up) * squid_projector(spec.to, spec.from);
    return {layout, {spec.target_squid}, std::move(h), Hermiticity::Hermitian};
}

/**
 * omega1 (a^dag |0><1|_a + a |1><0|_a) + omega2 (a^dag |0><1|_b + a |1><0|_b)
 * on the sites (squid_a, squid_b, cavity). |e> of either SQUID is untouched.
 */
[[nodiscard]] inline LocalOperator
cavity_coupling_hamiltonian(const SpaceLayout &layout,
                            const CavityCouplingSpec &spec) {
    spec.validate();
    if (layout.fock_cutoff() < 1) {
        throw std::invalid_argument("cavity_coupling_hamiltonian: fock cutoff "
                                    "must be at least 1");
    }
    if (spec.squid_a >= layout.n_squids() || spec.squid_b >= layout.n_squids()) {
        throw std::out_of_range("cavity_coupling_hamiltonian: SQUID index out "
                                "of range");
    }
    const Matrix a = annihilation(layout.fock_cutoff());
    const Matrix ad = a.adjoint();
    const Matrix id3 = Matrix::Identity(kSquidDim, kSquidDim);
    const Matrix lower = squid_projector(Level::Zero, Level::One);
    const Matrix raise = squid_projector(Level::One, Level::Zero);

    // Kronecker order matches the site list (squid_a, squid_b, cavity).
    auto kron3 = [](const Matrix &x, const Matrix &y, const Matrix &z) {
        const auto dy = y.rows() * z.rows();
        Matrix yz(dy, dy);
        for (Eigen::Index r = 0; r < y.rows(); ++r)
            for (Eigen::Index c = 0; c < y.cols(); ++c)
                yz.block(r * z.rows(), c * z.cols(), z.rows(), z.cols()) =
                    y(r, c) * z;
        Matrix out(x.rows() * dy, x.cols() * dy);
        for (Eigen::Index r = 0; r < x.rows(); ++r)
            for (Eigen::Index c = 0; c < x.cols(); ++c)
                out.block(r * dy, c * dy, dy, dy) = x(r, c) * yz;
        return out;
    };

    Matrix h = spec.omega1 * (kron3(lower, id3, ad) + kron3(raise, id3, a));
    h += spec.omega2 * (kron3(id3, lower, ad) + kron3(id3, raise, a));
    return {layout,
            {spec.squid_a, spec.squid_b, layout.cavity_site()},
            std::move(h),
            Hermiticity::Hermitian};
}

/// |1><1|_a + |1><1|_b + a^dag a, conserved by the cavity coupling.
[[nodiscard]] inline LocalOperator
excitation_number(const SpaceLayout &layout, std::size_t squid_a = 0,
                  std::size_t squid_b = 1) {
    if (squid_a == squid_b || squid_a >= layout.n_squids() ||
        squid_b >= layout.n_squids()) {
        throw std::invalid_argument("excitation_number: invalid SQUID pair");
    }
    const std::size_t dc = layout.cavity_dim();
    const auto d = static_cast<Eigen::Index>(kSquidDim * kSquidDim * dc);
    Matrix n = Matrix::Zero(d, d);
    for (std::size_t la = 0; la < kSquidDim; ++la) {
        for (std::size_t lb = 0; lb < kSquidDim; ++lb) {
            for (std::size_t p = 0; p < dc; ++p) {
                const auto idx =
                    static_cast<Eigen::Index>((la * kSquidDim + lb) * dc + p);
                n(idx, idx) = static_cast<double>(
                    (la == index_of(Level::One)) + (lb == index_of(Level::One)) +
                    p);
            }
        }
    }
    return {layout,
            {squid_a, squid_b, layout.cavity_site()},
            std::move(n),
            Hermiticity::Hermitian};
}

/**
 * Lindblad jump operators: sqrt(k) a on the cavity, and on every SQUID
 * sqrt(gamma_e * r)|0><e| plus sqrt(gamma_e * (1 - r))|1><e| with r the
 * branch ratio. Operators with zero rate are omitted.
 */
[[nodiscard]] inline std::vector<LocalOperator>
collapse_operators(const SpaceLayout &layout, const FeasibilityParams &params) {
    params.validate(false);
    std::vector<LocalOperator> ops;
    const double k = params.cavity_decay_rate();
    if (k > 0.0) {
        ops.emplace_back(layout, std::vector<std::size_t>{layout.cavity_site()},
                         std::sqrt(k) * annihilation(layout.fock_cutoff()));
    }
    const double g0 = params.gamma_e_per_s * params.branch_ratio_e_to_0;
    const double g1 = params.gamma_e_per_s * (1.0 - params.branch_ratio_e_to_0);
    for (std::size_t s = 0; s < layout.n_squids(); ++s) {
        if (g0 > 0.0) {
            ops.emplace_back(layout, std::vector<std::size_t>{s},
                             std::sqrt(g0) *
                                 squid_projector(Level::Zero, Level::Excited));
        }
        if (g1 > 0.0) {
            ops.emplace_back(layout, std::vector<std::size_t>{s},
                             std::sqrt(g1) *
                                 squid_projector(Level::One, Level::Excited));
        }
    }
    return ops;
}

} // namespace squidgate
