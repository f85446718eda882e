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
 * Gate extraction, fidelities and cluster-state stabilizer checks.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "protocols.hpp"

namespace squidgate {

/// Ideal controlled-phase gate on |00>, |01>, |10>, |11> (control first).
[[nodiscard]] inline Matrix ideal_cz() {
    Matrix u = Matrix::Identity(4, 4);
    u(3, 3) = -1.0;
    return u;
}

/// 4x4 block of a schedule on the computational subspace of a SQUID pair.
struct ComputationalPropagator {
    Matrix u;                     ///< column j = projected output of input j
    std::array<double, 4> leakage; ///< 1 - ||column j||^2
};

namespace detail {

/// Composite index of |a>_control |b>_target, other SQUIDs in |0>, vacuum.
inline std::size_t pair_index(const SpaceLayout &layout, std::size_t control,
                              std::size_t target, std::size_t a, std::size_t b) {
    return a * layout.stride(control) + b * layout.stride(target);
}

inline void check_pair(const SpaceLayout &layout, const PulseSchedule &schedule,
                       std::size_t control, std::size_t target) {
    if (control == target || control >= layout.n_squids() ||
        target >= layout.n_squids()) {
        throw std::invalid_argument("invalid SQUID pair for gate extraction");
    }
    for (const auto &seg : schedule.segments()) {
        for (auto q : squids_of(seg)) {
            if (q != control && q != target) {
                throw std::invalid_argument(
                    "schedule touches SQUID " + std::to_string(q) +
                    " outside the extracted pair");
            }
        }
    }
}

/// Wraps an angle into (-pi, pi], sending values within 1e-12 of -pi to pi.
inline double wrap_phase(double x) {
    constexpr double pi = std::numbers::pi;
    double y = std::remainder(x, 2.0 * pi);
    if (y <= -pi + 1e-12) {
        y += 2.0 * pi;
    }
    return y;
}

} // namespace detail

[[nodiscard]] inline ComputationalPropagator
computational_propagator(const PulseSchedule &schedule, const SpaceLayout &layout,
                         std::size_t control = 0, std::size_t target = 1) {
    detail::check_pair(layout, schedule, control, target);
    ComputationalPropagator out{Matrix::Zero(4, 4), {}};
    for (std::size_t j = 0; j < 4; ++j) {
        Vector in = Vector::Zero(static_cast<Eigen::Index>(layout.dim()));
        in(static_cast<Eigen::Index>(
            detail::pair_index(layout, control, target, j / 2, j % 2))) = 1.0;
        const auto evolved = evolve_pure(CompositeState(layout, in), schedule);
        double kept = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            const cplx a = evolved.amplitude(
                detail::pair_index(layout, control, target, i / 2, i % 2));
            out.u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a;
            kept += std::norm(a);
        }
        out.leakage[j] = std::max(0.0, 1.0 - kept);
    }
    return out;
}

/**
 * Average gate fidelity of a (possibly leaky) d x d block against a target
 * unitary: (Tr(M M^dag) + |Tr M|^2) / (d (d + 1)) with M = U_ideal^dag U.
 * Reduces to (|Tr M|^2 + d) / (d (d + 1)) when U is unitary.
 */
[[nodiscard]] inline double average_gate_fidelity(const Matrix &actual,
                                                  const Matrix &ideal) {
    if (actual.rows() != ideal.rows() || actual.cols() != ideal.cols() ||
        actual.rows() != actual.cols() || actual.rows() == 0) {
        throw std::invalid_argument("average_gate_fidelity: dimension mismatch");
    }
    const auto d = static_cast<double>(actual.rows());
    const Matrix m = ideal.adjoint() * actual;
    const double f =
        ((m * m.adjoint()).trace().real() + std::norm(m.trace())) /
        (d * (d + 1.0));
    return std::clamp(f, 0.0, 1.0);
}

struct TruthTableReport {
    Matrix u;
    std::array<double, 4> phases{};  ///< relative to the reference entry
    std::array<double, 4> leakage{};
    double max_entry_error{};        ///< raw max |U - diag(1,1,1,-1)|
    double phase_normalized_error{}; ///< same after removing global phase
    double average_fidelity{};
    bool pass{};
};

/// Global phase reference: the first diagonal entry with modulus > 1e-6.
[[nodiscard]] inline TruthTableReport truth_table(const ComputationalPropagator &cp,
                                                  double entry_tol = 1e-9,
                                                  double leakage_tol = 1e-10) {
    TruthTableReport r;
    r.u = cp.u;
    r.leakage = cp.leakage;
    const Matrix ideal = ideal_cz();
    Eigen::Index ref = 0;
    while (ref < 4 && std::abs(cp.u(ref, ref)) <= 1e-6) {
        ++ref;
    }
    cplx rotate = 1.0;
    if (ref < 4) {
        rotate = std::polar(1.0, -std::arg(cp.u(ref, ref)));
    }
    for (Eigen::Index j = 0; j < 4; ++j) {
        r.phases[static_cast<std::size_t>(j)] =
            detail::wrap_phase(std::arg(cp.u(j, j) * rotate));
    }
    r.max_entry_error = (cp.u - ideal).cwiseAbs().maxCoeff();
    r.phase_normalized_error = (cp.u * rotate - ideal).cwiseAbs().maxCoeff();
    r.average_fidelity = average_gate_fidelity(cp.u, ideal);
    double max_leak = 0.0;
    for (double l : cp.leakage) {
        max_leak = std::max(max_leak, l);
    }
    r.pass = r.phase_normalized_error <= entry_tol && max_leak <= leakage_tol;
    return r;
}

/// |<psi|phi>|^2 for two normalized states on the same layout.
[[nodiscard]] inline double state_fidelity(const CompositeState &psi,
                                           const CompositeState &phi) {
    if (!(psi.layout() == phi.layout())) {
        throw std::invalid_argument("state_fidelity: layout mismatch");
    }
    for (const auto *s : {&psi, &phi}) {
        if (std::abs(s->norm() - 1.0) > 1e-8) {
            throw std::invalid_argument("state_fidelity: state not normalized");
        }
    }
    return std::norm(psi.amplitudes().dot(phi.amplitudes()));
}

/// Total probability of the cavity being empty.
[[nodiscard]] inline double cavity_vacuum_population(const CompositeState &s) {
    const auto &l = s.layout();
    double p = 0.0;
    for (std::size_t i = 0; i < l.dim(); i += l.cavity_dim()) {
        p += std::norm(s.amplitude(i));
    }
    return p;
}

/// Probability that at least one SQUID is in |e>.
[[nodiscard]] inline double excited_population(const CompositeState &s) {
    const auto &l = s.layout();
    double p = 0.0;
    for (std::size_t i = 0; i < l.dim(); ++i) {
        for (std::size_t q = 0; q < l.n_squids(); ++q) {
            if (l.digit(i, q) == index_of(Level::Excited)) {
                p += std::norm(s.amplitude(i));
                break;
            }
        }
    }
    return p;
}

/// X and Z on the qubit subspace, identity on |e>.
[[nodiscard]] inline Matrix qubit_x() {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 1) = m(1, 0) = 1.0;
    m(2, 2) = 1.0;
    return m;
}
[[nodiscard]] inline Matrix qubit_z() {
    Matrix m = Matrix::Identity(3, 3);
    m(1, 1) = -1.0;
    return m;
}

/// K_i = Z_{i-1} X_i Z_{i+1}; boundary generators drop the missing neighbour.
[[nodiscard]] inline LocalOperator stabilizer_generator(const SpaceLayout &l,
                                                        std::size_t i) {
    const std::size_t n = l.n_squids();
    if (i >= n) {
        throw std::out_of_range("stabilizer_generator: site out of range");
    }
    std::vector<std::size_t> sites;
    Matrix m = Matrix::Identity(1, 1);
    auto kron = [](const Matrix &a, const Matrix &b) {
        Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
        for (Eigen::Index r = 0; r < a.rows(); ++r)
            for (Eigen::Index c = 0; c < a.cols(); ++c)
                out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) =
                    a(r, c) * b;
        return out;
    };
    if (i > 0) {
        sites.push_back(i - 1);
        m = kron(m, qubit_z());
    }
    sites.push_back(i);
    m = kron(m, qubit_x());
    if (i + 1 < n) {
        sites.push_back(i + 1);
        m = kron(m, qubit_z());
    }
    return {l, std::move(sites), std::move(m), Hermiticity::Hermitian};
}

struct StabilizerReport {
    std::vector<double> expectations;
    double min_expectation{};
    double max_imaginary{};
    double cavity_vacuum{};
    double excited_population{};
    std::vector<std::string> warnings;
};

[[nodiscard]] inline StabilizerReport
stabilizer_expectations(const CompositeState &state, std::size_t n) {
    const auto &l = state.layout();
    if (n != l.n_squids()) {
        throw std::invalid_argument("stabilizer_expectations: N = " +
                                    std::to_string(n) + " but layout has " +
                                    std::to_string(l.n_squids()) + " SQUIDs");
    }
    StabilizerReport r;
    r.cavity_vacuum = cavity_vacuum_population(state);
    r.excited_population = excited_population(state);
    if (r.cavity_vacuum < 1.0 - 1e-8) {
        r.warnings.push_back("cavity not in vacuum: population " +
                             std::to_string(r.cavity_vacuum));
    }
    if (r.excited_population > 1e-8) {
        r.warnings.push_back("|e> population " +
                             std::to_string(r.excited_population) +
                             " exceeds 1e-8");
    }
    r.min_expectation = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const cplx e = expectation(state, stabilizer_generator(l, i));
        r.expectations.push_back(e.real());
        r.max_imaginary = std::max(r.max_imaginary, std::abs(e.imag()));
        r.min_expectation = std::min(r.min_expectation, e.real());
    }
    return r;
}

/// Open-system counterpart of the truth table.
struct ChannelFidelityReport {
    double average_fidelity{};
    double trace_defect{};       ///< max |Tr E(|i><i|) - 1|
    double hermiticity_defect{}; ///< max over diagonal inputs
    double min_eigenvalue{};     ///< min over diagonal inputs
};

/**
 * Average gate fidelity of the Lindblad channel produced by `schedule` on
 * the computational subspace of (control, target) against `ideal`:
 *   F = (sum_ij <U i| E(|i><j|) |U j> + sum_i Tr[P E(|i><i|)]) / (d (d + 1))
 * with P the projector on the computational subspace (cavity empty). Only
 * i <= j coherences are propagated; E(|j><i|) = E(|i><j|)^dag.
 */
[[nodiscard]] inline ChannelFidelityReport
channel_average_fidelity(const PulseSchedule &schedule, const SpaceLayout &layout,
                         std::span<const LocalOperator> collapse,
                         const Matrix &ideal, double dt = 0.0,
                         std::size_t control = 0, std::size_t target = 1) {
    detail::check_pair(layout, schedule, control, target);
    if (ideal.rows() != 4 || ideal.cols() != 4) {
        throw std::invalid_argument("channel_average_fidelity: ideal must be "
                                    "4x4");
    }
    const auto dim = static_cast<Eigen::Index>(layout.dim());
    std::array<Eigen::Index, 4> idx{};
    for (std::size_t j = 0; j < 4; ++j) {
        idx[j] = static_cast<Eigen::Index>(
            detail::pair_index(layout, control, target, j / 2, j % 2));
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<Matrix> batch;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i; j < 4; ++j) {
            Matrix m = Matrix::Zero(dim, dim);
            m(idx[i], idx[j]) = 1.0;
            batch.push_back(std::move(m));
            pairs.emplace_back(i, j);
        }
    }
    evolve_lindblad_schedule(batch, layout, schedule, collapse, dt);

    std::array<Vector, 4> target_vecs;
    for (std::size_t j = 0; j < 4; ++j) {
        target_vecs[j] = Vector::Zero(dim);
        for (std::size_t k = 0; k < 4; ++k) {
            target_vecs[j](idx[k]) =
                ideal(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
        }
    }
    ChannelFidelityReport r;
    r.min_eigenvalue = 1.0;
    cplx overlap = 0.0;
    double kept = 0.0;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        const Matrix &e = batch[p];
        const cplx v = target_vecs[i].dot(e * target_vecs[j]);
        overlap += (i == j) ? v : v + std::conj(v);
        if (i == j) {
            for (auto k : idx) {
                kept += e(k, k).real();
            }
            const DensityMatrix dm = full_density(layout, e);
            r.trace_defect = std::max(r.trace_defect,
                                      std::abs(dm.trace() - cplx{1.0, 0.0}));
            r.hermiticity_defect =
                std::max(r.hermiticity_defect, dm.hermiticity_defect());
            r.min_eigenvalue = std::min(r.min_eigenvalue, dm.min_eigenvalue());
        }
    }
    r.average_fidelity = (overlap.real() + kept) / 20.0;
    return r;
}

} // namespace squidgate
