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
 * Time evolution: exact segment propagators, pure-state schedule execution,
 * the analytic single-excitation solution of the two-SQUID coupling, and a
 * fixed-step RK4 Lindblad integrator for the open-system study.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "schedule.hpp"

namespace squidgate {

/// exp(-i H t) on the sites of the generating segment.
struct SegmentPropagator {
    LocalOperator unitary;
    double duration;
};

[[nodiscard]] inline double unitarity_defect(const Matrix &u) {
    const auto n = u.rows();
    return (u.adjoint() * u - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

/// exp(-i H t) through the eigendecomposition of the Hermitian matrix H t.
[[nodiscard]] inline SegmentPropagator propagator(const LocalOperator &h,
                                                  double t) {
    if (!h.is_hermitian()) {
        throw std::invalid_argument("propagator: generator is not marked "
                                    "Hermitian");
    }
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("propagator: duration must be finite and "
                                    "non-negative");
    }
    const auto n = static_cast<Eigen::Index>(h.dim());
    if (t == 0.0) {
        return {h.with_matrix(Matrix::Identity(n, n)), t};
    }
    const Matrix ht = h.matrix() * t;
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (ht + ht.adjoint()));
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("propagator: eigendecomposition failed");
    }
    const Vector phases = es.eigenvalues().unaryExpr(
        [](double l) { return std::exp(cplx{0.0, -l}); });
    const Matrix &v = es.eigenvectors();
    Matrix u = v * phases.asDiagonal() * v.adjoint();
    return {h.with_matrix(std::move(u)), t};
}

namespace detail {
inline constexpr double kNormTol = 1e-10;
} // namespace detail

/// Applies one segment to `state` in place.
inline void evolve_segment(CompositeState &state, const Segment &seg) {
    const auto h = segment_hamiltonian(state.layout(), seg);
    const double before = state.norm();
    apply_local_inplace(state, propagator(h, duration_of(seg)).unitary);
    if (std::abs(state.norm() - before) > detail::kNormTol) {
        throw std::runtime_error("evolve_segment: norm drifted by " +
                                 std::to_string(state.norm() - before));
    }
}

/**
 * Runs every segment in order. `observer`, if given, is called after each
 * segment with the segment index and the current state.
 */
[[nodiscard]] inline CompositeState evolve_pure(
    CompositeState state, const PulseSchedule &schedule,
    const std::function<void(std::size_t, const CompositeState &)> &observer =
        {}) {
    if (schedule.squids_required() > state.layout().n_squids()) {
        throw std::invalid_argument("evolve_pure: schedule addresses SQUID " +
                                    std::to_string(schedule.squids_required() - 1) +
                                    " outside the layout");
    }
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        evolve_segment(state, schedule.segments()[k]);
        if (observer) {
            observer(k, state);
        }
    }
    return state;
}

/// Amplitudes of |1,0,0>, |0,1,0>, |0,0,1> (SQUID a, SQUID b, photons).
struct SingleExcitationAmplitudes {
    cplx c100;
    cplx c010;
    cplx c001;

    [[nodiscard]] double norm_squared() const {
        return std::norm(c100) + std::norm(c010) + std::norm(c001);
    }
};

/**
 * Closed-form evolution of |1>_a|0>_b|0> under the two-SQUID coupling,
 * with Omega = sqrt(omega1^2 + omega2^2):
 *   c100 = (omega1^2 cos(Omega t) + omega2^2) / Omega^2
 *   c010 = omega1 omega2 (cos(Omega t) - 1) / Omega^2
 *   c001 = -i (omega1 / Omega) sin(Omega t)
 */
[[nodiscard]] inline SingleExcitationAmplitudes
single_excitation_closed_form(double omega1, double omega2, double t) {
    if (!(omega1 > 0.0)) {
        throw std::invalid_argument("single_excitation_closed_form: omega1 must "
                                    "be positive");
    }
    const double w2 = omega1 * omega1 + omega2 * omega2;
    const double w = std::sqrt(w2);
    const double c = std::cos(w * t);
    const double s = std::sin(w * t);
    return {cplx{(omega1 * omega1 * c + omega2 * omega2) / w2, 0.0},
            cplx{omega1 * omega2 * (c - 1.0) / w2, 0.0},
            cplx{0.0, -omega1 / w * s}};
}

/**
 * Right-hand side of the Lindblad equation on the full register,
 *   d rho/dt = -i (H_eff rho - rho H_eff^dag) + sum_k L_k rho L_k^dag,
 * with H_eff = H - (i/2) sum_k L_k^dag L_k, stored as a sparse superoperator
 * on column-major vec(rho): vec(A rho B) = (B^T kron A) vec(rho).
 */
class LindbladGenerator {
  public:
    using Sparse = Eigen::SparseMatrix<cplx>;

    static constexpr std::size_t kMaxDim = 1000;

    LindbladGenerator(const SpaceLayout &layout, const LocalOperator &h,
                      std::span<const LocalOperator> collapse)
        : dim_(layout.dim()) {
        if (dim_ > kMaxDim) {
            throw std::invalid_argument(
                "LindbladGenerator: register dimension " + std::to_string(dim_) +
                " exceeds " + std::to_string(kMaxDim));
        }
        if (!h.is_hermitian()) {
            throw std::invalid_argument("LindbladGenerator: Hamiltonian is not "
                                        "marked Hermitian");
        }
        const Matrix hf = embed(layout, h);
        {
            Eigen::SelfAdjointEigenSolver<Matrix> es(hf, Eigen::EigenvaluesOnly);
            scale_ = es.eigenvalues().cwiseAbs().maxCoeff();
        }
        const auto n = static_cast<Eigen::Index>(dim_);
        const Matrix id = Matrix::Identity(n, n);
        Matrix heff = hf;
        std::vector<Eigen::Triplet<cplx>> trip;
        for (const auto &l : collapse) {
            const Matrix lf = embed(layout, l);
            const Matrix ldl = lf.adjoint() * lf;
            heff -= cplx{0.0, 0.5} * ldl;
            scale_ += 0.5 * ldl.cwiseAbs().rowwise().sum().maxCoeff();
            add_kron(trip, lf.conjugate(), lf, 1.0);
        }
        add_kron(trip, id, heff, cplx{0.0, -1.0});
        add_kron(trip, heff.conjugate(), id, cplx{0.0, 1.0});
        super_.resize(n * n, n * n);
        super_.setFromTriplets(trip.begin(), trip.end());
        super_.makeCompressed();
    }

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    /// Upper bound on the fastest rate in the generator (1/s).
    [[nodiscard]] double spectral_scale() const noexcept { return scale_; }

    /// Largest allowed fixed step: 1 / (50 * spectral_scale).
    [[nodiscard]] double max_step() const noexcept {
        return scale_ > 0.0 ? 1.0 / (50.0 * scale_)
                            : std::numeric_limits<double>::infinity();
    }

    [[nodiscard]] const Sparse &superoperator() const noexcept { return super_; }

    [[nodiscard]] Matrix derivative(const Matrix &rho) const {
        const auto n = static_cast<Eigen::Index>(dim_);
        const Eigen::Map<const Vector> v(rho.data(), n * n);
        Vector dv = super_ * v;
        return Eigen::Map<const Matrix>(dv.data(), n, n);
    }

    /// Scratch space for step(); one per integrating thread.
    struct Workspace {
        Matrix k1, k2, k3, k4, tmp;
    };

    /// One classical fourth-order Runge-Kutta step on a block of vec(rho)
    /// columns.
    void step(Matrix &block, double dt, Workspace &w) const {
        w.k1.noalias() = super_ * block;
        w.tmp = block + (0.5 * dt) * w.k1;
        w.k2.noalias() = super_ * w.tmp;
        w.tmp = block + (0.5 * dt) * w.k2;
        w.k3.noalias() = super_ * w.tmp;
        w.tmp = block + dt * w.k3;
        w.k4.noalias() = super_ * w.tmp;
        block += (dt / 6.0) * (w.k1 + 2.0 * w.k2 + 2.0 * w.k3 + w.k4);
    }

    /**
     * Integrates every column of `block` (each a column-major vec(rho)) for
     * `t_total` with equal steps no longer than `dt`.
     */
    void integrate_block(Matrix &block, double t_total, double dt) const {
        if (!(dt > 0.0) || !(t_total >= 0.0)) {
            throw std::invalid_argument("LindbladGenerator: need dt > 0 and "
                                        "t_total >= 0");
        }
        if (block.rows() != super_.cols()) {
            throw std::invalid_argument("LindbladGenerator: block has wrong "
                                        "row count");
        }
        if (dt > max_step() * (1.0 + 1e-12)) {
            throw std::invalid_argument(
                "LindbladGenerator: step " + std::to_string(dt) +
                " s exceeds the stability bound " + std::to_string(max_step()) +
                " s");
        }
        const auto steps =
            static_cast<std::size_t>(std::ceil(t_total / dt - 1e-9));
        if (steps == 0) {
            return;
        }
        const double h = t_total / static_cast<double>(steps);
        Workspace w;
        for (std::size_t i = 0; i < steps; ++i) {
            step(block, h, w);
        }
    }

    void integrate(Matrix &rho, double t_total, double dt) const {
        const auto n = static_cast<Eigen::Index>(dim_);
        if (rho.rows() != n || rho.cols() != n) {
            throw std::invalid_argument("LindbladGenerator: density matrix has "
                                        "wrong size");
        }
        Matrix block = Eigen::Map<const Matrix>(rho.data(), n * n, 1);
        integrate_block(block, t_total, dt);
        rho = Eigen::Map<const Matrix>(block.data(), n, n);
    }

  private:
    /// Appends the nonzeros of coeff * (a kron b).
    static void add_kron(std::vector<Eigen::Triplet<cplx>> &trip,
                         const Matrix &a, const Matrix &b, cplx coeff) {
        const auto n = b.rows();
        for (Eigen::Index ac = 0; ac < a.cols(); ++ac)
            for (Eigen::Index ar = 0; ar < a.rows(); ++ar) {
                const cplx x = coeff * a(ar, ac);
                if (x == cplx{}) continue;
                for (Eigen::Index bc = 0; bc < b.cols(); ++bc)
                    for (Eigen::Index br = 0; br < b.rows(); ++br) {
                        const cplx y = b(br, bc);
                        if (y != cplx{}) {
                            trip.emplace_back(ar * n + br, ac * n + bc, x * y);
                        }
                    }
            }
    }

    std::size_t dim_;
    double scale_{0.0};
    Sparse super_;
};

[[nodiscard]] inline DensityMatrix full_density(const SpaceLayout &layout,
                                                Matrix rho) {
    DensityMatrix dm;
    for (std::size_t s = 0; s < layout.num_factors(); ++s) {
        dm.sites.push_back(s);
        dm.dims.push_back(layout.local_dim(s));
    }
    dm.rho = std::move(rho);
    return dm;
}

/// Lindblad evolution of a whole-register density matrix under a fixed H.
[[nodiscard]] inline DensityMatrix
evolve_lindblad(const DensityMatrix &rho0, const SpaceLayout &layout,
                const LocalOperator &h, std::span<const LocalOperator> collapse,
                double t_total, double dt) {
    if (static_cast<std::size_t>(rho0.rho.rows()) != layout.dim() ||
        rho0.rho.rows() != rho0.rho.cols()) {
        throw std::invalid_argument("evolve_lindblad: density matrix does not "
                                    "span the layout");
    }
    const LindbladGenerator gen(layout, h, collapse);
    Matrix rho = rho0.rho;
    gen.integrate(rho, t_total, dt);
    return full_density(layout, std::move(rho));
}

/// Number of RK4 steps per segment used when no explicit step is given.
inline constexpr std::size_t kDefaultStepsPerSegment = 2000;

/**
 * Runs a pulse schedule on a batch of operators (density matrices or
 * coherences |i><j|) under the same jump operators. Each segment uses
 * step min(duration / kDefaultStepsPerSegment, dt) where dt <= 0 means
 * "default only".
 */
inline void evolve_lindblad_schedule(std::span<Matrix> batch,
                                     const SpaceLayout &layout,
                                     const PulseSchedule &schedule,
                                     std::span<const LocalOperator> collapse,
                                     double dt = 0.0) {
    for (const auto &rho : batch) {
        if (static_cast<std::size_t>(rho.rows()) != layout.dim()) {
            throw std::invalid_argument("evolve_lindblad_schedule: operator "
                                        "does not span the layout");
        }
    }
    const auto n = static_cast<Eigen::Index>(layout.dim());
    Matrix block(n * n, static_cast<Eigen::Index>(batch.size()));
    for (std::size_t c = 0; c < batch.size(); ++c) {
        block.col(static_cast<Eigen::Index>(c)) =
            Eigen::Map<const Vector>(batch[c].data(), n * n);
    }
    for (const auto &seg : schedule.segments()) {
        const double t = duration_of(seg);
        if (t == 0.0) {
            continue;
        }
        const LindbladGenerator gen(layout, segment_hamiltonian(layout, seg),
                                    collapse);
        double step = t / static_cast<double>(kDefaultStepsPerSegment);
        if (dt > 0.0) {
            step = std::min(step, dt);
        }
        gen.integrate_block(block, t, step);
    }
    for (std::size_t c = 0; c < batch.size(); ++c) {
        batch[c] = Eigen::Map<const Matrix>(
            block.col(static_cast<Eigen::Index>(c)).data(), n, n);
    }
}

} // namespace squidgate
