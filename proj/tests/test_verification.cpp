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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "squidgate/verification.hpp"

using namespace squidgate;

namespace {

constexpr double kPi = std::numbers::pi;

// Reference value from an independent dense-exponential Liouvillian
// computation at the default device parameters.
constexpr double kReferenceChannelFidelity = 0.9937240621044492;

Matrix diag4(cplx a, cplx b, cplx c, cplx d) {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return m;
}

} // namespace

TEST(ComputationalPropagator, EmptyScheduleIsIdentity) {
    const auto cp = computational_propagator(PulseSchedule{}, SpaceLayout(2, 2));
    EXPECT_EQ(cp.u, Matrix(Matrix::Identity(4, 4)));
    for (double l : cp.leakage) EXPECT_EQ(l, 0.0);
}

TEST(ComputationalPropagator, RejectsForeignSquids) {
    const SpaceLayout l(3, 2);
    EXPECT_THROW((void)computational_propagator(qcpg_schedule(1, 2, GateParams{}), l),
                 std::invalid_argument);
    EXPECT_THROW((void)computational_propagator(PulseSchedule{}, l, 0, 0),
                 std::invalid_argument);
}

TEST(TruthTable, DefaultGateIsCz) {
    const auto cp = computational_propagator(qcpg_schedule(0, 1, GateParams{}),
                                             SpaceLayout(2, 2));
    const auto r = truth_table(cp);
    EXPECT_TRUE(r.pass);
    EXPECT_LE(r.max_entry_error, 1e-9);
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j)
            if (i != j) EXPECT_LE(std::abs(r.u(i, j)), 1e-9);
    EXPECT_NEAR(r.phases[0], 0.0, 1e-9);
    EXPECT_NEAR(r.phases[1], 0.0, 1e-9);
    EXPECT_NEAR(r.phases[2], 0.0, 1e-9);
    EXPECT_NEAR(std::abs(r.phases[3]), kPi, 1e-9);
    for (double l : r.leakage) EXPECT_LE(l, 1e-10);
    EXPECT_NEAR(r.average_fidelity, 1.0, 1e-12);
}

TEST(TruthTable, DoubledCavityTimeLosesSign) {
    GateParams p;
    p.cavity_time *= 2.0;
    const auto cp = computational_propagator(qcpg_schedule(0, 1, p), SpaceLayout(2, 2));
    EXPECT_LE((cp.u - Matrix(Matrix::Identity(4, 4))).cwiseAbs().maxCoeff(), 1e-9);
    const auto r = truth_table(cp);
    EXPECT_FALSE(r.pass);
    EXPECT_NEAR(r.max_entry_error, 2.0, 1e-9);
}

TEST(TruthTable, LeakPlusKeptIsOne) {
    GateParams p;
    p.ratio = 1.3;
    const auto cp = computational_propagator(qcpg_schedule(0, 1, p), SpaceLayout(2, 2));
    for (Eigen::Index j = 0; j < 4; ++j) {
        EXPECT_NEAR(cp.u.col(j).squaredNorm() + cp.leakage[static_cast<std::size_t>(j)],
                    1.0, 1e-12);
    }
    EXPECT_FALSE(truth_table(cp).pass);
}

TEST(TruthTable, GlobalPhaseIsRemoved) {
    ComputationalPropagator cp;
    const cplx ph = std::polar(1.0, 0.7);
    cp.u = ph * ideal_cz();
    const auto r = truth_table(cp);
    EXPECT_GT(r.max_entry_error, 0.1);
    EXPECT_LE(r.phase_normalized_error, 1e-14);
    EXPECT_NEAR(r.average_fidelity, 1.0, 1e-14);
}

TEST(AverageGateFidelity, KnownValues) {
    const Matrix cz = ideal_cz();
    EXPECT_NEAR(average_gate_fidelity(cz, cz), 1.0, 1e-15);
    EXPECT_NEAR(average_gate_fidelity(std::polar(1.0, kPi / 7) * cz, cz), 1.0, 1e-15);
    // M = CZ: Tr M = 2, Tr M M^dag = 4, so (4 + 4) / 20.
    EXPECT_NEAR(average_gate_fidelity(Matrix::Identity(4, 4), cz), 0.4, 1e-15);
    // Pure loss of one column: Tr M M^dag = 3, Tr M = 3.
    EXPECT_NEAR(average_gate_fidelity(diag4(1, 1, 1, 0), Matrix::Identity(4, 4)),
                12.0 / 20.0, 1e-15);
    EXPECT_THROW((void)average_gate_fidelity(Matrix::Identity(3, 3), cz),
                 std::invalid_argument);
}

TEST(AverageGateFidelity, DiagonalPhaseFormula) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = u(rng), b = u(rng), c = u(rng), d = u(rng), g = u(rng);
        const Matrix m = diag4(std::polar(1.0, a), std::polar(1.0, b),
                               std::polar(1.0, c), std::polar(1.0, d));
        const cplx tr = std::polar(1.0, a) + std::polar(1.0, b) +
                        std::polar(1.0, c) + std::polar(1.0, d);
        const double expect = (4.0 + std::norm(tr)) / 20.0;
        EXPECT_NEAR(average_gate_fidelity(m, Matrix::Identity(4, 4)), expect, 1e-13);
        EXPECT_NEAR(average_gate_fidelity(std::polar(1.0, g) * m, Matrix::Identity(4, 4)),
                    expect, 1e-13);
    }
}

TEST(StateFidelity, Basics) {
    const SpaceLayout l(2, 1);
    const auto a = CompositeState::basis(l, {0, 1, 0});
    const auto b = CompositeState::basis(l, {1, 1, 0});
    EXPECT_EQ(state_fidelity(a, a), 1.0);
    EXPECT_EQ(state_fidelity(a, b), 0.0);
    EXPECT_THROW((void)state_fidelity(a, CompositeState::basis(SpaceLayout(2, 2), {0, 1, 0})),
                 std::invalid_argument);
    const CompositeState twice(l, 2.0 * a.amplitudes());
    EXPECT_THROW((void)state_fidelity(a, twice), std::invalid_argument);
}

TEST(Populations, CavityAndExcited) {
    const SpaceLayout l(2, 2);
    EXPECT_EQ(cavity_vacuum_population(CompositeState::basis(l, {0, 0, 1})), 0.0);
    EXPECT_EQ(cavity_vacuum_population(CompositeState::basis(l, {1, 0, 0})), 1.0);
    EXPECT_EQ(excited_population(CompositeState::basis(l, {2, 0, 0})), 1.0);
    EXPECT_EQ(excited_population(CompositeState::basis(l, {0, 2, 0})), 1.0);
    EXPECT_EQ(excited_population(CompositeState::basis(l, {1, 1, 0})), 0.0);
}

TEST(Populations, MidGateVacuum) {
    // |c001|^2 = (omega1 / Omega)^2 sin^2(Omega t); omega1 t = 0.3 and
    // Omega = 2 omega1 leaves 1 - sin^2(0.6) / 4 in the vacuum.
    const SpaceLayout l(2, 2);
    const double w1 = 1.8e8;
    const auto h = cavity_coupling_hamiltonian(
        l, CavityCouplingSpec{0, 1, w1, std::sqrt(3.0) * w1});
    auto psi = CompositeState::basis(l, {1, 0, 0});
    apply_local_inplace(psi, propagator(h, 0.3 / w1).unitary);
    const double expect = 1.0 - 0.25 * std::pow(std::sin(0.6), 2);
    EXPECT_NEAR(cavity_vacuum_population(psi), expect, 1e-12);
    EXPECT_NEAR(cavity_vacuum_population(psi), 0.9202947193095842, 1e-12);

    auto half = CompositeState::basis(l, {1, 0, 0});
    apply_local_inplace(half, propagator(h, 0.5 * kPi / w1).unitary);
    EXPECT_NEAR(cavity_vacuum_population(half), 1.0, 1e-12);
}

TEST(Stabilizers, OracleSatisfiesAllGenerators) {
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto r = stabilizer_expectations(cluster_state_oracle(n), n);
        ASSERT_EQ(r.expectations.size(), n);
        for (double e : r.expectations) EXPECT_NEAR(e, 1.0, 1e-12) << n;
        EXPECT_LE(r.max_imaginary, 1e-12);
        EXPECT_TRUE(r.warnings.empty());
    }
}

TEST(Stabilizers, ProductStateFails) {
    // |+>|+>: <X1 Z2> = <X><Z> = 0.
    const SpaceLayout l(2, 1);
    const double h = 0.5;
    Vector v = Vector::Zero(static_cast<Eigen::Index>(l.dim()));
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            v(static_cast<Eigen::Index>(l.index_of({a, b, 0}))) = h;
    const auto r = stabilizer_expectations(CompositeState(l, v), 2);
    EXPECT_NEAR(r.expectations[0], 0.0, 1e-15);
    EXPECT_NEAR(r.expectations[1], 0.0, 1e-15);
}

TEST(Stabilizers, ErrorsAndWarnings) {
    const auto s = cluster_state_oracle(3);
    EXPECT_THROW((void)stabilizer_expectations(s, 2), std::invalid_argument);
    EXPECT_THROW((void)stabilizer_generator(s.layout(), 3), std::out_of_range);
    const SpaceLayout l(2, 1);
    const auto r = stabilizer_expectations(CompositeState::basis(l, {2, 0, 1}), 2);
    EXPECT_EQ(r.warnings.size(), 2u);
}

TEST(Stabilizers, GeneratorsAreHermitianAndSquareToOne) {
    const SpaceLayout l(4, 1);
    for (std::size_t i = 0; i < 4; ++i) {
        const auto k = stabilizer_generator(l, i);
        EXPECT_TRUE(k.is_hermitian());
        const Matrix m = k.matrix();
        EXPECT_LE((m * m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(ChannelFidelity, ClosedSystemIsUnity) {
    const SpaceLayout l(2, 2);
    const auto r = channel_average_fidelity(qcpg_schedule(0, 1, GateParams{}), l, {},
                                            ideal_cz());
    EXPECT_GE(r.average_fidelity, 1.0 - 1e-8);
    EXPECT_LE(r.trace_defect, 1e-8);
}

TEST(ChannelFidelity, DefaultDeviceMatchesReference) {
    const SpaceLayout l(2, 2);
    const auto c = collapse_operators(l, FeasibilityParams{});
    const auto r = channel_average_fidelity(qcpg_schedule(0, 1, GateParams{}), l, c,
                                            ideal_cz());
    EXPECT_NEAR(r.average_fidelity, kReferenceChannelFidelity, 1e-9);
    EXPECT_LE(r.trace_defect, 1e-8);
    EXPECT_LE(r.hermiticity_defect, 1e-10);
    EXPECT_GE(r.min_eigenvalue, -1e-8);
}

TEST(ChannelFidelity, StrongerDecayLowersFidelity) {
    const SpaceLayout l(2, 2);
    FeasibilityParams p;
    p.quality_factor /= 1000.0;
    const auto r = channel_average_fidelity(qcpg_schedule(0, 1, GateParams{}), l,
                                            collapse_operators(l, p), ideal_cz());
    EXPECT_LT(r.average_fidelity, kReferenceChannelFidelity - 1e-3);
    EXPECT_GE(r.min_eigenvalue, -1e-8);
    EXPECT_LE(r.trace_defect, 1e-8);
}

TEST(ChannelFidelity, Errors) {
    const SpaceLayout l(2, 2);
    EXPECT_THROW((void)channel_average_fidelity(PulseSchedule{}, l, {}, Matrix::Identity(3, 3)),
                 std::invalid_argument);
}
