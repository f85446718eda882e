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
#include <numeric>
#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "squidgate/hamiltonians.hpp"
#include "squidgate/hilbert.hpp"

using namespace squidgate;

namespace {

Vector ket(std::initializer_list<cplx> v) {
    Vector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (auto x : v) out(i++) = x;
    return out;
}

Vector vac(std::size_t n_max) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(n_max + 1));
    v(0) = 1.0;
    return v;
}

Vector random_vector(std::mt19937_64 &rng, std::size_t n) {
    std::normal_distribution<double> g;
    Vector v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx{g(rng), g(rng)};
    return v.normalized();
}

Matrix random_matrix(std::mt19937_64 &rng, std::size_t n) {
    std::normal_distribution<double> g;
    Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = cplx{g(rng), g(rng)};
    return m;
}

// Test-side oracle: the full matrix written element by element from digit
// decompositions, O(i, j) = M(loc(i), loc(j)) * delta(rest(i), rest(j)).
Matrix dense_embedding(const std::vector<std::size_t> &dims,
                       const std::vector<std::size_t> &sites, const Matrix &m) {
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    auto digits = [&](std::size_t idx) {
        std::vector<std::size_t> out(dims.size());
        for (std::size_t f = dims.size(); f-- > 0;) {
            out[f] = idx % dims[f];
            idx /= dims[f];
        }
        return out;
    };
    Matrix full = Matrix::Zero(static_cast<Eigen::Index>(total),
                               static_cast<Eigen::Index>(total));
    for (std::size_t i = 0; i < total; ++i) {
        const auto di = digits(i);
        for (std::size_t j = 0; j < total; ++j) {
            const auto dj = digits(j);
            bool same_rest = true;
            for (std::size_t f = 0; f < dims.size(); ++f) {
                bool target = false;
                for (auto s : sites) target = target || s == f;
                if (!target && di[f] != dj[f]) same_rest = false;
            }
            if (!same_rest) continue;
            std::size_t li = 0, lj = 0;
            for (auto s : sites) {
                li = li * dims[s] + di[s];
                lj = lj * dims[s] + dj[s];
            }
            full(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(static_cast<Eigen::Index>(li), static_cast<Eigen::Index>(lj));
        }
    }
    return full;
}

} // namespace

TEST(SpaceLayout, DimensionAndOrdering) {
    const SpaceLayout l(2, 2);
    EXPECT_EQ(l.dim(), 27u);
    EXPECT_EQ(l.cavity_site(), 2u);
    EXPECT_EQ(l.stride(2), 1u);
    EXPECT_EQ(l.stride(1), 3u);
    EXPECT_EQ(l.stride(0), 9u);
    EXPECT_EQ(l.index_of({1, 0, 2}), 11u);
    EXPECT_EQ(SpaceLayout(3, 0).dim(), 27u);
    EXPECT_EQ(SpaceLayout(4, 4).dim(), 81u * 5u);
    EXPECT_THROW(SpaceLayout(0, 2), std::invalid_argument);
    EXPECT_THROW((void)l.local_dim(3), std::out_of_range);
}

TEST(TensorState, BasisProduct) {
    const SpaceLayout l(2, 2);
    const Vector zero = ket({1, 0, 0});
    const auto s = tensor_state(l, {zero, zero, vac(2)});
    EXPECT_EQ(s.amplitude(0), cplx(1.0));
    EXPECT_DOUBLE_EQ(s.amplitudes().tail(26).norm(), 0.0);
}

TEST(TensorState, SuperpositionProduct) {
    const SpaceLayout l(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    const auto s = tensor_state(l, {ket({r, r, 0}), ket({1, 0, 0}), vac(2)});
    EXPECT_NEAR(std::abs(s.amplitude({0, 0, 0}) - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitude({1, 0, 0}) - r), 0.0, 1e-15);
    EXPECT_NEAR(std::norm(s.amplitude({0, 0, 0})) +
                    std::norm(s.amplitude({1, 0, 0})),
                1.0, 1e-15);
}

TEST(TensorState, NormIsProductOfNorms) {
    std::mt19937_64 rng(1);
    const SpaceLayout l(3, 2);
    const auto s = tensor_state(l, {random_vector(rng, 3), random_vector(rng, 3),
                                    random_vector(rng, 3), random_vector(rng, 3)});
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
    const auto t = tensor_state(l, {2.0 * random_vector(rng, 3),
                                    random_vector(rng, 3), random_vector(rng, 3),
                                    0.5 * random_vector(rng, 3)});
    EXPECT_NEAR(t.norm(), 1.0, 1e-12);
}

TEST(TensorState, ReportsOffendingFactor) {
    const SpaceLayout l(2, 2);
    try {
        (void)tensor_state(l, {ket({1, 0, 0}), ket({1, 0}), vac(2)});
        FAIL() << "expected DimensionError";
    } catch (const DimensionError &e) {
        EXPECT_EQ(e.factor_index(), 1u);
    }
    try {
        (void)tensor_state(l, {ket({1, 0, 0}), ket({1, 0, 0}), vac(3)});
        FAIL() << "expected DimensionError";
    } catch (const DimensionError &e) {
        EXPECT_EQ(e.factor_index(), 2u);
    }
}

TEST(CompositeState, RejectsNonFinite) {
    const SpaceLayout l(1, 1);
    Vector v = Vector::Zero(6);
    v(0) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(CompositeState(l, v), std::domain_error);
    EXPECT_THROW(CompositeState(l, Vector::Zero(5)), std::invalid_argument);
}

TEST(LocalOperator, Validation) {
    const SpaceLayout l(2, 2);
    EXPECT_THROW(LocalOperator(l, {0, 0}, Matrix::Identity(9, 9)),
                 std::invalid_argument);
    EXPECT_THROW(LocalOperator(l, {3}, Matrix::Identity(3, 3)), std::out_of_range);
    EXPECT_THROW(LocalOperator(l, {0}, Matrix::Identity(4, 4)),
                 std::invalid_argument);
    Matrix nh = Matrix::Zero(3, 3);
    nh(0, 1) = 1.0;
    EXPECT_THROW(LocalOperator(l, {0}, nh, Hermiticity::Hermitian),
                 std::invalid_argument);
    EXPECT_NO_THROW(LocalOperator(l, {0}, nh));
}

TEST(ApplyLocal, IdentityIsExact) {
    std::mt19937_64 rng(2);
    const SpaceLayout l(2, 2);
    const CompositeState s(l, random_vector(rng, l.dim()));
    const auto out = apply_local(s, LocalOperator(l, {2, 0}, Matrix::Identity(9, 9)));
    EXPECT_EQ((out.amplitudes() - s.amplitudes()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(ApplyLocal, SwapOnSecondSquid) {
    const SpaceLayout l(2, 2);
    Matrix x = Matrix::Zero(3, 3);
    x(0, 1) = x(1, 0) = 1.0;
    x(2, 2) = 1.0;
    const auto out = apply_local(CompositeState::basis(l, {0, 0, 0}),
                                 LocalOperator(l, {1}, x));
    EXPECT_EQ(out.amplitude({0, 1, 0}), cplx(1.0));
    EXPECT_NEAR(out.norm(), 1.0, 0.0);
}

TEST(ApplyLocal, MatchesDenseEmbeddingOnTwoSquids) {
    std::mt19937_64 rng(3);
    const SpaceLayout l(2, 2);
    const CompositeState s(l, random_vector(rng, l.dim()));
    const Matrix m = random_matrix(rng, 9);
    const std::vector<std::size_t> sites{2, 0};
    const auto out = apply_local(s, LocalOperator(l, sites, m));
    const Vector ref = dense_embedding({3, 3, 3}, sites, m) * s.amplitudes();
    EXPECT_LE((out.amplitudes() - ref).cwiseAbs().maxCoeff(), 1e-12);
}

// Randomized: layouts up to dimension 2000, random site subsets and orders.
TEST(ApplyLocal, EmbeddingEquivalenceProperty) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const std::size_t cutoff = rng() % 4;
        const SpaceLayout l(n, cutoff);
        if (l.dim() > 2000) {
            --trial;
            continue;
        }
        std::vector<std::size_t> all(l.num_factors());
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        const std::size_t k = 1 + rng() % std::min<std::size_t>(3, all.size());
        std::vector<std::size_t> sites(all.begin(), all.begin() + k);
        std::size_t d = 1;
        std::vector<std::size_t> dims;
        for (std::size_t f = 0; f < l.num_factors(); ++f) dims.push_back(l.local_dim(f));
        for (auto s : sites) d *= l.local_dim(s);
        const Matrix m = random_matrix(rng, d);
        const CompositeState s(l, random_vector(rng, l.dim()));
        const auto out = apply_local(s, LocalOperator(l, sites, m));
        const Vector ref = dense_embedding(dims, sites, m) * s.amplitudes();
        ASSERT_LE((out.amplitudes() - ref).cwiseAbs().maxCoeff(), 1e-12)
            << "trial " << trial;
        ASSERT_LE((embed(l, LocalOperator(l, sites, m)) -
                   dense_embedding(dims, sites, m))
                      .cwiseAbs()
                      .maxCoeff(),
                  0.0);
    }
}

TEST(ApplyLocal, UnitaryPreservesNormAndMarginals) {
    std::mt19937_64 rng(5);
    const SpaceLayout l(3, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const CompositeState s(l, random_vector(rng, l.dim()));
        const Matrix u =
            Eigen::HouseholderQR<Matrix>(random_matrix(rng, 9)).householderQ();
        const auto out = apply_local(s, LocalOperator(l, {1, 3}, u));
        EXPECT_NEAR(out.norm(), 1.0, 1e-10);
        const auto before = reduced_density(s, {0, 2});
        const auto after = reduced_density(out, {0, 2});
        EXPECT_LE((before.rho - after.rho).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(ApplyLocal, RejectsForeignOperator) {
    const SpaceLayout small(2, 1);
    const SpaceLayout big(2, 2);
    const LocalOperator op(small, {2}, Matrix::Identity(2, 2));
    EXPECT_THROW((void)apply_local(CompositeState::basis(big, {0, 0, 0}), op),
                 DimensionError);
    const LocalOperator far(SpaceLayout(4, 2), {3}, Matrix::Identity(3, 3));
    EXPECT_THROW((void)apply_local(CompositeState::basis(big, {0, 0, 0}), far),
                 std::out_of_range);
}

TEST(Expectation, Projector) {
    const SpaceLayout l(1, 1);
    const LocalOperator p0(l, {0}, squid_projector(Level::Zero, Level::Zero),
                           Hermiticity::Hermitian);
    EXPECT_EQ(expectation(CompositeState::basis(l, {0, 0}), p0), cplx(1.0));
}

TEST(Expectation, ZOnPlusIsZero) {
    const SpaceLayout l(1, 1);
    const double r = 1.0 / std::sqrt(2.0);
    Matrix z = Matrix::Zero(3, 3);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    const auto plus = tensor_state(l, {ket({r, r, 0}), vac(1)});
    const cplx e = expectation(plus, LocalOperator(l, {0}, z, Hermiticity::Hermitian));
    EXPECT_NEAR(std::abs(e), 0.0, 1e-15);
}

TEST(Expectation, HermitianIsRealAndMatchesDense) {
    std::mt19937_64 rng(6);
    const SpaceLayout l(2, 2);
    const Matrix a = random_matrix(rng, 9);
    const Matrix h = a + a.adjoint();
    const CompositeState s(l, random_vector(rng, l.dim()));
    const cplx e = expectation(s, LocalOperator(l, {0, 2}, h, Hermiticity::Hermitian));
    const cplx ref = s.amplitudes().dot(dense_embedding({3, 3, 3}, {0, 2}, h) *
                                        s.amplitudes());
    EXPECT_LE(std::abs(e.imag()), 1e-12);
    EXPECT_LE(std::abs(e - ref), 1e-12);
}

TEST(ReducedDensity, ProductStateKeepsVacuum) {
    const SpaceLayout l(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    const auto s = tensor_state(l, {ket({r, r, 0}), ket({0, 1, 0}), vac(2)});
    const auto rho = reduced_density(s, {l.cavity_site()});
    EXPECT_NEAR(std::abs(rho.rho(0, 0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(rho.purity(), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0.0, 1e-12);
}

TEST(ReducedDensity, BellPairIsMaximallyMixed) {
    // (|00> + |11>)/sqrt2 reduces to diag(1/2, 1/2, 0); Tr rho^2 = 1/2.
    const SpaceLayout l(2, 1);
    Vector v = Vector::Zero(static_cast<Eigen::Index>(l.dim()));
    v(static_cast<Eigen::Index>(l.index_of({0, 0, 0}))) = 1.0 / std::sqrt(2.0);
    v(static_cast<Eigen::Index>(l.index_of({1, 1, 0}))) = 1.0 / std::sqrt(2.0);
    const auto rho = reduced_density(CompositeState(l, v), {0});
    EXPECT_NEAR(rho.purity(), 0.5, 1e-10);
    EXPECT_NEAR(rho.rho(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(rho.rho(1, 1).real(), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(rho.rho(0, 1)), 0.0, 1e-15);
}

TEST(ReducedDensity, TraceAndHermiticityProperty) {
    std::mt19937_64 rng(7);
    const SpaceLayout l(3, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const CompositeState s(l, random_vector(rng, l.dim()));
        const std::size_t a = rng() % 4;
        const std::size_t b = (a + 1 + rng() % 3) % 4;
        const auto rho = reduced_density(s, {b, a});
        EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0.0, 1e-12);
        EXPECT_LE(rho.hermiticity_defect(), 1e-12);
        EXPECT_GE(rho.min_eigenvalue(), -1e-12);
        EXPECT_LE(rho.purity(), 1.0 + 1e-12);
    }
}

TEST(ReducedDensity, KeepOrderMatters) {
    const SpaceLayout l(2, 1);
    const auto s = CompositeState::basis(l, {1, 0, 0});
    const auto ab = reduced_density(s, {0, 1});
    const auto ba = reduced_density(s, {1, 0});
    EXPECT_EQ(ab.rho(3, 3), cplx(1.0)); // |1>|0> -> index 1*3 + 0
    EXPECT_EQ(ba.rho(1, 1), cplx(1.0)); // |0>|1> -> index 0*3 + 1
}

TEST(ReducedDensity, RejectsBadSites) {
    const SpaceLayout l(2, 1);
    const auto s = CompositeState::basis(l, {0, 0, 0});
    EXPECT_THROW((void)reduced_density(s, std::span<const std::size_t>{}),
                 std::invalid_argument);
    EXPECT_THROW((void)reduced_density(s, {0, 0}), std::invalid_argument);
    EXPECT_THROW((void)reduced_density(s, {5}), std::out_of_range);
}
