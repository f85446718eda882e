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
 * Tensor-product state and operator algebra for N three-level SQUIDs
 * coupled to one truncated cavity mode.
 *
 * Factor order is fixed: SQUID 0, SQUID 1, ..., SQUID N-1, cavity. A
 * composite basis index is the mixed-radix number whose digits are the
 * factor levels, with SQUID 0 the most significant digit and the cavity
 * photon number the least significant one. Every index computation in the
 * library goes through SpaceLayout::stride().
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace squidgate {

using cplx = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr std::size_t kSquidDim = 3;
inline constexpr std::size_t kDefaultFockCutoff = 2;

/// Levels of one Lambda-type SQUID; the value is the local basis index.
enum class Level : std::size_t { Zero = 0, One = 1, Excited = 2 };

inline constexpr std::size_t index_of(Level l) {
    return static_cast<std::size_t>(l);
}

/// Raised when a local factor or operator does not fit the layout.
class DimensionError : public std::invalid_argument {
  public:
    DimensionError(const std::string &what, std::size_t factor)
        : std::invalid_argument(what), factor_(factor) {}
    [[nodiscard]] std::size_t factor_index() const noexcept { return factor_; }

  private:
    std::size_t factor_;
};

class SpaceLayout {
  public:
    explicit SpaceLayout(std::size_t n_squids,
                         std::size_t fock_cutoff = kDefaultFockCutoff)
        : n_squids_(n_squids), fock_cutoff_(fock_cutoff) {
        if (n_squids == 0) {
            throw std::invalid_argument("SpaceLayout: need at least one SQUID");
        }
        strides_.assign(n_squids + 1, 1);
        for (std::size_t s = n_squids; s-- > 0;) {
            strides_[s] = strides_[s + 1] * local_dim(s + 1);
        }
        dim_ = strides_[0] * kSquidDim;
    }

    [[nodiscard]] std::size_t n_squids() const noexcept { return n_squids_; }
    [[nodiscard]] std::size_t fock_cutoff() const noexcept {
        return fock_cutoff_;
    }
    [[nodiscard]] std::size_t cavity_dim() const noexcept {
        return fock_cutoff_ + 1;
    }
    [[nodiscard]] std::size_t num_factors() const noexcept {
        return n_squids_ + 1;
    }
    /// Factor index of the cavity (always last).
    [[nodiscard]] std::size_t cavity_site() const noexcept { return n_squids_; }
    [[nodiscard]] bool is_cavity(std::size_t site) const noexcept {
        return site == n_squids_;
    }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    [[nodiscard]] std::size_t local_dim(std::size_t site) const {
        check_site(site);
        return is_cavity(site) ? cavity_dim() : kSquidDim;
    }
    [[nodiscard]] std::size_t stride(std::size_t site) const {
        check_site(site);
        return strides_[site];
    }
    [[nodiscard]] std::size_t digit(std::size_t index, std::size_t site) const {
        return (index / stride(site)) % local_dim(site);
    }

    /// Composite index of the product basis state with the given digits.
    [[nodiscard]] std::size_t
    index_of(std::span<const std::size_t> digits) const {
        if (digits.size() != num_factors()) {
            throw std::invalid_argument("SpaceLayout::index_of: need one digit "
                                        "per factor");
        }
        std::size_t idx = 0;
        for (std::size_t s = 0; s < digits.size(); ++s) {
            if (digits[s] >= local_dim(s)) {
                throw DimensionError("SpaceLayout::index_of: digit out of range",
                                     s);
            }
            idx += digits[s] * strides_[s];
        }
        return idx;
    }
    [[nodiscard]] std::size_t
    index_of(std::initializer_list<std::size_t> digits) const {
        return index_of(std::span<const std::size_t>(digits.begin(),
                                                     digits.size()));
    }

    void check_site(std::size_t site) const {
        if (site > n_squids_) {
            throw std::out_of_range("site " + std::to_string(site) +
                                    " out of range for layout with " +
                                    std::to_string(n_squids_) + " SQUIDs");
        }
    }

    bool operator==(const SpaceLayout &other) const noexcept {
        return n_squids_ == other.n_squids_ &&
               fock_cutoff_ == other.fock_cutoff_;
    }

  private:
    std::size_t n_squids_;
    std::size_t fock_cutoff_;
    std::size_t dim_{};
    std::vector<std::size_t> strides_;
};

class CompositeState {
  public:
    CompositeState(SpaceLayout layout, Vector amplitudes)
        : layout_(std::move(layout)), amps_(std::move(amplitudes)) {
        if (static_cast<std::size_t>(amps_.size()) != layout_.dim()) {
            throw std::invalid_argument(
                "CompositeState: amplitude vector has length " +
                std::to_string(amps_.size()) + ", layout needs " +
                std::to_string(layout_.dim()));
        }
        if (!amps_.allFinite()) {
            throw std::domain_error("CompositeState: non-finite amplitude");
        }
    }

    /// Product basis state; `digits` lists SQUID levels then photon number.
    static CompositeState basis(const SpaceLayout &layout,
                                std::span<const std::size_t> digits) {
        Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.dim()));
        v(static_cast<Eigen::Index>(layout.index_of(digits))) = 1.0;
        return {layout, std::move(v)};
    }
    static CompositeState basis(const SpaceLayout &layout,
                                std::initializer_list<std::size_t> digits) {
        return basis(layout, std::span<const std::size_t>(digits.begin(),
                                                          digits.size()));
    }

    [[nodiscard]] const SpaceLayout &layout() const noexcept { return layout_; }
    [[nodiscard]] const Vector &amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Vector &amplitudes() noexcept { return amps_; }
    [[nodiscard]] cplx amplitude(std::size_t index) const {
        return amps_(static_cast<Eigen::Index>(index));
    }
    [[nodiscard]] cplx amplitude(std::initializer_list<std::size_t> d) const {
        return amplitude(layout_.index_of(d));
    }
    [[nodiscard]] double norm() const { return amps_.norm(); }

  private:
    SpaceLayout layout_;
    Vector amps_;
};

/// Hermitian-ness of a LocalOperator is declared by the caller and checked.
enum class Hermiticity { Unspecified, Hermitian };

/// Relative tolerance for the Hermitian check: entries of physical
/// generators are O(1e8) rad/s, so the bound scales with the largest entry.
inline constexpr double kHermitianTol = 1e-12;

[[nodiscard]] inline double hermiticity_defect(const Matrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/**
 * Dense matrix acting on an ordered list of factors. The first listed site
 * is the most significant digit of the local index.
 */
class LocalOperator {
  public:
    LocalOperator(const SpaceLayout &layout, std::vector<std::size_t> sites,
                  Matrix matrix, Hermiticity h = Hermiticity::Unspecified)
        : sites_(std::move(sites)), matrix_(std::move(matrix)),
          hermitian_(h == Hermiticity::Hermitian) {
        if (sites_.empty()) {
            throw std::invalid_argument("LocalOperator: no sites");
        }
        std::size_t d = 1;
        for (std::size_t k = 0; k < sites_.size(); ++k) {
            layout.check_site(sites_[k]);
            for (std::size_t j = 0; j < k; ++j) {
                if (sites_[j] == sites_[k]) {
                    throw std::invalid_argument(
                        "LocalOperator: duplicate site " +
                        std::to_string(sites_[k]));
                }
            }
            dims_.push_back(layout.local_dim(sites_[k]));
            d *= dims_.back();
        }
        if (static_cast<std::size_t>(matrix_.rows()) != d ||
            static_cast<std::size_t>(matrix_.cols()) != d) {
            throw std::invalid_argument(
                "LocalOperator: matrix is " + std::to_string(matrix_.rows()) +
                "x" + std::to_string(matrix_.cols()) + ", sites need " +
                std::to_string(d));
        }
        if (hermitian_) {
            const double scale =
                std::max(1.0, matrix_.size() ? matrix_.cwiseAbs().maxCoeff()
                                             : 0.0);
            if (hermiticity_defect(matrix_) > kHermitianTol * scale) {
                throw std::invalid_argument(
                    "LocalOperator: declared Hermitian but M != M^dagger");
            }
        }
    }

    [[nodiscard]] const std::vector<std::size_t> &sites() const noexcept {
        return sites_;
    }
    [[nodiscard]] const std::vector<std::size_t> &local_dims() const noexcept {
        return dims_;
    }
    [[nodiscard]] const Matrix &matrix() const noexcept { return matrix_; }
    [[nodiscard]] bool is_hermitian() const noexcept { return hermitian_; }
    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(matrix_.rows());
    }

    /// Same sites, different matrix (e.g. the propagator of a generator).
    [[nodiscard]] LocalOperator
    with_matrix(Matrix m, Hermiticity h = Hermiticity::Unspecified) const {
        if (m.rows() != matrix_.rows() || m.cols() != matrix_.cols()) {
            throw std::invalid_argument("LocalOperator::with_matrix: size "
                                        "mismatch");
        }
        LocalOperator out = *this;
        out.matrix_ = std::move(m);
        out.hermitian_ = h == Hermiticity::Hermitian;
        return out;
    }

    /// Throws unless every site exists in `layout` with the recorded size.
    void check_layout(const SpaceLayout &layout) const {
        for (std::size_t k = 0; k < sites_.size(); ++k) {
            layout.check_site(sites_[k]);
            if (layout.local_dim(sites_[k]) != dims_[k]) {
                throw DimensionError("LocalOperator: local dimension of site " +
                                         std::to_string(sites_[k]) +
                                         " does not match layout",
                                     sites_[k]);
            }
        }
    }

  private:
    std::vector<std::size_t> sites_;
    std::vector<std::size_t> dims_;
    Matrix matrix_;
    bool hermitian_;
};

namespace detail {

/// Offsets of every local basis index and the composite indices at which
/// all target digits are zero. base + offset[l] enumerates one block.
struct BlockIndexer {
    std::vector<std::size_t> offsets;
    std::vector<std::size_t> bases;
};

inline BlockIndexer make_indexer(const SpaceLayout &layout,
                                 std::span<const std::size_t> sites) {
    BlockIndexer ix;
    std::size_t local = 1;
    for (auto s : sites) {
        local *= layout.local_dim(s);
    }
    ix.offsets.resize(local);
    for (std::size_t l = 0; l < local; ++l) {
        std::size_t rem = l;
        std::size_t off = 0;
        for (std::size_t k = sites.size(); k-- > 0;) {
            const auto d = layout.local_dim(sites[k]);
            off += (rem % d) * layout.stride(sites[k]);
            rem /= d;
        }
        ix.offsets[l] = off;
    }
    ix.bases.reserve(layout.dim() / local);
    for (std::size_t i = 0; i < layout.dim(); ++i) {
        bool zero = true;
        for (auto s : sites) {
            if (layout.digit(i, s) != 0) {
                zero = false;
                break;
            }
        }
        if (zero) {
            ix.bases.push_back(i);
        }
    }
    return ix;
}

} // namespace detail

/**
 * Product state from one local vector per factor (SQUIDs in order, cavity
 * last). A DimensionError names the first factor whose size is wrong.
 */
[[nodiscard]] inline CompositeState tensor_state(const SpaceLayout &layout,
                                                 std::span<const Vector> factors) {
    if (factors.size() != layout.num_factors()) {
        throw DimensionError("tensor_state: expected " +
                                 std::to_string(layout.num_factors()) +
                                 " factors, got " +
                                 std::to_string(factors.size()),
                             std::min(factors.size(), layout.num_factors()));
    }
    for (std::size_t s = 0; s < factors.size(); ++s) {
        if (static_cast<std::size_t>(factors[s].size()) !=
            layout.local_dim(s)) {
            throw DimensionError("tensor_state: factor " + std::to_string(s) +
                                     " has dimension " +
                                     std::to_string(factors[s].size()) +
                                     ", expected " +
                                     std::to_string(layout.local_dim(s)),
                                 s);
        }
    }
    Vector out(static_cast<Eigen::Index>(layout.dim()));
    for (std::size_t i = 0; i < layout.dim(); ++i) {
        cplx a = 1.0;
        for (std::size_t s = 0; s < factors.size(); ++s) {
            a *= factors[s](static_cast<Eigen::Index>(layout.digit(i, s)));
        }
        out(static_cast<Eigen::Index>(i)) = a;
    }
    return {layout, std::move(out)};
}

[[nodiscard]] inline CompositeState
tensor_state(const SpaceLayout &layout, std::initializer_list<Vector> factors) {
    return tensor_state(layout,
                        std::span<const Vector>(factors.begin(), factors.size()));
}

/// Applies `op` in place, treating every other factor as identity.
inline void apply_local_inplace(CompositeState &state,
                                const LocalOperator &op) {
    const auto &layout = state.layout();
    op.check_layout(layout);
    const auto ix = detail::make_indexer(layout, op.sites());
    const auto &m = op.matrix();
    const auto n = static_cast<Eigen::Index>(ix.offsets.size());
    Vector block(n);
    Vector &amps = state.amplitudes();
    for (auto base : ix.bases) {
        for (Eigen::Index l = 0; l < n; ++l) {
            block(l) = amps(static_cast<Eigen::Index>(base + ix.offsets[l]));
        }
        const Vector out = m * block;
        for (Eigen::Index l = 0; l < n; ++l) {
            amps(static_cast<Eigen::Index>(base + ix.offsets[l])) = out(l);
        }
    }
}

[[nodiscard]] inline CompositeState apply_local(CompositeState state,
                                                const LocalOperator &op) {
    apply_local_inplace(state, op);
    return state;
}

/// <psi|O|psi>.
[[nodiscard]] inline cplx expectation(const CompositeState &state,
                                      const LocalOperator &op) {
    const auto applied = apply_local(state, op);
    return state.amplitudes().dot(applied.amplitudes());
}

/// Full-space dense matrix of `op` (identity on the other factors).
[[nodiscard]] inline Matrix embed(const SpaceLayout &layout,
                                  const LocalOperator &op) {
    op.check_layout(layout);
    const auto ix = detail::make_indexer(layout, op.sites());
    const auto d = static_cast<Eigen::Index>(layout.dim());
    Matrix full = Matrix::Zero(d, d);
    const auto n = ix.offsets.size();
    for (auto base : ix.bases) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                full(static_cast<Eigen::Index>(base + ix.offsets[r]),
                     static_cast<Eigen::Index>(base + ix.offsets[c])) =
                    op.matrix()(static_cast<Eigen::Index>(r),
                                static_cast<Eigen::Index>(c));
            }
        }
    }
    return full;
}

/// Density matrix over an ordered subset of factors.
struct DensityMatrix {
    std::vector<std::size_t> sites;
    std::vector<std::size_t> dims;
    Matrix rho;

    [[nodiscard]] cplx trace() const { return rho.trace(); }
    [[nodiscard]] double purity() const { return (rho * rho).trace().real(); }
    [[nodiscard]] double hermiticity_defect() const {
        return squidgate::hermiticity_defect(rho);
    }
    [[nodiscard]] double min_eigenvalue() const {
        const Matrix h = 0.5 * (rho + rho.adjoint());
        Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }
};

/// Density matrix of the whole register for a pure state.
[[nodiscard]] inline DensityMatrix pure_density(const CompositeState &state) {
    DensityMatrix dm;
    const auto &layout = state.layout();
    for (std::size_t s = 0; s < layout.num_factors(); ++s) {
        dm.sites.push_back(s);
        dm.dims.push_back(layout.local_dim(s));
    }
    dm.rho = state.amplitudes() * state.amplitudes().adjoint();
    return dm;
}

/**
 * Partial trace onto `keep_sites`, in the order given. The kept factors
 * form the row/column index with the first kept site most significant.
 */
[[nodiscard]] inline DensityMatrix
reduced_density(const CompositeState &state,
                std::span<const std::size_t> keep_sites) {
    const auto &layout = state.layout();
    if (keep_sites.empty()) {
        throw std::invalid_argument("reduced_density: keep_sites is empty");
    }
    DensityMatrix dm;
    std::vector<bool> kept(layout.num_factors(), false);
    std::size_t kdim = 1;
    for (auto s : keep_sites) {
        layout.check_site(s);
        if (kept[s]) {
            throw std::invalid_argument("reduced_density: duplicate site " +
                                        std::to_string(s));
        }
        kept[s] = true;
        dm.sites.push_back(s);
        dm.dims.push_back(layout.local_dim(s));
        kdim *= layout.local_dim(s);
    }
    const std::size_t rdim = layout.dim() / kdim;
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(kdim),
                            static_cast<Eigen::Index>(rdim));
    for (std::size_t i = 0; i < layout.dim(); ++i) {
        std::size_t ki = 0;
        for (auto s : keep_sites) {
            ki = ki * layout.local_dim(s) + layout.digit(i, s);
        }
        std::size_t ri = 0;
        for (std::size_t s = 0; s < layout.num_factors(); ++s) {
            if (!kept[s]) {
                ri = ri * layout.local_dim(s) + layout.digit(i, s);
            }
        }
        m(static_cast<Eigen::Index>(ki), static_cast<Eigen::Index>(ri)) =
            state.amplitude(i);
    }
    dm.rho = m * m.adjoint();
    return dm;
}

[[nodiscard]] inline DensityMatrix
reduced_density(const CompositeState &state,
                std::initializer_list<std::size_t> keep_sites) {
    return reduced_density(state, std::span<const std::size_t>(
                                      keep_sites.begin(), keep_sites.size()));
}

} // namespace squidgate
