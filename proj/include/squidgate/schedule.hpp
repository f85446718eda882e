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

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "hamiltonians.hpp"

namespace squidgate {

/// Classical pulse on one SQUID transition held for `duration` seconds.
struct DriveSegment {
    DriveSpec drive;
    double duration{0.0};
};

/// Cavity interaction window for two SQUIDs, `duration` seconds long.
struct CavitySegment {
    CavityCouplingSpec coupling;
    double duration{0.0};
};

using Segment = std::variant<DriveSegment, CavitySegment>;

[[nodiscard]] inline double duration_of(const Segment &seg) {
    return std::visit([](const auto &s) { return s.duration; }, seg);
}

/// SQUID indices addressed by a segment.
[[nodiscard]] inline std::vector<std::size_t> squids_of(const Segment &seg) {
    if (const auto *d = std::get_if<DriveSegment>(&seg)) {
        return {d->drive.target_squid};
    }
    const auto &c = std::get<CavitySegment>(seg).coupling;
    return {c.squid_a, c.squid_b};
}

/// Generator of one segment, built for `layout`.
[[nodiscard]] inline LocalOperator segment_hamiltonian(const SpaceLayout &layout,
                                                       const Segment &seg) {
    if (const auto *d = std::get_if<DriveSegment>(&seg)) {
        return drive_hamiltonian(layout, d->drive);
    }
    return cavity_coupling_hamiltonian(layout,
                                       std::get<CavitySegment>(seg).coupling);
}

/// Segments executed strictly one after another.
class PulseSchedule {
  public:
    PulseSchedule() = default;

    PulseSchedule &append(Segment seg) {
        const double t = duration_of(seg);
        if (!(t >= 0.0) || !std::isfinite(t)) {
            throw std::invalid_argument("PulseSchedule: segment duration must "
                                        "be finite and non-negative");
        }
        std::visit([](const auto &s) {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>,
                                         DriveSegment>) {
                s.drive.validate();
            } else {
                s.coupling.validate();
            }
        }, seg);
        segments_.push_back(std::move(seg));
        return *this;
    }

    PulseSchedule &append(const PulseSchedule &other) {
        for (const auto &s : other.segments_) {
            segments_.push_back(s);
        }
        return *this;
    }

    [[nodiscard]] const std::vector<Segment> &segments() const noexcept {
        return segments_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return segments_.size(); }
    [[nodiscard]] bool empty() const noexcept { return segments_.empty(); }

    [[nodiscard]] double total_duration() const {
        return std::accumulate(
            segments_.begin(), segments_.end(), 0.0,
            [](double acc, const Segment &s) { return acc + duration_of(s); });
    }

    /// Highest SQUID index addressed plus one (0 for an empty schedule).
    [[nodiscard]] std::size_t squids_required() const {
        std::size_t n = 0;
        for (const auto &s : segments_) {
            for (auto q : squids_of(s)) {
                n = std::max(n, q + 1);
            }
        }
        return n;
    }

    [[nodiscard]] bool uses_cavity() const {
        return std::any_of(segments_.begin(), segments_.end(), [](const auto &s) {
            return std::holds_alternative<CavitySegment>(s);
        });
    }

  private:
    std::vector<Segment> segments_;
};

} // namespace squidgate
