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
 * Run configuration for the command-line harness.
 *
 * Config files are JSON objects whose keys carry their unit:
 *
 *   {
 *     "fock_cutoff": 2,
 *     "n": 4,
 *     "seed": 7,
 *     "feasibility": {
 *       "quality_factor": 1e6, "omega_c_hz": 5e10, "gamma_e_per_s": 4e5,
 *       "g_hz": 1.8e8, "omega_drive_hz": 8.5e7, "branch_ratio_e_to_0": 0.5
 *     },
 *     "gate": {
 *       "omega1_rad_per_s": 1.8e8, "ratio": 1.7320508075688772,
 *       "cavity_time_s": 1.745e-8, "cavity_time_scale": 1.0,
 *       "pulse_rabi_rad_per_s": 8.5e7
 *     },
 *     "lindblad": { "dt_s": 0 },
 *     "sweep": { "parameter": "k", "values": [5e4, 5e5] }
 *   }
 *
 * Gate defaults follow the feasibility block (omega1 = g_hz, pulse Rabi =
 * omega_drive_hz, omega1 t = pi, ratio sqrt 3). Unknown keys are rejected.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "protocols.hpp"

namespace squidgate {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class SweepParameter { CavityDecay, GammaE, BranchRatio };

[[nodiscard]] inline SweepParameter parse_sweep_parameter(const std::string &s) {
    if (s == "k") return SweepParameter::CavityDecay;
    if (s == "gamma_e") return SweepParameter::GammaE;
    if (s == "branch_ratio") return SweepParameter::BranchRatio;
    throw ConfigError("unsupported sweep parameter '" + s +
                      "' (expected k, gamma_e or branch_ratio)");
}

[[nodiscard]] inline const char *to_string(SweepParameter p) {
    switch (p) {
    case SweepParameter::CavityDecay: return "k";
    case SweepParameter::GammaE: return "gamma_e";
    case SweepParameter::BranchRatio: return "branch_ratio";
    }
    return "?";
}

/// Gate overrides on top of the feasibility-derived defaults.
struct GateOverrides {
    std::optional<double> omega1_rad_per_s;
    std::optional<double> ratio;
    std::optional<double> cavity_time_s;
    std::optional<double> cavity_time_scale;
    std::optional<double> pulse_rabi_rad_per_s;
};

struct RunConfig {
    std::size_t n{2};
    std::size_t fock_cutoff{kDefaultFockCutoff};
    std::uint64_t seed{20260101};
    FeasibilityParams feasibility{};
    GateOverrides gate_overrides{};
    double lindblad_dt_s{0.0}; ///< 0 selects duration / 2000 per segment
    SweepParameter sweep_parameter{SweepParameter::CavityDecay};
    std::vector<double> sweep_values; ///< empty selects the default grid
    std::filesystem::path out_dir;    ///< empty: stdout only
    bool timing{false};               ///< add wall-clock fields to outputs

    /// Gate parameters after applying overrides to the feasibility defaults.
    [[nodiscard]] GateParams gate() const {
        const auto &o = gate_overrides;
        GateParams p = GateParams::standard(
            o.omega1_rad_per_s.value_or(feasibility.g_hz),
            o.pulse_rabi_rad_per_s.value_or(feasibility.omega_drive_hz));
        if (o.ratio) p.ratio = *o.ratio;
        if (o.cavity_time_s) p.cavity_time = *o.cavity_time_s;
        if (o.cavity_time_scale) p.cavity_time *= *o.cavity_time_scale;
        return p;
    }

    void validate() const {
        try {
            feasibility.validate(false);
            gate().validate();
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
        if (fock_cutoff < 1) {
            throw ConfigError("fock_cutoff must be at least 1 (the gate uses "
                              "the cavity)");
        }
        if (!(lindblad_dt_s >= 0.0)) {
            throw ConfigError("lindblad dt_s must be non-negative");
        }
        if (gate_overrides.cavity_time_scale &&
            !(*gate_overrides.cavity_time_scale > 0.0)) {
            throw ConfigError("cavity_time_scale must be positive");
        }
    }
};

namespace detail {

template <typename T>
T take(const nlohmann::json &obj, const char *key, T fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

inline void reject_unknown(const nlohmann::json &obj,
                           std::initializer_list<const char *> known,
                           const std::string &where) {
    if (!obj.is_object()) {
        throw ConfigError(where + " must be a JSON object");
    }
    for (const auto &[k, v] : obj.items()) {
        bool ok = false;
        for (const char *name : known) {
            ok = ok || k == name;
        }
        if (!ok) {
            throw ConfigError("unknown config key '" + k + "' in " + where);
        }
    }
}

template <typename T>
void take_opt(const nlohmann::json &obj, const char *key, std::optional<T> &dst) {
    if (obj.contains(key)) {
        dst = take<T>(obj, key, T{});
    }
}

} // namespace detail

/// Applies a parsed JSON config on top of `cfg`.
inline void apply_config_json(RunConfig &cfg, const nlohmann::json &j) {
    using detail::take;
    detail::reject_unknown(j,
                           {"n", "fock_cutoff", "seed", "feasibility", "gate",
                            "lindblad", "sweep"},
                           "config");
    cfg.n = take<std::size_t>(j, "n", cfg.n);
    cfg.fock_cutoff = take<std::size_t>(j, "fock_cutoff", cfg.fock_cutoff);
    cfg.seed = take<std::uint64_t>(j, "seed", cfg.seed);
    if (j.contains("feasibility")) {
        const auto &f = j.at("feasibility");
        detail::reject_unknown(f,
                               {"quality_factor", "omega_c_hz", "gamma_e_per_s",
                                "g_hz", "omega_drive_hz", "branch_ratio_e_to_0"},
                               "feasibility");
        auto &p = cfg.feasibility;
        p.quality_factor = take(f, "quality_factor", p.quality_factor);
        p.omega_c_hz = take(f, "omega_c_hz", p.omega_c_hz);
        p.gamma_e_per_s = take(f, "gamma_e_per_s", p.gamma_e_per_s);
        p.g_hz = take(f, "g_hz", p.g_hz);
        p.omega_drive_hz = take(f, "omega_drive_hz", p.omega_drive_hz);
        p.branch_ratio_e_to_0 =
            take(f, "branch_ratio_e_to_0", p.branch_ratio_e_to_0);
    }
    if (j.contains("gate")) {
        const auto &g = j.at("gate");
        detail::reject_unknown(g,
                               {"omega1_rad_per_s", "ratio", "cavity_time_s",
                                "cavity_time_scale", "pulse_rabi_rad_per_s"},
                               "gate");
        auto &o = cfg.gate_overrides;
        detail::take_opt(g, "omega1_rad_per_s", o.omega1_rad_per_s);
        detail::take_opt(g, "ratio", o.ratio);
        detail::take_opt(g, "cavity_time_s", o.cavity_time_s);
        detail::take_opt(g, "cavity_time_scale", o.cavity_time_scale);
        detail::take_opt(g, "pulse_rabi_rad_per_s", o.pulse_rabi_rad_per_s);
    }
    if (j.contains("lindblad")) {
        const auto &l = j.at("lindblad");
        detail::reject_unknown(l, {"dt_s"}, "lindblad");
        cfg.lindblad_dt_s = take(l, "dt_s", cfg.lindblad_dt_s);
    }
    if (j.contains("sweep")) {
        const auto &s = j.at("sweep");
        detail::reject_unknown(s, {"parameter", "values"}, "sweep");
        if (s.contains("parameter")) {
            cfg.sweep_parameter =
                parse_sweep_parameter(take<std::string>(s, "parameter", ""));
        }
        cfg.sweep_values = take(s, "values", cfg.sweep_values);
    }
}

inline void load_config_file(RunConfig &cfg, const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError("config file " + path.string() + ": " + e.what());
    }
    apply_config_json(cfg, j);
}

} // namespace squidgate
