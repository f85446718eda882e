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
 * The harness commands: truth table, cluster chain, feasibility estimate,
 * decoherence sweep and the closed-form dynamics check. Each command
 * returns a JSON report, a set of output files and an exit code; the CLI
 * only parses flags and writes what it gets back.
 */

#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "verification.hpp"

namespace squidgate {

enum ExitCode : int { kExitPass = 0, kExitPhysicsFail = 1, kExitConfigError = 2 };

struct CommandResult {
    int exit_code{kExitPass};
    nlohmann::json report;
    std::map<std::string, std::string> files; ///< file name -> contents
};

/// Shortest text that round-trips the double.
[[nodiscard]] inline std::string format_double(double x) {
    char buf[32];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) {
            break;
        }
    }
    return buf;
}

/// One CSV row per segment: kind, sites, couplings, phase, duration.
[[nodiscard]] inline std::string schedule_csv(const PulseSchedule &schedule) {
    std::ostringstream os;
    os << "index,kind,sites,transition,omega_a_rad_per_s,omega_b_rad_per_s,"
          "phase_rad,duration_s\n";
    auto level = [](Level l) {
        switch (l) {
        case Level::Zero: return "0";
        case Level::One: return "1";
        case Level::Excited: return "e";
        }
        return "?";
    };
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        const auto &seg = schedule.segments()[k];
        os << k << ',';
        if (const auto *d = std::get_if<DriveSegment>(&seg)) {
            os << "drive," << d->drive.target_squid << ','
               << level(d->drive.from) << '-' << level(d->drive.to) << ','
               << format_double(d->drive.rabi) << ",,"
               << format_double(d->drive.phase) << ','
               << format_double(d->duration) << '\n';
        } else {
            const auto &c = std::get<CavitySegment>(seg);
            os << "cavity," << c.coupling.squid_a << ';' << c.coupling.squid_b
               << ";cavity,0-1," << format_double(c.coupling.omega1) << ','
               << format_double(c.coupling.omega2) << ",,"
               << format_double(c.duration) << '\n';
        }
    }
    return os.str();
}

namespace detail {

inline nlohmann::json complex_json(cplx z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

inline nlohmann::json matrix_json(const Matrix &m) {
    auto rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(complex_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json gate_json(const GateParams &p) {
    const auto cond = p.condition();
    return {{"omega1_rad_per_s", p.omega1},
            {"ratio", p.ratio},
            {"cavity_time_s", p.cavity_time},
            {"pulse_rabi_rad_per_s", p.pulse_rabi},
            {"pulse_duration_s", p.pulse1_duration},
            {"gate_condition_satisfied", cond.satisfied()},
            {"cos_residual", cond.cos_residual},
            {"cycle_residual", cond.cycle_residual}};
}

class Stopwatch {
  public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

} // namespace detail

// ---------------------------------------------------------------- truth table

[[nodiscard]] inline CommandResult run_truth_table(const RunConfig &cfg) {
    cfg.validate();
    detail::Stopwatch sw;
    const SpaceLayout layout(2, cfg.fock_cutoff);
    const GateParams gate = cfg.gate();
    const auto schedule = qcpg_schedule(0, 1, gate);
    const auto report = truth_table(computational_propagator(schedule, layout));

    CommandResult res;
    static constexpr std::array<const char *, 4> labels{"00", "01", "10", "11"};
    auto rows = nlohmann::json::array();
    std::ostringstream csv;
    csv << "input,out_00_re,out_00_im,out_01_re,out_01_im,out_10_re,out_10_im,"
           "out_11_re,out_11_im,phase_rad,leakage\n";
    for (std::size_t j = 0; j < 4; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        csv << labels[j];
        for (Eigen::Index i = 0; i < 4; ++i) {
            csv << ',' << format_double(report.u(i, jj).real()) << ','
                << format_double(report.u(i, jj).imag());
        }
        csv << ',' << format_double(report.phases[j]) << ','
            << format_double(report.leakage[j]) << '\n';
        rows.push_back({{"input", labels[j]},
                        {"phase_rad", report.phases[j]},
                        {"leakage", report.leakage[j]}});
    }
    res.report = {{"command", "truth-table"},
                  {"fock_cutoff", cfg.fock_cutoff},
                  {"gate", detail::gate_json(gate)},
                  {"propagator", detail::matrix_json(report.u)},
                  {"columns", rows},
                  {"max_entry_error", report.max_entry_error},
                  {"phase_normalized_error", report.phase_normalized_error},
                  {"average_gate_fidelity", report.average_fidelity},
                  {"pass", report.pass}};
    if (cfg.timing) {
        res.report["runtime_s"] = sw.seconds();
    }
    res.files["truth_table.csv"] = csv.str();
    res.files["truth_table.json"] = res.report.dump(2) + "\n";
    res.files["schedule.csv"] = schedule_csv(schedule);
    res.exit_code = report.pass ? kExitPass : kExitPhysicsFail;
    return res;
}

// -------------------------------------------------------------------- cluster

inline constexpr std::size_t kMaxClusterSize = 10;

struct ClusterRun {
    CompositeState state;
    StabilizerReport stabilizers;
    double oracle_fidelity;
};

/// Runs the chain protocol from |1>^N |vac> and checks it against the oracle.
[[nodiscard]] inline ClusterRun
run_cluster_chain(std::size_t n, const GateParams &gate,
                  std::size_t fock_cutoff = kDefaultFockCutoff,
                  std::span<const std::size_t> gate_order = {}) {
    const SpaceLayout layout(n, fock_cutoff);
    auto out = evolve_pure(cluster_initial_state(layout),
                           cluster_chain_schedule(n, gate, gate_order));
    auto stab = stabilizer_expectations(out, n);
    const double f = state_fidelity(out, cluster_state_oracle(n, fock_cutoff));
    return {std::move(out), std::move(stab), f};
}

[[nodiscard]] inline CommandResult run_cluster(const RunConfig &cfg) {
    cfg.validate();
    if (cfg.n < 2 || cfg.n > kMaxClusterSize) {
        throw ConfigError("cluster: N must lie in [2, " +
                          std::to_string(kMaxClusterSize) + "], got " +
                          std::to_string(cfg.n));
    }
    detail::Stopwatch sw;
    const GateParams gate = cfg.gate();
    const auto run = run_cluster_chain(cfg.n, gate, cfg.fock_cutoff);
    const double runtime = sw.seconds();

    constexpr double kFidelityTol = 1e-9;
    constexpr double kStabilizerTol = 1e-9;
    constexpr double kVacuumTol = 1e-10;
    const bool pass = run.oracle_fidelity >= 1.0 - kFidelityTol &&
                      run.stabilizers.min_expectation >= 1.0 - kStabilizerTol &&
                      run.stabilizers.cavity_vacuum >= 1.0 - kVacuumTol;

    CommandResult res;
    std::ostringstream csv;
    csv << "generator,expectation\n";
    for (std::size_t i = 0; i < cfg.n; ++i) {
        csv << "K" << i << ',' << format_double(run.stabilizers.expectations[i])
            << '\n';
    }
    res.report = {{"command", "cluster"},
                  {"n", cfg.n},
                  {"fock_cutoff", cfg.fock_cutoff},
                  {"gate", detail::gate_json(gate)},
                  {"stabilizers", run.stabilizers.expectations},
                  {"min_stabilizer", run.stabilizers.min_expectation},
                  {"oracle_fidelity", run.oracle_fidelity},
                  {"cavity_vacuum_population", run.stabilizers.cavity_vacuum},
                  {"excited_population", run.stabilizers.excited_population},
                  {"warnings", run.stabilizers.warnings},
                  {"pass", pass}};
    if (cfg.timing) {
        res.report["runtime_s"] = runtime;
    }
    res.files["stabilizers.csv"] = csv.str();
    res.files["cluster.json"] = res.report.dump(2) + "\n";
    res.files["schedule.csv"] =
        schedule_csv(cluster_chain_schedule(cfg.n, gate));
    res.exit_code = pass ? kExitPass : kExitPhysicsFail;
    return res;
}

// ---------------------------------------------------------------- feasibility

/// Rounds to `digits` significant figures.
[[nodiscard]] inline double round_significant(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) {
        return x;
    }
    const double mag = std::floor(std::log10(std::abs(x)));
    const double e = digits - 1 - mag;
    if (e >= 0.0) {
        const double scale = std::pow(10.0, e);
        return std::round(x * scale) / scale;
    }
    const double scale = std::pow(10.0, -e);
    return std::round(x / scale) * scale;
}

struct FeasibilityReport {
    double cavity_decay_rate;  ///< k = omega_c / Q, 1/s
    double cavity_decay_time;  ///< 1/k, s
    double resonant_time;      ///< T_r = pi / g, s
    double pulse_time;         ///< T_l = pi / (2 Omega), s
    double strong_coupling;    ///< g^2 / (gamma_e k)
    double resonant_time_k;    ///< T_r k
    double resonant_time_gamma; ///< T_r gamma_e
    double pulse_time_k;
    double pulse_time_gamma;

    // Agreement with the published two-figure values.
    bool decay_time_matches;
    bool resonant_time_matches;
    bool pulse_time_matches;
    bool strong_coupling_matches;

    /// Interaction times short against both decay times and g^2/(gamma k) >> 1.
    bool regime_ok;
};

inline constexpr double kPublishedDecayTime = 2.0e-5;
inline constexpr double kPublishedResonantTime = 1.7e-8;
inline constexpr double kPublishedPulseTime = 1.8e-8;
inline constexpr double kPublishedStrongCoupling = 1.6e6;

[[nodiscard]] inline FeasibilityReport
feasibility_report(const FeasibilityParams &p) {
    p.validate(true);
    FeasibilityReport r{};
    r.cavity_decay_rate = p.cavity_decay_rate();
    r.cavity_decay_time = 1.0 / r.cavity_decay_rate;
    r.resonant_time = std::numbers::pi / p.g_hz;
    r.pulse_time = std::numbers::pi / (2.0 * p.omega_drive_hz);
    r.strong_coupling = p.g_hz * p.g_hz / (p.gamma_e_per_s * r.cavity_decay_rate);
    r.resonant_time_k = r.resonant_time * r.cavity_decay_rate;
    r.resonant_time_gamma = r.resonant_time * p.gamma_e_per_s;
    r.pulse_time_k = r.pulse_time * r.cavity_decay_rate;
    r.pulse_time_gamma = r.pulse_time * p.gamma_e_per_s;

    auto matches = [](double value, double published) {
        return std::abs(round_significant(value, 2) - published) <=
               1e-12 * std::abs(published);
    };
    r.decay_time_matches = matches(r.cavity_decay_time, kPublishedDecayTime);
    r.resonant_time_matches = matches(r.resonant_time, kPublishedResonantTime);
    r.pulse_time_matches = matches(r.pulse_time, kPublishedPulseTime);
    r.strong_coupling_matches =
        matches(r.strong_coupling, kPublishedStrongCoupling);

    constexpr double kShort = 0.1;
    r.regime_ok = r.resonant_time_k < kShort && r.resonant_time_gamma < kShort &&
                  r.pulse_time_k < kShort && r.pulse_time_gamma < kShort &&
                  r.strong_coupling > 1.0e2;
    return r;
}

[[nodiscard]] inline CommandResult run_feasibility(const RunConfig &cfg) {
    FeasibilityReport r{};
    try {
        r = feasibility_report(cfg.feasibility);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    CommandResult res;
    const auto &p = cfg.feasibility;
    res.report = {
        {"command", "feasibility"},
        {"inputs",
         {{"quality_factor", p.quality_factor},
          {"omega_c_hz", p.omega_c_hz},
          {"gamma_e_per_s", p.gamma_e_per_s},
          {"g_hz", p.g_hz},
          {"omega_drive_hz", p.omega_drive_hz}}},
        {"cavity_decay_rate_per_s", r.cavity_decay_rate},
        {"cavity_decay_time_s", r.cavity_decay_time},
        {"upper_level_lifetime_s", 1.0 / p.gamma_e_per_s},
        {"resonant_time_s", r.resonant_time},
        {"pulse_time_s", r.pulse_time},
        {"strong_coupling", r.strong_coupling},
        {"resonant_time_x_k", r.resonant_time_k},
        {"resonant_time_x_gamma_e", r.resonant_time_gamma},
        {"pulse_time_x_k", r.pulse_time_k},
        {"pulse_time_x_gamma_e", r.pulse_time_gamma},
        {"matches_published",
         {{"cavity_decay_time", r.decay_time_matches},
          {"resonant_time", r.resonant_time_matches},
          {"pulse_time", r.pulse_time_matches},
          {"strong_coupling", r.strong_coupling_matches}}},
        {"regime_ok", r.regime_ok}};
    res.files["feasibility.json"] = res.report.dump(2) + "\n";
    res.exit_code = r.regime_ok ? kExitPass : kExitPhysicsFail;
    return res;
}

// ---------------------------------------------------------------- decoherence

struct DecoherencePoint {
    double value{};
    ChannelFidelityReport channel{};
    double runtime_s{};
};

/// Copy of `base` with the swept quantity set to `value`.
[[nodiscard]] inline FeasibilityParams with_sweep_value(FeasibilityParams base,
                                                        SweepParameter which,
                                                        double value) {
    switch (which) {
    case SweepParameter::CavityDecay:
        base.quality_factor = value > 0.0
                                  ? base.omega_c_hz / value
                                  : std::numeric_limits<double>::infinity();
        break;
    case SweepParameter::GammaE:
        base.gamma_e_per_s = value;
        break;
    case SweepParameter::BranchRatio:
        base.branch_ratio_e_to_0 = value;
        break;
    }
    return base;
}

/// Average fidelity of the two-SQUID gate under cavity decay and |e> decay.
[[nodiscard]] inline ChannelFidelityReport
qcpg_channel_fidelity(const FeasibilityParams &params, const GateParams &gate,
                      std::size_t fock_cutoff = kDefaultFockCutoff,
                      double dt = 0.0) {
    const SpaceLayout layout(2, fock_cutoff);
    const auto collapse = collapse_operators(layout, params);
    return channel_average_fidelity(qcpg_schedule(0, 1, gate), layout, collapse,
                                    ideal_cz(), dt);
}

[[nodiscard]] inline std::vector<double> default_sweep_values(const RunConfig &cfg) {
    const auto &p = cfg.feasibility;
    switch (cfg.sweep_parameter) {
    case SweepParameter::CavityDecay: {
        const double k = p.cavity_decay_rate();
        return {0.0, k, 10.0 * k, 100.0 * k, 1000.0 * k};
    }
    case SweepParameter::GammaE: {
        const double g = p.gamma_e_per_s;
        return {0.0, 0.1 * g, g, 10.0 * g};
    }
    case SweepParameter::BranchRatio:
        return {0.0, 0.5, 1.0};
    }
    return {};
}

[[nodiscard]] inline CommandResult run_decoherence(const RunConfig &cfg) {
    cfg.validate();
    const auto values =
        cfg.sweep_values.empty() ? default_sweep_values(cfg) : cfg.sweep_values;
    std::vector<FeasibilityParams> points;
    for (double v : values) {
        auto p = with_sweep_value(cfg.feasibility, cfg.sweep_parameter, v);
        try {
            p.validate(false);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("sweep value ") + format_double(v) +
                              ": " + e.what());
        }
        points.push_back(p);
    }
    const GateParams gate = cfg.gate();
    {
        // Fail fast on a step that violates the stability bound.
        const SpaceLayout layout(2, cfg.fock_cutoff);
        const auto schedule = qcpg_schedule(0, 1, gate);
        const auto collapse = collapse_operators(layout, points.front());
        for (const auto &seg : schedule.segments()) {
            const LindbladGenerator gen(layout, segment_hamiltonian(layout, seg),
                                        collapse);
            if (cfg.lindblad_dt_s > gen.max_step()) {
                throw ConfigError("lindblad dt_s exceeds the stability bound " +
                                  format_double(gen.max_step()) + " s");
            }
        }
    }

    // Independent jobs, at most hardware_concurrency at a time; results are
    // stored by index so row order never depends on completion order.
    std::vector<DecoherencePoint> rows(points.size());
    const std::size_t workers =
        std::max<std::size_t>(1, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < points.size(); start += workers) {
        std::vector<std::future<void>> jobs;
        for (std::size_t i = start; i < std::min(points.size(), start + workers);
             ++i) {
            jobs.push_back(std::async(std::launch::async, [&, i] {
                detail::Stopwatch sw;
                rows[i].value = values[i];
                rows[i].channel = qcpg_channel_fidelity(points[i], gate,
                                                        cfg.fock_cutoff,
                                                        cfg.lindblad_dt_s);
                rows[i].runtime_s = sw.seconds();
            }));
        }
        for (auto &j : jobs) {
            j.get();
        }
    }

    constexpr double kTraceTol = 1e-8;
    constexpr double kHermitianTol = 1e-10;
    constexpr double kPositivityTol = 1e-8;
    constexpr double kClosedSystemTol = 1e-8;
    bool pass = true;
    std::ostringstream csv;
    csv << to_string(cfg.sweep_parameter) << ",average_gate_fidelity,trace_defect";
    if (cfg.timing) {
        csv << ",runtime_s";
    }
    csv << '\n';
    auto table = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &r = rows[i];
        const auto &c = r.channel;
        bool ok = c.trace_defect <= kTraceTol &&
                  c.hermiticity_defect <= kHermitianTol &&
                  c.min_eigenvalue >= -kPositivityTol &&
                  c.average_fidelity >= 0.0 && c.average_fidelity <= 1.0;
        const bool closed = points[i].cavity_decay_rate() == 0.0 &&
                            points[i].gamma_e_per_s == 0.0;
        if (closed) {
            ok = ok && c.average_fidelity >= 1.0 - kClosedSystemTol;
        }
        pass = pass && ok;
        csv << format_double(r.value) << ',' << format_double(c.average_fidelity)
            << ',' << format_double(c.trace_defect);
        if (cfg.timing) {
            csv << ',' << format_double(r.runtime_s);
        }
        csv << '\n';
        nlohmann::json row = {{"value", r.value},
                              {"average_gate_fidelity", c.average_fidelity},
                              {"trace_defect", c.trace_defect},
                              {"hermiticity_defect", c.hermiticity_defect},
                              {"min_eigenvalue", c.min_eigenvalue},
                              {"checks_ok", ok}};
        if (cfg.timing) {
            row["runtime_s"] = r.runtime_s;
        }
        table.push_back(std::move(row));
    }
    CommandResult res;
    res.report = {{"command", "decoherence"},
                  {"sweep_parameter", to_string(cfg.sweep_parameter)},
                  {"fock_cutoff", cfg.fock_cutoff},
                  {"gate", detail::gate_json(gate)},
                  {"rows", table},
                  {"pass", pass}};
    const std::string stem =
        std::string("decoherence_") + to_string(cfg.sweep_parameter);
    res.files[stem + ".csv"] = csv.str();
    res.files[stem + ".json"] = res.report.dump(2) + "\n";
    res.exit_code = pass ? kExitPass : kExitPhysicsFail;
    return res;
}

// ---------------------------------------------------------------- closed form

struct ClosedFormCheck {
    std::vector<std::array<double, 2>> couplings; ///< (omega1, omega2) rad/s
    std::size_t time_points{};
    double max_difference{};
};

/**
 * Compares propagator-based evolution of |1,0,0> under the cavity coupling
 * with the closed form for seeded random couplings and equally spaced times
 * in [0, 4 pi / Omega]. Amplitudes outside the single-excitation triple
 * count against the difference too.
 */
[[nodiscard]] inline ClosedFormCheck
closed_form_check(std::uint64_t seed, std::size_t pairs = 5,
                  std::size_t points = 100,
                  std::size_t fock_cutoff = kDefaultFockCutoff) {
    if (points < 2 || pairs == 0) {
        throw std::invalid_argument("closed_form_check: need pairs >= 1 and "
                                    "points >= 2");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coupling(1.0e7, 1.0e9);
    const SpaceLayout layout(2, fock_cutoff);
    const auto i100 = layout.index_of({1, 0, 0});
    const auto i010 = layout.index_of({0, 1, 0});
    const auto i001 = layout.index_of({0, 0, 1});
    ClosedFormCheck out;
    out.time_points = points;
    for (std::size_t p = 0; p < pairs; ++p) {
        const double w1 = coupling(rng);
        const double w2 = coupling(rng);
        out.couplings.push_back({w1, w2});
        const auto h =
            cavity_coupling_hamiltonian(layout, CavityCouplingSpec{0, 1, w1, w2});
        const double t_end = 4.0 * std::numbers::pi / std::hypot(w1, w2);
        for (std::size_t k = 0; k < points; ++k) {
            const double t =
                t_end * static_cast<double>(k) / static_cast<double>(points - 1);
            auto psi = CompositeState::basis(layout, {1, 0, 0});
            apply_local_inplace(psi, propagator(h, t).unitary);
            const auto ref = single_excitation_closed_form(w1, w2, t);
            Vector expected = Vector::Zero(static_cast<Eigen::Index>(layout.dim()));
            expected(static_cast<Eigen::Index>(i100)) = ref.c100;
            expected(static_cast<Eigen::Index>(i010)) = ref.c010;
            expected(static_cast<Eigen::Index>(i001)) = ref.c001;
            out.max_difference =
                std::max(out.max_difference,
                         (psi.amplitudes() - expected).cwiseAbs().maxCoeff());
        }
    }
    return out;
}

[[nodiscard]] inline CommandResult run_closed_form(const RunConfig &cfg) {
    cfg.validate();
    const auto check = closed_form_check(cfg.seed, 5, 100, cfg.fock_cutoff);
    constexpr double kTol = 1e-8;
    CommandResult res;
    std::ostringstream csv;
    csv << "omega1_rad_per_s,omega2_rad_per_s\n";
    for (const auto &c : check.couplings) {
        csv << format_double(c[0]) << ',' << format_double(c[1]) << '\n';
    }
    const bool pass = check.max_difference <= kTol;
    res.report = {{"command", "closed-form"},
                  {"seed", cfg.seed},
                  {"pairs", check.couplings.size()},
                  {"time_points", check.time_points},
                  {"max_difference", check.max_difference},
                  {"pass", pass}};
    res.files["closed_form_couplings.csv"] = csv.str();
    res.files["closed_form.json"] = res.report.dump(2) + "\n";
    res.exit_code = pass ? kExitPass : kExitPhysicsFail;
    return res;
}

/// Writes every file of `res` into `dir`, creating it if needed.
inline void write_outputs(const CommandResult &res,
                          const std::filesystem::path &dir) {
    if (dir.empty()) {
        return;
    }
    std::filesystem::create_directories(dir);
    for (const auto &[name, body] : res.files) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write " + (dir / name).string());
        }
        out << body;
    }
}

} // namespace squidgate
