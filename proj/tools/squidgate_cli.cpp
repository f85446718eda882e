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

// Command-line front end: parses flags, runs one harness command, prints the
// JSON report and writes output files.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "squidgate/commands.hpp"

namespace {

using namespace squidgate;

struct Flags {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> fock_cutoff;
    std::optional<std::size_t> n;
    std::optional<double> ratio;
    std::optional<double> time_scale;
    std::optional<double> dt;
    std::string sweep;
    std::vector<double> values;
    bool timing{false};
};

RunConfig build_config(const Flags &f) {
    RunConfig cfg;
    if (!f.config.empty()) {
        load_config_file(cfg, f.config);
    }
    if (f.seed) cfg.seed = *f.seed;
    if (f.fock_cutoff) cfg.fock_cutoff = *f.fock_cutoff;
    if (f.n) cfg.n = *f.n;
    if (f.ratio) cfg.gate_overrides.ratio = *f.ratio;
    if (f.time_scale) cfg.gate_overrides.cavity_time_scale = *f.time_scale;
    if (f.dt) cfg.lindblad_dt_s = *f.dt;
    if (!f.sweep.empty()) cfg.sweep_parameter = parse_sweep_parameter(f.sweep);
    if (!f.values.empty()) cfg.sweep_values = f.values;
    cfg.out_dir = f.out;
    cfg.timing = f.timing;
    return cfg;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulator for the SQUID-cavity controlled-phase gate and "
                 "cluster-state protocol"};
    app.require_subcommand(1);
    Flags f;
    app.add_option("--config", f.config, "JSON config file (unit-suffixed keys)")
        ->check(CLI::ExistingFile);
    app.add_option("--out", f.out, "Directory for CSV/JSON outputs");
    app.add_option("--seed", f.seed, "Seed for randomized checks");
    app.add_option("--fock-cutoff", f.fock_cutoff, "Highest photon number kept");
    app.add_flag("--timing", f.timing, "Include wall-clock times in outputs");

    auto *tt = app.add_subcommand("truth-table",
                                  "Extract the two-SQUID gate on |00>..|11>");
    tt->add_option("--ratio", f.ratio, "Coupling ratio omega2/omega1");
    tt->add_option("--time-scale", f.time_scale,
                   "Multiply the cavity window duration");

    auto *cl = app.add_subcommand("cluster", "Build an N-SQUID cluster chain");
    cl->add_option("--n", f.n, "Chain length (2..10)")->required();

    app.add_subcommand("feasibility", "Derived timescales for the device "
                                      "parameters");

    auto *dc = app.add_subcommand("decoherence",
                                  "Gate fidelity under cavity and |e> decay");
    dc->add_option("--sweep", f.sweep, "k, gamma_e or branch_ratio")->required();
    dc->add_option("--values", f.values, "Sweep values (default grid if omitted)")
        ->delimiter(',');
    dc->add_option("--dt", f.dt, "Maximum RK4 step in seconds");

    app.add_subcommand("closed-form", "Compare numeric and analytic "
                                      "single-excitation dynamics");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfigError;
    }

    try {
        const RunConfig cfg = build_config(f);
        CommandResult res;
        if (tt->parsed()) {
            res = run_truth_table(cfg);
        } else if (cl->parsed()) {
            res = run_cluster(cfg);
        } else if (app.got_subcommand("feasibility")) {
            res = run_feasibility(cfg);
        } else if (dc->parsed()) {
            res = run_decoherence(cfg);
        } else {
            res = run_closed_form(cfg);
        }
        write_outputs(res, cfg.out_dir);
        std::cout << res.report.dump(2) << '\n';
        return res.exit_code;
    } catch (const ConfigError &e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPhysicsFail;
    }
}
