// Copyright 2026 The jcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "jcsim/commands.hpp"
#include "jcsim/errors.hpp"

namespace {

void add_model_options(CLI::App &app, jcsim::ModelParams &p, double &g_both) {
    auto *group = app.add_option_group("Model", "Angular frequencies in rad/s");
    group->add_option("--g", g_both, "Set both ladder couplings g_ge and g_ef");
    group->add_option("--g-ge", p.g_ge, "g <-> e coupling")->capture_default_str();
    group->add_option("--g-ef", p.g_ef, "e <-> f coupling")->capture_default_str();
    group->add_option("--omega-field", p.omega_field, "Cavity frequency")->capture_default_str();
    group->add_option("--omega-g", p.omega_g, "Ground level energy")->capture_default_str();
    group->add_option("--omega-e", p.omega_e, "First excited level energy")->capture_default_str();
    group->add_option("--omega-f", p.omega_f, "Second excited level energy")->capture_default_str();
    group->add_option("--omega-p", p.omega_p, "Lambda probe Rabi frequency")->capture_default_str();
    group->add_option("--omega-c", p.omega_c, "Lambda control Rabi frequency")->capture_default_str();
    group->add_option("--nbar", p.nbar, "Coherent-state mean photon number")->capture_default_str();
    group->add_option("--n-max", p.n_max, "Field truncation")->capture_default_str();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Jaynes-Cummings digital simulation harness"};
    app.set_version_flag("--version", std::string(jcsim::kVersion));

    jcsim::RunConfig cfg;
    std::string command;
    double g_both = 0.0;
    std::string profile = "reference";

    const std::map<std::string, jcsim::OutputFormat> formats{{"csv", jcsim::OutputFormat::Csv},
                                                             {"json", jcsim::OutputFormat::Json}};
    const std::map<std::string, jcsim::TimeUnit> units{{"s", jcsim::TimeUnit::Seconds},
                                                       {"gt", jcsim::TimeUnit::CouplingTime}};

    app.add_option("command", command,
                   "rabi | entropy | lambda | trotter-compare | populations | fidelity | sample | plan")
        ->required()
        ->check(CLI::IsMember({"rabi", "entropy", "lambda", "trotter-compare", "populations", "fidelity",
                               "sample", "plan"}));
    app.add_option("--order", cfg.order, "Trotter order")->check(CLI::IsMember({1, 2}))->capture_default_str();
    app.add_option("--dt", cfg.dt, "Trotter step in s (largest grid dt for trotter-compare)");
    app.add_option("--steps", cfg.steps, "Number of Trotter steps")->capture_default_str();
    app.add_option("--phase-budget", cfg.phase_budget, "Per-step phase g*dt when --dt is unset")
        ->capture_default_str();
    app.add_option("--shots", cfg.shots, "Measurement shots")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Sampling seed")->envname("JC_SEED")->capture_default_str();
    app.add_option("--readout-error", cfg.readout_error, "Symmetric per-bit readout flip probability")
        ->capture_default_str();
    app.add_option("--calib", cfg.calib_paths, "Calibration JSON file(s)")->check(CLI::ExistingFile);
    app.add_option("--profile", profile, "Fidelity unit counts: reference profile or built circuits")
        ->check(CLI::IsMember({"reference", "built"}))
        ->capture_default_str();
    app.add_option("--measured", cfg.measured_qubits, "Measured qubits for --profile built")
        ->capture_default_str();
    app.add_option("--initial", cfg.initial_state, "Initial encoded state, e.g. e0, g1, g~0.2")
        ->capture_default_str();
    app.add_option("--n", cfg.fock_n, "Fock number for rabi")->capture_default_str();
    app.add_option("--lambda-initial", cfg.lambda_initial, "1, 2, 3 or dark")->capture_default_str();
    app.add_option("--samples", cfg.samples, "Output time points")->capture_default_str();
    app.add_option("--t-end", cfg.t_end, "Final time in s (default 10/g)");
    app.add_option("--detuning", cfg.detuning, "trotter-compare e-level detuning in rad/s (default g)");
    app.add_option("--grid-points", cfg.grid_points, "trotter-compare dt grid size")->capture_default_str();
    app.add_option("--out", cfg.out_path, "Output path (stdout when omitted)");
    app.add_option("--format", cfg.format, "csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->capture_default_str();
    app.add_option("--time-unit", cfg.time_unit, "s or gt")
        ->transform(CLI::CheckedTransformer(units, CLI::ignore_case))
        ->capture_default_str();
    add_model_options(app, cfg.params, g_both);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? jcsim::kExitOk : jcsim::kExitValidation;
    }

    try {
        cfg.command = jcsim::parse_command(command);
        cfg.profile = profile == "reference" ? jcsim::FidelityProfile::Reference : jcsim::FidelityProfile::Built;
        if (app.count("--g") > 0) {
            cfg.params.g_ge = g_both;
            cfg.params.g_ef = g_both;
        }
        const jcsim::CommandResult result = jcsim::run_command(cfg);
        jcsim::write_outputs(cfg, result);
        std::cerr << result.summary << "\n";
        return result.exit_code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return jcsim::kExitValidation;
    }
}
