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

#include "jcsim/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

#include "jcsim/errors.hpp"
#include "jcsim/kernels.hpp"
#include "jcsim/linalg.hpp"
#include "jcsim/measurement.hpp"
#include "jcsim/noise.hpp"

namespace jcsim {
namespace {

constexpr double kRabiTolerance = 1e-9;
constexpr double kLeakageTolerance = 1e-10;
constexpr double kSlopeTolerance1 = 0.3;
constexpr double kSlopeTolerance2 = 0.4;
/// Per-step errors below this are round-off: the terms commute.
constexpr double kErrorFloor = 1e-12;

struct CommandName {
    Command command;
    std::string_view name;
};

constexpr CommandName kCommandNames[] = {
    {Command::Rabi, "rabi"},
    {Command::Entropy, "entropy"},
    {Command::Lambda, "lambda"},
    {Command::TrotterCompare, "trotter-compare"},
    {Command::Populations, "populations"},
    {Command::Fidelity, "fidelity"},
    {Command::Sample, "sample"},
    {Command::Plan, "plan"},
};

double reference_coupling(const RunConfig &c) {
    if (!(c.params.g_ge > 0.0)) {
        throw ValidationError("g_ge must be positive to set the time scale");
    }
    return c.params.g_ge;
}

double time_factor(const RunConfig &c) {
    return c.time_unit == TimeUnit::CouplingTime ? reference_coupling(c) : 1.0;
}

double resolved_dt(const RunConfig &c) {
    return c.dt ? *c.dt : choose_dt(reference_coupling(c), c.phase_budget);
}

std::vector<double> output_times(const RunConfig &c) {
    const double t_end = c.t_end ? *c.t_end : 10.0 / reference_coupling(c);
    return uniform_times(t_end, c.samples);
}

void set_trajectory(CommandResult &r, const Trajectory &t) {
    r.csv = t.to_csv();
    r.json = t.to_json();
}

CommandResult cmd_rabi(const RunConfig &c) {
    const double g = reference_coupling(c);
    ModelParams p = c.params;
    p.n_max = c.fock_n + 1;
    p.validate();
    const std::vector<double> times = output_times(c);
    const HermitianPropagator prop(build_jc2_hamiltonian(p));
    std::vector<Complex> psi0(2 * (p.n_max + 1), Complex{0.0, 0.0});
    psi0[jc2_index(c.fock_n, true)] = 1.0;

    Trajectory traj({"P_e", "P_g", "P_e_exact", "P_g_exact"});
    double max_diff = 0.0;
    for (double t : times) {
        const Jc2Amplitudes a = analytic_jc2_amplitudes(g, c.fock_n, t);
        const std::vector<Complex> psi = prop.evolve(psi0, t);
        const double pe = std::norm(a.c_e);
        const double pg = std::norm(a.c_g);
        const double pe_x = std::norm(psi[jc2_index(c.fock_n, true)]);
        const double pg_x = std::norm(psi[jc2_index(c.fock_n + 1, false)]);
        max_diff = std::max({max_diff, std::abs(pe - pe_x), std::abs(pg - pg_x)});
        traj.push_back(t, {pe, pg, pe_x, pg_x});
    }
    CommandResult r;
    set_trajectory(r, traj.rescaled_time(time_factor(c)));
    const bool resonant = p.omega_field == p.omega_atom();
    r.results = {{"max_abs_difference", max_diff}, {"resonant", resonant}};
    if (resonant && max_diff > kRabiTolerance) {
        r.exit_code = kExitThreshold;
    }
    r.summary = "rabi: n = " + std::to_string(c.fock_n) +
                ", analytic vs exact max difference " + format_double(max_diff);
    return r;
}

CommandResult cmd_entropy(const RunConfig &c) {
    const std::vector<double> times = output_times(c);
    const Trajectory traj = entropy_trajectory(c.params, times);
    double s_max = 0.0;
    for (double s : traj.column("S")) {
        s_max = std::max(s_max, s);
    }
    CommandResult r;
    set_trajectory(r, traj.rescaled_time(time_factor(c)));
    r.results = {{"S_max", s_max}, {"ln2", std::numbers::ln2}};
    if (s_max > std::numbers::ln2 + 1e-9) {
        r.exit_code = kExitThreshold;
    }
    r.summary = "entropy: nbar = " + format_double(c.params.nbar) + ", max S = " + format_double(s_max);
    return r;
}

LambdaAmplitudes lambda_initial(const RunConfig &c) {
    const Complex one{1.0, 0.0};
    const Complex zero{0.0, 0.0};
    if (c.lambda_initial == "1") {
        return {one, zero, zero};
    }
    if (c.lambda_initial == "2") {
        return {zero, one, zero};
    }
    if (c.lambda_initial == "3") {
        return {zero, zero, one};
    }
    if (c.lambda_initial == "dark") {
        return lambda_dark_state(c.params);
    }
    throw ValidationError("lambda initial state must be 1, 2, 3 or dark, got '" + c.lambda_initial + "'");
}

CommandResult cmd_lambda(const RunConfig &c) {
    const std::vector<double> times = output_times(c);
    const Trajectory traj = lambda_integrate(c.params, lambda_initial(c), times);
    double drift = 0.0;
    for (double n : traj.column("norm")) {
        drift = std::max(drift, std::abs(n - 1.0));
    }
    CommandResult r;
    set_trajectory(r, traj.rescaled_time(time_factor(c)));
    r.results = {{"max_norm_drift", drift}};
    r.summary = "lambda: initial " + c.lambda_initial + ", max norm drift " + format_double(drift);
    return r;
}

CommandResult cmd_trotter_compare(const RunConfig &c) {
    const double g = reference_coupling(c);
    if (c.grid_points < 4) {
        throw ValidationError("trotter-compare: the dt grid needs at least 4 points");
    }
    ModelParams p = c.params;
    p.omega_e += c.detuning ? *c.detuning : g;
    p.validate();
    const double dt_max = c.dt ? *c.dt : 0.2 / g;
    if (!(dt_max > 0.0) || !std::isfinite(dt_max)) {
        throw ValidationError("trotter-compare: largest dt must be positive");
    }

    std::vector<double> dts;
    std::vector<double> err1;
    std::vector<double> err2;
    for (std::size_t i = 0; i < c.grid_points; ++i) {
        const double dt = dt_max / std::ldexp(1.0, static_cast<int>(i));
        dts.push_back(dt);
        err1.push_back(trotter_error(p, 1, dt));
        err2.push_back(trotter_error(p, 2, dt));
    }
    for (std::size_t i = 0; i < dts.size(); ++i) {
        if (!(err1[i] > kErrorFloor) || !(err2[i] > kErrorFloor)) {
            throw ValidationError(
                "trotter-compare: Trotter error at round-off level at dt = " + format_double(dts[i]) +
                "; the Hamiltonian terms commute for these parameters (set a nonzero detuning)");
        }
    }
    const double slope1 = fit_loglog_slope(dts, err1);
    const double slope2 = fit_loglog_slope(dts, err2);
    bool second_smaller = true;
    for (std::size_t i = 0; i < dts.size(); ++i) {
        second_smaller = second_smaller && err2[i] < err1[i];
    }

    const double factor = time_factor(c);
    CommandResult r;
    r.csv = "dt,error_order1,error_order2\n";
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < dts.size(); ++i) {
        r.csv += format_double(dts[i] * factor) + "," + format_double(err1[i]) + "," +
                 format_double(err2[i]) + "\n";
        rows.push_back({{"dt", dts[i] * factor}, {"error_order1", err1[i]}, {"error_order2", err2[i]}});
    }
    r.results = {{"slope_order1", slope1},
                 {"slope_order2", slope2},
                 {"second_order_smaller", second_smaller},
                 {"omega_e_used", p.omega_e}};
    r.json = {{"rows", rows}, {"slope_order1", slope1}, {"slope_order2", slope2}};
    const bool ok = std::abs(slope1 - 2.0) <= kSlopeTolerance1 &&
                    std::abs(slope2 - 3.0) <= kSlopeTolerance2 && second_smaller;
    r.exit_code = ok ? kExitOk : kExitThreshold;
    r.summary = "trotter-compare: slope order 1 = " + format_double(slope1) +
                ", order 2 = " + format_double(slope2) + (ok ? "" : " (outside tolerance)");
    return r;
}

/// Register state after `steps` Trotter steps from the configured initial state.
struct TrotterRun {
    double dt = 0.0;
    Circuit prep{kRegisterQubits};
    Circuit step{kRegisterQubits};
};

TrotterRun setup_trotter(const RunConfig &c) {
    TrotterRun run;
    run.dt = resolved_dt(c);
    run.prep = prepare_initial_state(parse_initial_state(c.initial_state));
    run.step = build_step(c.params, c.order, run.dt);
    return run;
}

CommandResult cmd_populations(const RunConfig &c) {
    const TrotterRun run = setup_trotter(c);
    StateVector reg = run_circuit(run.prep, StateVector(kRegisterQubits));
    Trajectory traj({"P_g", "P_e", "P_f", "leakage"});
    double max_leak = 0.0;
    double max_pf = 0.0;
    for (std::size_t k = 0; k <= c.steps; ++k) {
        if (k > 0) {
            reg = run_circuit(run.step, reg);
        }
        const LevelPopulations pop = populations(drop_ancilla(reg, kLeakageTolerance));
        max_leak = std::max(max_leak, pop.leakage);
        max_pf = std::max(max_pf, pop.f);
        traj.push_back(static_cast<double>(k) * run.dt, {pop.g, pop.e, pop.f, pop.leakage});
    }
    CommandResult r;
    set_trajectory(r, traj.rescaled_time(time_factor(c)));
    r.results = {{"dt", run.dt}, {"max_leakage", max_leak}, {"max_P_f", max_pf}};
    if (max_leak > kLeakageTolerance) {
        r.exit_code = kExitThreshold;
    }
    r.summary = "populations: order " + std::to_string(c.order) + ", " + std::to_string(c.steps) +
                " steps, max leakage " + format_double(max_leak);
    return r;
}

CommandResult cmd_fidelity(const RunConfig &c) {
    if (c.calib_paths.empty()) {
        throw ValidationError("fidelity: at least one --calib file is required");
    }
    std::vector<CalibrationData> calibs;
    for (const std::string &path : c.calib_paths) {
        calibs.push_back(CalibrationData::load(path));
    }
    std::vector<FidelityRow> rows;
    if (c.profile == FidelityProfile::Reference) {
        rows = backend_comparison(calibs, first_order_reference_units(), second_order_reference_units());
    } else {
        const double dt = resolved_dt(c);
        rows = backend_comparison(calibs, build_step(c.params, 1, dt), build_step(c.params, 2, dt),
                                  c.measured_qubits);
    }
    CommandResult r;
    r.csv = fidelity_table_csv(rows);
    r.json = nlohmann::json::array();
    for (const FidelityRow &row : rows) {
        r.json.push_back({{"backend", row.backend},
                          {"order", row.order},
                          {"n_1q", row.budget.units.n_1q},
                          {"n_2q", row.budget.units.n_2q},
                          {"n_meas", row.budget.units.n_meas},
                          {"E_S", row.budget.e_s},
                          {"E_T", row.budget.e_t},
                          {"E_M", row.budget.e_m},
                          {"F", row.fidelity}});
    }
    r.summary = "fidelity: " + std::to_string(calibs.size()) + " backend(s)";
    return r;
}

CommandResult cmd_sample(const RunConfig &c) {
    if (c.shots == 0) {
        throw ValidationError("sample: shots must be positive");
    }
    const TrotterRun run = setup_trotter(c);
    Circuit full(kRegisterQubits, "sample");
    full.append(run.prep);
    full.append(compose_steps(run.step, c.steps));
    const StateVector encoded = drop_ancilla(run_circuit(full, StateVector(kRegisterQubits)));
    MeasurementHistogram h = sample_measurements(encoded, c.shots, c.seed);
    if (c.readout_error > 0.0) {
        // Readout flips use their own stream derived from the seed.
        h = apply_readout_error(h, c.readout_error, c.seed ^ 0x9e3779b97f4a7c15ULL);
    }
    CommandResult r;
    r.json = h.to_json();
    r.csv = "bitstring,count\n";
    for (const auto &[key, n] : h.counts) {
        r.csv += key + "," + std::to_string(n) + "\n";
    }
    r.results = {{"dt", run.dt}, {"leakage", leakage_probability(encoded)}};
    r.summary = "sample: " + std::to_string(c.shots) + " shots, " + std::to_string(h.counts.size()) +
                " distinct outcomes";
    return r;
}

CommandResult cmd_plan(const RunConfig &c) {
    const TrotterPlan plan = make_plan(c.params, c.order, resolved_dt(c), c.steps);
    CommandResult r;
    r.json = plan.to_json();
    r.csv = "term,coefficient,duration,rz_angle\n";
    for (const AngleRow &row : plan.angle_table) {
        r.csv += row.label + "," + format_double(row.coefficient) + "," + format_double(row.duration) +
                 "," + format_double(row.angle) + "\n";
    }
    r.summary = "plan: order " + std::to_string(plan.order) + ", " +
                std::to_string(plan.angle_table.size()) + " terms";
    return r;
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file " + path);
    }
    out << text;
    if (!out) {
        throw std::runtime_error("failed writing output file " + path);
    }
}

}  // namespace

std::string_view to_string(Command c) {
    for (const CommandName &n : kCommandNames) {
        if (n.command == c) {
            return n.name;
        }
    }
    return "unknown";
}

Command parse_command(std::string_view text) {
    for (const CommandName &n : kCommandNames) {
        if (n.name == text) {
            return n.command;
        }
    }
    throw ValidationError("unknown command '" + std::string(text) + "'");
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j = {
        {"command", to_string(command)},
        {"params", params.to_json()},
        {"order", order},
        {"steps", steps},
        {"phase_budget", phase_budget},
        {"shots", shots},
        {"seed", seed},
        {"readout_error", readout_error},
        {"calib", calib_paths},
        {"profile", profile == FidelityProfile::Reference ? "reference" : "built"},
        {"measured_qubits", measured_qubits},
        {"initial_state", initial_state},
        {"fock_n", fock_n},
        {"lambda_initial", lambda_initial},
        {"samples", samples},
        {"grid_points", grid_points},
        {"format", format == OutputFormat::Csv ? "csv" : "json"},
        {"time_unit", time_unit == TimeUnit::Seconds ? "s" : "gt"},
    };
    j["dt"] = dt ? nlohmann::json(*dt) : nlohmann::json(nullptr);
    j["t_end"] = t_end ? nlohmann::json(*t_end) : nlohmann::json(nullptr);
    j["detuning"] = detuning ? nlohmann::json(*detuning) : nlohmann::json(nullptr);
    return j;
}

CommandResult run_command(const RunConfig &config) {
    config.params.validate();
    if (config.order != 1 && config.order != 2) {
        throw ValidationError("order must be 1 or 2");
    }
    switch (config.command) {
        case Command::Rabi:
            return cmd_rabi(config);
        case Command::Entropy:
            return cmd_entropy(config);
        case Command::Lambda:
            return cmd_lambda(config);
        case Command::TrotterCompare:
            return cmd_trotter_compare(config);
        case Command::Populations:
            return cmd_populations(config);
        case Command::Fidelity:
            return cmd_fidelity(config);
        case Command::Sample:
            return cmd_sample(config);
        case Command::Plan:
            return cmd_plan(config);
    }
    throw ValidationError("unhandled command");
}

nlohmann::json make_metadata(const RunConfig &config, const CommandResult &result) {
    return {{"tool", "jcsim"},
            {"version", kVersion},
            {"command", to_string(config.command)},
            {"config", config.to_json()},
            {"kernels", kernels::active_kernels().name},
            {"results", result.results}};
}

std::string render_data(const RunConfig &config, const CommandResult &result) {
    return config.format == OutputFormat::Csv ? result.csv : result.json.dump(2) + "\n";
}

void write_outputs(const RunConfig &config, const CommandResult &result) {
    const nlohmann::json meta = make_metadata(config, result);
    if (config.out_path.empty()) {
        std::cout << render_data(config, result);
        std::cerr << meta.dump() << "\n";
        return;
    }
    if (config.format == OutputFormat::Json) {
        const nlohmann::json doc = {{"metadata", meta}, {"data", result.json}};
        write_file(config.out_path, doc.dump(2) + "\n");
    } else {
        write_file(config.out_path, result.csv);
        write_file(config.out_path + ".meta.json", meta.dump(2) + "\n");
    }
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ValidationError("fit_loglog_slope: need at least two (x, y) pairs");
    }
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            throw ValidationError("fit_loglog_slope: values must be positive");
        }
        sx += std::log(x[i]);
        sy += std::log(y[i]);
    }
    const double n = static_cast<double>(x.size());
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(y[i]) - my);
    }
    if (sxx == 0.0) {
        throw ValidationError("fit_loglog_slope: degenerate grid (all x equal)");
    }
    return sxy / sxx;
}

std::vector<double> uniform_times(double t_end, std::size_t samples) {
    if (!std::isfinite(t_end) || t_end <= 0.0) {
        throw ValidationError("time grid: t_end must be positive");
    }
    if (samples < 2) {
        throw ValidationError("time grid: need at least 2 samples");
    }
    std::vector<double> t(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        t[i] = t_end * static_cast<double>(i) / static_cast<double>(samples - 1);
    }
    return t;
}

}  // namespace jcsim
