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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "jcsim/jc_models.hpp"
#include "jcsim/trotter.hpp"

namespace jcsim {

inline constexpr std::string_view kVersion = "0.1.0";

/// Process exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitThreshold = 2;

enum class Command { Rabi, Entropy, Lambda, TrotterCompare, Populations, Fidelity, Sample, Plan };
enum class OutputFormat { Csv, Json };
enum class TimeUnit { Seconds, CouplingTime };
enum class FidelityProfile { Reference, Built };

std::string_view to_string(Command c);
Command parse_command(std::string_view text);

struct RunConfig {
    Command command = Command::Rabi;
    ModelParams params = ModelParams::defaults();

    int order = 1;
    /// Trotter step; choose_dt(g_ge, phase_budget) when unset.
    std::optional<double> dt;
    std::size_t steps = 10;
    double phase_budget = kDefaultPhaseBudget;

    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
    double readout_error = 0.0;

    std::vector<std::string> calib_paths;
    FidelityProfile profile = FidelityProfile::Reference;
    std::size_t measured_qubits = 3;

    /// Encoded initial state for Trotter runs, "<level><n>" or "<level>~<theta>".
    std::string initial_state = "e0";
    /// Fock number for rabi.
    std::size_t fock_n = 0;
    /// Lambda initial condition: "1", "2", "3" or "dark".
    std::string lambda_initial = "1";
    /// Output time grid for rabi, entropy and lambda; t_end defaults to 10/g.
    std::size_t samples = 200;
    std::optional<double> t_end;
    /// Added to omega_e for trotter-compare; defaults to g_ge. Zero detuning on
    /// the default ladder makes all terms commute.
    std::optional<double> detuning;
    std::size_t grid_points = 4;

    std::string out_path;
    OutputFormat format = OutputFormat::Csv;
    TimeUnit time_unit = TimeUnit::Seconds;

    nlohmann::json to_json() const;
};

struct CommandResult {
    /// Exactly one of these is the data section, chosen by the config format.
    std::string csv;
    nlohmann::json json;
    /// Derived quantities (slopes, maxima) recorded next to the config.
    nlohmann::json results = nlohmann::json::object();
    int exit_code = kExitOk;
    std::string summary;
};

/// Runs one command. Throws ValidationError for bad inputs.
CommandResult run_command(const RunConfig &config);

/// {"tool", "version", "command", "config", "results"}.
nlohmann::json make_metadata(const RunConfig &config, const CommandResult &result);

/// The data section in the configured format.
std::string render_data(const RunConfig &config, const CommandResult &result);

/// JSON output: {"metadata": ..., "data": ...} at out_path. CSV output: data
/// at out_path and metadata at out_path + ".meta.json". An empty out_path
/// writes data to stdout and metadata to stderr.
void write_outputs(const RunConfig &config, const CommandResult &result);

/// Least-squares slope of log(y) against log(x). Needs >= 2 distinct x and
/// positive values.
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

/// Uniform grid of `samples` points over [0, t_end].
std::vector<double> uniform_times(double t_end, std::size_t samples);

}  // namespace jcsim
