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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "jcsim/circuit.hpp"
#include "jcsim/measurement.hpp"

namespace jcsim {

/// Per-backend median error rates driving the exponential fidelity model.
struct CalibrationData {
    std::string backend_name;
    double median_1q_error = 0.0;
    double median_2q_error = 0.0;
    double median_readout_error = 0.0;
    /// Two-qubit units charged for one RCCX.
    std::size_t rccx_2q_count = 3;

    /// Probabilities in [0, 0.5), rccx_2q_count >= 1.
    void validate() const;

    /// {"backend", "median_1q_error", "median_2q_error", "median_readout_error",
    ///  "rccx_2q_count"}; errors name the offending field.
    static CalibrationData from_json(const nlohmann::json &j);
    static CalibrationData load(const std::filesystem::path &path);
    nlohmann::json to_json() const;
};

/// ibm_torino medians (also in data/calibrations/ibm_torino.json).
CalibrationData torino_calibration();

struct ErrorUnits {
    std::size_t n_1q = 0;
    std::size_t n_2q = 0;
    std::size_t n_meas = 0;

    ErrorUnits &operator+=(const ErrorUnits &o);
    friend ErrorUnits operator+(ErrorUnits a, const ErrorUnits &b) { return a += b; }
    friend bool operator==(const ErrorUnits &, const ErrorUnits &) = default;
};

/// 1 unit per 1-qubit gate, 1 per 2-qubit gate, rccx_2q_count per RCCX.
ErrorUnits count_error_units(const Circuit &c, const CalibrationData &calib,
                             std::size_t measured_qubits);

/// Five single-qubit gates and two RCCX blocks on three qubits, the
/// first-order gate profile behind the torino estimate.
Circuit first_order_reference_profile();

/// Unit counts for the first-order reference profile (5, 6, 3 with 3 units per RCCX).
ErrorUnits first_order_reference_units();

/// Inferred second-order counts (38, 45, 4); with the torino medians they give
/// F = 0.7871. See data/calibrations/README.md.
ErrorUnits second_order_reference_units();

struct ErrorBudget {
    double e_s = 0.0;
    double e_t = 0.0;
    double e_m = 0.0;
    ErrorUnits units;
};

ErrorBudget make_error_budget(const ErrorUnits &units, const CalibrationData &calib);

/// exp(-(e_s + e_t + e_m)).
double fidelity_estimate(const ErrorBudget &budget);

/// prod (1 - p_i) over the same units.
double product_form_fidelity(const ErrorUnits &units, const CalibrationData &calib);

struct FidelityRow {
    std::string backend;
    int order = 1;
    ErrorBudget budget;
    double fidelity = 0.0;
};

/// One row per backend and order; rows grouped by order (1 then 2), each
/// group sorted by descending fidelity.
std::vector<FidelityRow> backend_comparison(std::span<const CalibrationData> calibs,
                                            const ErrorUnits &first, const ErrorUnits &second);

/// Same, counting units from built circuits.
std::vector<FidelityRow> backend_comparison(std::span<const CalibrationData> calibs,
                                            const Circuit &first, const Circuit &second,
                                            std::size_t measured_qubits);

/// `backend,order,n_1q,n_2q,n_meas,E_S,E_T,E_M,F`; F to 4 significant figures.
std::string fidelity_table_csv(std::span<const FidelityRow> rows);

/// Symmetric bit-flip readout channel: every recorded bit of every shot flips
/// independently with probability `flip_prob`.
MeasurementHistogram apply_readout_error(const MeasurementHistogram &h, double flip_prob,
                                         std::uint64_t seed);

}  // namespace jcsim
