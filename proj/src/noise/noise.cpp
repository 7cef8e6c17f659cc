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

#include "jcsim/noise.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "jcsim/errors.hpp"
#include "jcsim/rng.hpp"
#include "jcsim/trajectory.hpp"

namespace jcsim {
namespace {

void check_probability(double p, const char *field) {
    if (!std::isfinite(p) || p < 0.0 || p >= 0.5) {
        throw ValidationError(std::string("calibration: field '") + field +
                              "' must be a probability in [0, 0.5)");
    }
}

double read_probability(const nlohmann::json &j, const char *field) {
    if (!j.contains(field) || !j.at(field).is_number()) {
        throw ValidationError(std::string("calibration: missing or non-numeric field '") + field + "'");
    }
    return j.at(field).get<double>();
}

std::string format_sig4(double x) {
    std::ostringstream os;
    os.precision(4);
    os << x;
    return os.str();
}

}  // namespace

template <class UnitsFor>
std::vector<FidelityRow> compare_backends(std::span<const CalibrationData> calibs, UnitsFor units_for) {
    if (calibs.empty()) {
        throw ValidationError("backend_comparison: at least one backend is required");
    }
    std::vector<FidelityRow> rows;
    for (int order : {1, 2}) {
        const auto group_start = static_cast<std::ptrdiff_t>(rows.size());
        for (const CalibrationData &c : calibs) {
            c.validate();
            FidelityRow r{c.backend_name, order, make_error_budget(units_for(c, order), c), 0.0};
            r.fidelity = fidelity_estimate(r.budget);
            rows.push_back(std::move(r));
        }
        std::stable_sort(rows.begin() + group_start, rows.end(),
                         [](const FidelityRow &a, const FidelityRow &b) { return a.fidelity > b.fidelity; });
    }
    return rows;
}

void CalibrationData::validate() const {
    check_probability(median_1q_error, "median_1q_error");
    check_probability(median_2q_error, "median_2q_error");
    check_probability(median_readout_error, "median_readout_error");
    if (rccx_2q_count < 1) {
        throw ValidationError("calibration: field 'rccx_2q_count' must be >= 1");
    }
}

CalibrationData CalibrationData::from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw ValidationError("calibration: expected a JSON object");
    }
    CalibrationData c;
    if (!j.contains("backend") || !j.at("backend").is_string()) {
        throw ValidationError("calibration: missing or non-string field 'backend'");
    }
    c.backend_name = j.at("backend").get<std::string>();
    c.median_1q_error = read_probability(j, "median_1q_error");
    c.median_2q_error = read_probability(j, "median_2q_error");
    c.median_readout_error = read_probability(j, "median_readout_error");
    if (j.contains("rccx_2q_count")) {
        const auto &v = j.at("rccx_2q_count");
        if (!v.is_number_integer() || v.get<long long>() < 1) {
            throw ValidationError("calibration: field 'rccx_2q_count' must be an integer >= 1");
        }
        c.rccx_2q_count = v.get<std::size_t>();
    }
    c.validate();
    return c;
}

CalibrationData CalibrationData::load(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open calibration file " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error &e) {
        throw ValidationError("calibration file " + path.string() + ": " + e.what());
    }
    try {
        return from_json(j);
    } catch (const ValidationError &e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

nlohmann::json CalibrationData::to_json() const {
    return {{"backend", backend_name},
            {"median_1q_error", median_1q_error},
            {"median_2q_error", median_2q_error},
            {"median_readout_error", median_readout_error},
            {"rccx_2q_count", rccx_2q_count}};
}

CalibrationData torino_calibration() {
    return CalibrationData{"ibm_torino", 3.086e-4, 2.437e-3, 2.95e-2, 3};
}

ErrorUnits &ErrorUnits::operator+=(const ErrorUnits &o) {
    n_1q += o.n_1q;
    n_2q += o.n_2q;
    n_meas += o.n_meas;
    return *this;
}

ErrorUnits count_error_units(const Circuit &c, const CalibrationData &calib,
                             std::size_t measured_qubits) {
    ErrorUnits u;
    for (const Gate &g : c.gates()) {
        switch (arity(g.kind)) {
            case 1:
                ++u.n_1q;
                break;
            case 2:
                ++u.n_2q;
                break;
            default:
                u.n_2q += calib.rccx_2q_count;
                break;
        }
    }
    u.n_meas = measured_qubits;
    return u;
}

Circuit first_order_reference_profile() {
    Circuit c(3, "first-order reference profile");
    c.append(Gate::rz(0.1, 0));
    c.append(Gate::rz(0.1, 1));
    c.append(Gate::rz(0.1, 2));
    c.append(Gate::rccx(0, 1, 2));
    c.append(Gate::h(2));
    c.append(Gate::rz(0.1, 2));
    c.append(Gate::rccx(0, 1, 2));
    return c;
}

ErrorUnits first_order_reference_units() { return {5, 6, 3}; }

ErrorUnits second_order_reference_units() { return {38, 45, 4}; }

ErrorBudget make_error_budget(const ErrorUnits &units, const CalibrationData &calib) {
    ErrorBudget b;
    b.units = units;
    b.e_s = static_cast<double>(units.n_1q) * calib.median_1q_error;
    b.e_t = static_cast<double>(units.n_2q) * calib.median_2q_error;
    b.e_m = static_cast<double>(units.n_meas) * calib.median_readout_error;
    return b;
}

double fidelity_estimate(const ErrorBudget &budget) {
    if (budget.e_s < 0.0 || budget.e_t < 0.0 || budget.e_m < 0.0) {
        throw ValidationError("fidelity_estimate: error contributions must be non-negative");
    }
    return std::exp(-(budget.e_s + budget.e_t + budget.e_m));
}

double product_form_fidelity(const ErrorUnits &units, const CalibrationData &calib) {
    return std::pow(1.0 - calib.median_1q_error, static_cast<double>(units.n_1q)) *
           std::pow(1.0 - calib.median_2q_error, static_cast<double>(units.n_2q)) *
           std::pow(1.0 - calib.median_readout_error, static_cast<double>(units.n_meas));
}

std::vector<FidelityRow> backend_comparison(std::span<const CalibrationData> calibs,
                                            const ErrorUnits &first, const ErrorUnits &second) {
    return compare_backends(calibs, [&](const CalibrationData &, int order) {
        return order == 1 ? first : second;
    });
}

std::vector<FidelityRow> backend_comparison(std::span<const CalibrationData> calibs,
                                            const Circuit &first, const Circuit &second,
                                            std::size_t measured_qubits) {
    return compare_backends(calibs, [&](const CalibrationData &c, int order) {
        return count_error_units(order == 1 ? first : second, c, measured_qubits);
    });
}

std::string fidelity_table_csv(std::span<const FidelityRow> rows) {
    std::string out = "backend,order,n_1q,n_2q,n_meas,E_S,E_T,E_M,F\n";
    for (const FidelityRow &r : rows) {
        out += r.backend + "," + std::to_string(r.order) + "," + std::to_string(r.budget.units.n_1q) +
               "," + std::to_string(r.budget.units.n_2q) + "," +
               std::to_string(r.budget.units.n_meas) + "," + format_double(r.budget.e_s) + "," +
               format_double(r.budget.e_t) + "," + format_double(r.budget.e_m) + "," +
               format_sig4(r.fidelity) + "\n";
    }
    return out;
}

MeasurementHistogram apply_readout_error(const MeasurementHistogram &h, double flip_prob,
                                         std::uint64_t seed) {
    if (!std::isfinite(flip_prob) || flip_prob < 0.0 || flip_prob >= 0.5) {
        throw ValidationError("apply_readout_error: flip probability must lie in [0, 0.5)");
    }
    if (flip_prob == 0.0) {
        return h;
    }
    MeasurementHistogram out;
    out.qubit_count = h.qubit_count;
    out.shots = h.shots;
    Rng rng(seed);
    for (const auto &[key, n] : h.counts) {
        for (std::uint64_t shot = 0; shot < n; ++shot) {
            std::string flipped = key;
            for (char &bit : flipped) {
                if (rng.uniform() < flip_prob) {
                    bit = bit == '0' ? '1' : '0';
                }
            }
            ++out.counts[flipped];
        }
    }
    return out;
}

}  // namespace jcsim
