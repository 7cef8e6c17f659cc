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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "gtest/gtest.h"

#include "jcsim/errors.hpp"
#include "jcsim/trotter.hpp"

using namespace jcsim;

namespace {

CalibrationData fixture(const std::string &name, double a, double b, double c) {
    return CalibrationData{name, a, b, c, 3};
}

double round_sig4(double x) {
    const double scale = std::pow(10.0, 3 - std::floor(std::log10(std::abs(x))));
    return std::round(x * scale) / scale;
}

}  // namespace

TEST(calibration, json_round_trip_and_errors) {
    const CalibrationData t = torino_calibration();
    const CalibrationData back = CalibrationData::from_json(t.to_json());
    ASSERT_EQ(back.backend_name, "ibm_torino");
    ASSERT_EQ(back.median_2q_error, 2.437e-3);
    nlohmann::json j = t.to_json();
    j.erase("median_2q_error");
    try {
        CalibrationData::from_json(j);
        FAIL();
    } catch (const ValidationError &e) {
        ASSERT_NE(std::string(e.what()).find("median_2q_error"), std::string::npos);
    }
    j = t.to_json();
    j["median_readout_error"] = 0.7;
    ASSERT_THROW(CalibrationData::from_json(j), ValidationError);
    j = t.to_json();
    j["rccx_2q_count"] = 0;
    ASSERT_THROW(CalibrationData::from_json(j), ValidationError);
    j = t.to_json();
    j.erase("rccx_2q_count");
    ASSERT_EQ(CalibrationData::from_json(j).rccx_2q_count, 3u);
}

TEST(calibration, load_reports_path) {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / "jcsim_bad_calib.json";
    {
        std::ofstream out(path);
        out << "{\"backend\": \"x\", \"median_1q_error\": \"high\"}";
    }
    try {
        CalibrationData::load(path);
        FAIL();
    } catch (const ValidationError &e) {
        const std::string msg = e.what();
        ASSERT_NE(msg.find(path.string()), std::string::npos);
        ASSERT_NE(msg.find("median_1q_error"), std::string::npos);
    }
    std::filesystem::remove(path);
    ASSERT_THROW(CalibrationData::load(path), std::runtime_error);
}

TEST(error_units, counting_rule) {
    const CalibrationData calib = torino_calibration();
    ASSERT_EQ(count_error_units(Circuit(3), calib, 0), (ErrorUnits{0, 0, 0}));
    Circuit c(3);
    c.append(Gate::cx(0, 1)).append(Gate::cx(1, 2)).append(Gate::rccx(0, 1, 2));
    ASSERT_EQ(count_error_units(c, calib, 0).n_2q, 5u);
    ASSERT_EQ(count_error_units(first_order_reference_profile(), calib, 3), first_order_reference_units());
    ASSERT_EQ(first_order_reference_units(), (ErrorUnits{5, 6, 3}));
}

TEST(error_units, additive_under_concatenation) {
    const CalibrationData calib = torino_calibration();
    ModelParams p = ModelParams::defaults();
    const Circuit a = build_step(p, 1, 1e-6);
    const Circuit b = build_step(p, 2, 1e-6);
    Circuit ab(kRegisterQubits);
    ab.append(a).append(b);
    ASSERT_EQ(count_error_units(ab, calib, 0), count_error_units(a, calib, 0) + count_error_units(b, calib, 0));
}

TEST(fidelity, torino_arithmetic) {
    const ErrorBudget b = make_error_budget(first_order_reference_units(), torino_calibration());
    ASSERT_EQ(round_sig4(b.e_s), 1.543e-3);
    ASSERT_EQ(round_sig4(b.e_t), 1.462e-2);
    ASSERT_EQ(round_sig4(b.e_m), 8.85e-2);
    ASSERT_NEAR(fidelity_estimate(b), 0.9007, 1e-4);
    ASSERT_NEAR(std::exp(-0.10466), 0.9007, 1e-4);
    ASSERT_LT(std::abs(product_form_fidelity(b.units, torino_calibration()) - fidelity_estimate(b)), 0.006);
}

TEST(fidelity, zero_budget_and_monotonic) {
    ASSERT_EQ(fidelity_estimate({}), 1.0);
    ASSERT_THROW(fidelity_estimate({-0.1, 0.0, 0.0, {}}), ValidationError);
    for (double x = 0.0; x < 0.5; x += 0.05) {
        const ErrorBudget base{x, x, x, {}};
        ASSERT_GT(fidelity_estimate(base), fidelity_estimate({x + 0.01, x, x, {}}));
        ASSERT_GT(fidelity_estimate(base), fidelity_estimate({x, x + 0.01, x, {}}));
        ASSERT_GT(fidelity_estimate(base), fidelity_estimate({x, x, x + 0.01, {}}));
    }
}

TEST(fidelity, backend_table) {
    const std::vector<CalibrationData> calibs = {
        torino_calibration(),
        fixture("ibm_marrakesh", 2.5e-4, 1.12e-3, 1.585e-2),
        fixture("ibm_fez", 2.8e-4, 1.149e-3, 1.609e-2),
    };
    const std::vector<FidelityRow> rows =
        backend_comparison(calibs, first_order_reference_units(), second_order_reference_units());
    ASSERT_EQ(rows.size(), 6u);
    const std::vector<std::pair<std::string, double>> expect = {
        {"ibm_marrakesh", 0.946}, {"ibm_fez", 0.945}, {"ibm_torino", 0.900},
        {"ibm_marrakesh", 0.884}, {"ibm_fez", 0.881}, {"ibm_torino", 0.787},
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ASSERT_EQ(rows[i].backend, expect[i].first);
        ASSERT_EQ(rows[i].order, i < 3 ? 1 : 2);
        ASSERT_NEAR(rows[i].fidelity, expect[i].second, 0.003) << rows[i].backend;
    }
    for (std::size_t i = 0; i < 3; ++i) {
        const auto second = std::find_if(rows.begin() + 3, rows.end(),
                                         [&](const FidelityRow &r) { return r.backend == rows[i].backend; });
        ASSERT_LE(second->fidelity, rows[i].fidelity);
    }
    const std::string csv = fidelity_table_csv(rows);
    ASSERT_EQ(csv.substr(0, csv.find('\n')), "backend,order,n_1q,n_2q,n_meas,E_S,E_T,E_M,F");
    ASSERT_NE(csv.find("ibm_torino,1,5,6,3,0.001543,"), std::string::npos);
}

TEST(fidelity, single_and_identical_backends) {
    const CalibrationData t = torino_calibration();
    const std::vector<CalibrationData> one = {t};
    ASSERT_EQ(backend_comparison(one, first_order_reference_units(), second_order_reference_units()).size(), 2u);
    const std::vector<CalibrationData> two = {t, t};
    const std::vector<FidelityRow> rows =
        backend_comparison(two, first_order_reference_units(), second_order_reference_units());
    ASSERT_EQ(rows[0].fidelity, rows[1].fidelity);
    ASSERT_THROW(backend_comparison(std::span<const CalibrationData>{}, ErrorUnits{}, ErrorUnits{}),
                 ValidationError);
}

TEST(fidelity, built_circuits) {
    const std::vector<CalibrationData> calibs = {torino_calibration()};
    const ModelParams p = ModelParams::defaults();
    const Circuit first = build_step(p, 1, 1e-6);
    const Circuit second = build_step(p, 2, 1e-6);
    const std::vector<FidelityRow> rows = backend_comparison(calibs, first, second, 3);
    ASSERT_EQ(rows[0].budget.units, count_error_units(first, calibs[0], 3));
    ASSERT_LE(rows[1].fidelity, rows[0].fidelity);
}

TEST(readout, zero_flip_is_identity) {
    const MeasurementHistogram h = sample_measurements(StateVector::basis(3, 2), 500, 1);
    ASSERT_EQ(apply_readout_error(h, 0.0, 9), h);
    const MeasurementHistogram once = apply_readout_error(h, 0.1, 9);
    ASSERT_EQ(apply_readout_error(once, 0.0, 4), once);
    ASSERT_THROW(apply_readout_error(h, 0.5, 9), ValidationError);
}

TEST(readout, binomial_flip_rate) {
    const std::uint64_t shots = 100000;
    const MeasurementHistogram clean = sample_measurements(StateVector(3), shots, 3);
    const MeasurementHistogram noisy = apply_readout_error(clean, 0.03, 5);
    ASSERT_EQ(noisy.shots, shots);
    std::uint64_t total = 0;
    for (const auto &[k, n] : noisy.counts) {
        total += n;
    }
    ASSERT_EQ(total, shots);
    const double p = 1.0 - std::pow(0.97, 3);
    ASSERT_NEAR(p, 0.0873, 1e-4);
    const double frac = 1.0 - static_cast<double>(noisy.count("000")) / shots;
    ASSERT_LT(std::abs(frac - p), 5 * std::sqrt(p * (1 - p) / shots));
    ASSERT_EQ(apply_readout_error(clean, 0.03, 5), noisy);
}
