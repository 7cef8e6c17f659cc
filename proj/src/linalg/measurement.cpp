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

#include "jcsim/measurement.hpp"

#include <algorithm>
#include <vector>

#include "jcsim/errors.hpp"
#include "jcsim/rng.hpp"

namespace jcsim {

std::string bitstring(std::uint64_t index, std::size_t qubit_count) {
    std::string s(qubit_count, '0');
    for (std::size_t q = 0; q < qubit_count; ++q) {
        if ((index >> q) & 1U) {
            s[qubit_count - 1 - q] = '1';
        }
    }
    return s;
}

std::uint64_t MeasurementHistogram::count(const std::string &key) const {
    const auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
}

nlohmann::json MeasurementHistogram::to_json() const {
    nlohmann::json counts_json = nlohmann::json::object();
    for (const auto &[key, n] : counts) {
        counts_json[key] = n;
    }
    return {{"shots", shots}, {"counts", counts_json}};
}

MeasurementHistogram MeasurementHistogram::from_json(const nlohmann::json &j) {
    MeasurementHistogram h;
    if (!j.contains("shots") || !j.at("shots").is_number_unsigned()) {
        throw ValidationError("histogram: missing or invalid field 'shots'");
    }
    if (!j.contains("counts") || !j.at("counts").is_object()) {
        throw ValidationError("histogram: missing or invalid field 'counts'");
    }
    h.shots = j.at("shots").get<std::uint64_t>();
    std::uint64_t total = 0;
    for (const auto &[key, value] : j.at("counts").items()) {
        if (h.qubit_count == 0) {
            h.qubit_count = key.size();
        }
        if (key.size() != h.qubit_count ||
            key.find_first_not_of("01") != std::string::npos) {
            throw ValidationError("histogram: malformed bitstring key '" + key + "'");
        }
        if (!value.is_number_unsigned()) {
            throw ValidationError("histogram: count for '" + key + "' is not a non-negative integer");
        }
        h.counts[key] = value.get<std::uint64_t>();
        total += h.counts[key];
    }
    if (total != h.shots) {
        throw ValidationError("histogram: counts do not sum to shots");
    }
    return h;
}

MeasurementHistogram sample_measurements(const StateVector &state, std::uint64_t shots,
                                         std::uint64_t seed) {
    if (shots == 0) {
        throw ValidationError("sample_measurements: shots must be positive");
    }
    if (!state.is_normalized(1e-10)) {
        throw ValidationError("sample_measurements: state is not normalized");
    }
    std::vector<double> cdf(state.dim());
    double acc = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        acc += state.probability(i);
        cdf[i] = acc;
    }
    std::vector<std::uint64_t> tally(state.dim(), 0);
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) {
            --it;
        }
        ++tally[static_cast<std::size_t>(it - cdf.begin())];
    }
    MeasurementHistogram h;
    h.qubit_count = state.qubit_count();
    h.shots = shots;
    for (std::size_t i = 0; i < tally.size(); ++i) {
        if (tally[i] > 0) {
            h.counts[bitstring(i, state.qubit_count())] = tally[i];
        }
    }
    return h;
}

}  // namespace jcsim
