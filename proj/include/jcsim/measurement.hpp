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
#include <map>
#include <string>

#include "json.hpp"

#include "jcsim/state_vector.hpp"

namespace jcsim {

/// Display string of basis `index`, ordered q_{n-1} ... q_0.
std::string bitstring(std::uint64_t index, std::size_t qubit_count);

struct MeasurementHistogram {
    std::size_t qubit_count = 0;
    std::uint64_t shots = 0;
    /// Keyed by bitstring(); absent keys have zero counts.
    std::map<std::string, std::uint64_t> counts;

    std::uint64_t count(const std::string &key) const;

    /// {"shots": N, "counts": {"q2q1q0": n, ...}}
    nlohmann::json to_json() const;
    static MeasurementHistogram from_json(const nlohmann::json &j);

    friend bool operator==(const MeasurementHistogram &, const MeasurementHistogram &) = default;
};

/// Multinomial draw of `shots` outcomes from |amplitude|^2. Deterministic for
/// a fixed seed.
MeasurementHistogram sample_measurements(const StateVector &state, std::uint64_t shots,
                                         std::uint64_t seed);

}  // namespace jcsim
