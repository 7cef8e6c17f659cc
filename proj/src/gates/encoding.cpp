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

#include "jcsim/encoding.hpp"

#include <string>

#include "jcsim/errors.hpp"

namespace jcsim {

std::string_view to_string(AtomLevel level) {
    switch (level) {
    case AtomLevel::G: return "g";
    case AtomLevel::E: return "e";
    case AtomLevel::F: return "f";
    }
    return "?";
}

AtomLevel parse_atom_level(std::string_view text) {
    if (text == "g" || text == "00") return AtomLevel::G;
    if (text == "e" || text == "10") return AtomLevel::E;
    if (text == "f" || text == "11") return AtomLevel::F;
    if (text == "01") {
        throw ValidationError("atomic pattern (q1,q2) = (0,1) is excluded by the encoding");
    }
    throw ValidationError("unknown atomic level '" + std::string(text) + "'");
}

int ladder_index(AtomLevel level) { return static_cast<int>(level); }

std::string to_string(const BasisLabel &label) {
    return "|" + std::string(to_string(label.atom_level)) + "," + std::to_string(label.photon_n) +
           ">";
}

std::size_t encode_basis(const BasisLabel &label) {
    if (label.photon_n != 0 && label.photon_n != 1) {
        throw ValidationError("encode_basis: photon number must be 0 or 1");
    }
    std::size_t q1 = 0;
    std::size_t q2 = 0;
    switch (label.atom_level) {
    case AtomLevel::G: break;
    case AtomLevel::E: q1 = 1; break;
    case AtomLevel::F: q1 = 1; q2 = 1; break;
    }
    return static_cast<std::size_t>(label.photon_n) | (q1 << kAtomQubit1) | (q2 << kAtomQubit2);
}

std::optional<BasisLabel> decode_basis(std::size_t index) {
    if (index >= 8) {
        return std::nullopt;
    }
    const int n = static_cast<int>(index & 1U);
    const bool q1 = (index >> kAtomQubit1) & 1U;
    const bool q2 = (index >> kAtomQubit2) & 1U;
    if (!q1 && q2) {
        return std::nullopt;
    }
    const AtomLevel level = !q1 ? AtomLevel::G : (q2 ? AtomLevel::F : AtomLevel::E);
    return BasisLabel{n, level};
}

bool is_valid_pattern(std::size_t index) { return decode_basis(index).has_value(); }

std::array<BasisLabel, 6> valid_labels() {
    return {BasisLabel{0, AtomLevel::G}, BasisLabel{1, AtomLevel::G}, BasisLabel{0, AtomLevel::E},
            BasisLabel{1, AtomLevel::E}, BasisLabel{0, AtomLevel::F}, BasisLabel{1, AtomLevel::F}};
}

double leakage_probability(const StateVector &state) {
    if (state.qubit_count() != kEncodedQubits) {
        throw ValidationError("leakage_probability: expected a 3-qubit encoded state, got " +
                              std::to_string(state.qubit_count()) + " qubits");
    }
    double p = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if (!is_valid_pattern(i)) {
            p += state.probability(i);
        }
    }
    return p;
}

}  // namespace jcsim
