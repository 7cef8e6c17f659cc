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

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "jcsim/state_vector.hpp"

namespace jcsim {

enum class AtomLevel { G, E, F };

std::string_view to_string(AtomLevel level);
/// Accepts "g", "e", "f" or the (q1, q2) patterns "00", "10", "11". Throws
/// ValidationError otherwise, including for the excluded pattern "01".
AtomLevel parse_atom_level(std::string_view text);
/// Ladder index: g -> 0, e -> 1, f -> 2.
int ladder_index(AtomLevel level);

/// Field qubit and the two atomic qubits of the 3-qubit encoding.
inline constexpr std::size_t kFieldQubit = 0;
inline constexpr std::size_t kAtomQubit1 = 1;
inline constexpr std::size_t kAtomQubit2 = 2;
inline constexpr std::size_t kEncodedQubits = 3;

/// |n>_f (x) |j>_a with n in {0,1}.
struct BasisLabel {
    int photon_n = 0;
    AtomLevel atom_level = AtomLevel::G;

    friend auto operator<=>(const BasisLabel &, const BasisLabel &) = default;
};

std::string to_string(const BasisLabel &label);

/// Index with q0 = n and (q1, q2) = g:(0,0), e:(1,0), f:(1,1).
std::size_t encode_basis(const BasisLabel &label);

/// std::nullopt for the excluded atomic pattern (q1, q2) = (0, 1) or an index
/// outside the 3-qubit space.
std::optional<BasisLabel> decode_basis(std::size_t index);

bool is_valid_pattern(std::size_t index);

/// The six representable labels in encoded-index order.
std::array<BasisLabel, 6> valid_labels();

/// Probability mass on the excluded patterns. Requires a 3-qubit state.
double leakage_probability(const StateVector &state);

}  // namespace jcsim
