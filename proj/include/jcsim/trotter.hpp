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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "jcsim/circuit.hpp"
#include "jcsim/dense_operator.hpp"
#include "jcsim/encoding.hpp"
#include "jcsim/jc_models.hpp"
#include "jcsim/state_vector.hpp"

namespace jcsim {

/// Trotter circuits act on the 3 encoded qubits plus one ancilla that holds
/// the selection-rule condition between RCCX compute/uncompute pairs.
inline constexpr std::size_t kAncillaQubit = 3;
inline constexpr std::size_t kRegisterQubits = 4;

/// Default per-step phase budget g * dt.
inline constexpr double kDefaultPhaseBudget = 0.15;

/// theta = 2 h dt for exp(-i h P dt) = R(theta) in the RZ(t) = exp(-i t Z/2)
/// convention.
double rz_angle(double h, double dt);

/// dt with g * dt == budget. Requires g > 0 and budget in (0, 1).
double choose_dt(double g, double phase_budget);

/// One emitted rotation: Pauli or exchange term label, coefficient h (rad/s),
/// the duration it evolves for, and the emitted angle 2 h duration.
struct AngleRow {
    std::string label;
    double coefficient = 0.0;
    double duration = 0.0;
    double angle = 0.0;
};

struct TrotterPlan {
    int order = 1;
    double dt = 0.0;
    std::size_t steps = 0;
    std::vector<AngleRow> angle_table;

    double total_time() const { return static_cast<double>(steps) * dt; }
    nlohmann::json to_json() const;
};

/// Field + atomic diagonal, then both ladder exchanges, each exchange a
/// controlled H-RZ-H core conditioned through the ancilla by an RCCX pair.
Circuit build_first_order_step(const ModelParams &p, double dt);

/// Half-step diagonal, full exchange block, half-step diagonal.
Circuit build_second_order_step(const ModelParams &p, double dt);

Circuit build_step(const ModelParams &p, int order, double dt);

/// Angle table of build_step(p, order, dt), with `steps` recorded.
TrotterPlan make_plan(const ModelParams &p, int order, double dt, std::size_t steps);

/// The ancilla = |0> block of a register unitary (rows and columns 0..7).
DenseOperator logical_block(const DenseOperator &register_unitary);

/// Norm of the block that moves ancilla |0> to |1>.
double ancilla_leak(const DenseOperator &register_unitary);

/// Logical 8x8 unitary of one step.
DenseOperator step_unitary(const ModelParams &p, int order, double dt);

/// Spectral-norm distance between the step's logical unitary and
/// exp(-i H dt), after optimal global-phase alignment.
double trotter_error(const ModelParams &p, int order, double dt);

/// Initial product state: atomic level plus either a Fock state n in {0, 1}
/// or a weak RY(theta_f) excitation of the field qubit (theta_f <= 0.5).
struct InitialStateRequest {
    AtomLevel atom = AtomLevel::G;
    int fock_n = 0;
    std::optional<double> weak_field_angle;
};

/// Parses "g0", "e1", "f0", ... (level then photon number). Throws
/// ValidationError for unknown levels or the excluded pattern.
InitialStateRequest parse_initial_state(const std::string &text);

/// Circuit taking |0...0> to the requested state on `qubit_count` qubits.
Circuit prepare_initial_state(const InitialStateRequest &request,
                              std::size_t qubit_count = kRegisterQubits);

/// The 3 encoded qubits of a register state whose ancilla is |0>. Throws
/// ValidationError if the ancilla population exceeds `tol`.
StateVector drop_ancilla(const StateVector &register_state, double tol = 1e-10);

/// Encoded state embedded into the register with ancilla |0>.
StateVector with_ancilla(const StateVector &encoded);

}  // namespace jcsim
