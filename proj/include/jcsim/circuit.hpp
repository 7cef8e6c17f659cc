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
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "jcsim/dense_operator.hpp"
#include "jcsim/gates.hpp"
#include "jcsim/state_vector.hpp"

namespace jcsim {

/// Ordered gate list; list order is application order.
class Circuit {
  public:
    explicit Circuit(std::size_t qubit_count, std::string label = {});

    /// Validates the gate and its targets against qubit_count().
    Circuit &append(Gate g);
    Circuit &append(const Circuit &other);

    std::size_t qubit_count() const noexcept { return qubit_count_; }
    std::span<const Gate> gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }
    const std::string &label() const noexcept { return label_; }

    /// {"qubits": n, "gates": [{"kind": "RZ", "angle": 0.2, "targets": [1]}, ...]}
    /// plus "label" and per-gate "term" when set.
    nlohmann::json to_json() const;
    static Circuit from_json(const nlohmann::json &j);

  private:
    std::size_t qubit_count_;
    std::string label_;
    std::vector<Gate> gates_;
};

/// Product of embedded gate matrices, first gate rightmost. qubit_count <= 10.
DenseOperator circuit_unitary(const Circuit &c);

/// Gate-by-gate evolution through the state kernels.
StateVector run_circuit(const Circuit &c, const StateVector &initial);

/// `step` repeated n times.
Circuit compose_steps(const Circuit &step, std::size_t n);

}  // namespace jcsim
