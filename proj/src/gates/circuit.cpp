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

#include "jcsim/circuit.hpp"

#include <string>

#include "jcsim/errors.hpp"
#include "jcsim/linalg.hpp"

namespace jcsim {

Circuit::Circuit(std::size_t qubit_count, std::string label)
    : qubit_count_(qubit_count), label_(std::move(label)) {
    if (qubit_count == 0 || qubit_count > 20) {
        throw ValidationError("Circuit: qubit_count must be in [1, 20]");
    }
}

Circuit &Circuit::append(Gate g) {
    validate_gate(g);
    for (std::size_t t : g.targets) {
        if (t >= qubit_count_) {
            throw ValidationError("Circuit: " + std::string(to_string(g.kind)) + " target " +
                                  std::to_string(t) + " out of range for " +
                                  std::to_string(qubit_count_) + " qubits");
        }
    }
    gates_.push_back(std::move(g));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.qubit_count_ > qubit_count_) {
        throw ValidationError("Circuit::append: appended circuit is wider than this one");
    }
    for (const Gate &g : other.gates_) {
        append(g);
    }
    return *this;
}

nlohmann::json Circuit::to_json() const {
    nlohmann::json gates = nlohmann::json::array();
    for (const Gate &g : gates_) {
        nlohmann::json entry = {{"kind", std::string(to_string(g.kind))}};
        if (is_parametric(g.kind)) {
            entry["angle"] = g.angle;
        }
        entry["targets"] = g.targets;
        if (!g.term.empty()) {
            entry["term"] = g.term;
        }
        gates.push_back(std::move(entry));
    }
    nlohmann::json j = {{"qubits", qubit_count_}, {"gates", std::move(gates)}};
    if (!label_.empty()) {
        j["label"] = label_;
    }
    return j;
}

Circuit Circuit::from_json(const nlohmann::json &j) {
    if (!j.contains("qubits") || !j.at("qubits").is_number_unsigned()) {
        throw ValidationError("circuit: missing or invalid field 'qubits'");
    }
    if (!j.contains("gates") || !j.at("gates").is_array()) {
        throw ValidationError("circuit: missing or invalid field 'gates'");
    }
    Circuit c(j.at("qubits").get<std::size_t>(), j.value("label", std::string{}));
    for (const auto &entry : j.at("gates")) {
        const std::string name = entry.value("kind", std::string{});
        const auto kind = parse_gate_kind(name);
        if (!kind) {
            throw ValidationError("circuit: unknown gate kind '" + name + "'");
        }
        Gate g;
        g.kind = *kind;
        if (is_parametric(*kind)) {
            if (!entry.contains("angle") || !entry.at("angle").is_number()) {
                throw ValidationError("circuit: " + name + " requires a numeric 'angle'");
            }
            g.angle = entry.at("angle").get<double>();
        }
        if (!entry.contains("targets") || !entry.at("targets").is_array()) {
            throw ValidationError("circuit: " + name + " requires a 'targets' array");
        }
        g.targets = entry.at("targets").get<std::vector<std::size_t>>();
        g.term = entry.value("term", std::string{});
        c.append(std::move(g));
    }
    return c;
}

DenseOperator circuit_unitary(const Circuit &c) {
    if (c.qubit_count() > 10) {
        throw ValidationError("circuit_unitary: at most 10 qubits");
    }
    DenseOperator u = DenseOperator::identity(std::size_t{1} << c.qubit_count());
    for (const Gate &g : c.gates()) {
        u = embed_operator(gate_unitary(g), g.targets, c.qubit_count()) * u;
    }
    return u;
}

StateVector run_circuit(const Circuit &c, const StateVector &initial) {
    if (initial.qubit_count() != c.qubit_count()) {
        throw ValidationError("run_circuit: state has " + std::to_string(initial.qubit_count()) +
                              " qubits, circuit has " + std::to_string(c.qubit_count()));
    }
    StateVector state = initial;
    for (const Gate &g : c.gates()) {
        state = apply_operator(state, gate_unitary(g), g.targets);
    }
    return state;
}

Circuit compose_steps(const Circuit &step, std::size_t n) {
    Circuit out(step.qubit_count(), step.label());
    for (std::size_t i = 0; i < n; ++i) {
        out.append(step);
    }
    return out;
}

}  // namespace jcsim
