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

#include "jcsim/gates.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "jcsim/circuit.hpp"
#include "jcsim/encoding.hpp"
#include "jcsim/errors.hpp"
#include "jcsim/linalg.hpp"
#include "jcsim/measurement.hpp"
#include "test_util.hpp"

using namespace jcsim;

TEST(gates, names_round_trip) {
    for (GateKind k : {GateKind::H, GateKind::X, GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::CX,
                       GateKind::CRZ, GateKind::CH, GateKind::RCCX}) {
        ASSERT_EQ(parse_gate_kind(to_string(k)), k);
    }
    ASSERT_FALSE(parse_gate_kind("toffoli").has_value());
}

TEST(gates, validation) {
    ASSERT_NO_THROW(validate_gate(Gate::cx(0, 1)));
    ASSERT_THROW(validate_gate(Gate::cx(1, 1)), ValidationError);
    ASSERT_THROW(validate_gate({GateKind::H, 0.0, {0, 1}, {}}), ValidationError);
    ASSERT_THROW(validate_gate(Gate::rz(std::nan(""), 0)), ValidationError);
}

TEST(gates, all_unitary) {
    for (const Gate &g : {Gate::h(0), Gate::x(0), Gate::rx(0.3, 0), Gate::ry(-1.2, 0), Gate::rz(2.0, 0),
                          Gate::cx(0, 1), Gate::crz(0.7, 0, 1), Gate::ch(0, 1), Gate::rccx(0, 1, 2)}) {
        ASSERT_TRUE(is_unitary(gate_unitary(g))) << to_string(g.kind);
    }
}

TEST(gates, rz_convention) {
    const DenseOperator rz = gate_unitary(Gate::rz(0.4, 0));
    ASSERT_NEAR(std::abs(rz(0, 0) - std::polar(1.0, -0.2)), 0.0, 1e-15);
    ASSERT_NEAR(std::abs(rz(1, 1) - std::polar(1.0, 0.2)), 0.0, 1e-15);
}

TEST(gates, rx_equals_h_rz_h) {
    const DenseOperator h = gate_unitary(Gate::h(0));
    for (int k = 0; k < 10; ++k) {
        const double phi = -3.0 + 0.7 * k;
        const DenseOperator lhs = gate_unitary(Gate::rx(phi, 0));
        const DenseOperator rhs = h * gate_unitary(Gate::rz(phi, 0)) * h;
        ASSERT_LT(max_entry_distance(lhs, rhs), 1e-12) << phi;
    }
}

TEST(gates, rccx_truth_table) {
    const std::array<RccxEntry, 8> table = rccx_truth_table();
    const DenseOperator u = gate_unitary(Gate::rccx(0, 1, 2));
    for (const RccxEntry &e : table) {
        const int a = (e.input >> 2) & 1;
        const int b = (e.input >> 1) & 1;
        const int c = e.input & 1;
        ASSERT_EQ(e.output, (a << 2) | (b << 1) | (c ^ (a & b)));
        ASSERT_NEAR(std::abs(e.phase), 1.0, 1e-15);
        ASSERT_EQ(u(e.output, e.input), e.phase);
    }
    // Relative phase: a Toffoli up to a diagonal, and self-inverse.
    ASSERT_LT(max_entry_distance(u * u, DenseOperator::identity(8)), 1e-15);
}

TEST(gates, controlled_gates_act_on_control_one) {
    const DenseOperator ch = gate_unitary(Gate::ch(0, 1));
    ASSERT_EQ(ch(0, 0), Complex(1.0, 0.0));
    ASSERT_EQ(ch(1, 1), Complex(1.0, 0.0));
    ASSERT_NEAR(ch(3, 3).real(), -std::numbers::sqrt2 / 2, 1e-15);
    const DenseOperator crz = gate_unitary(Gate::crz(0.6, 0, 1));
    ASSERT_EQ(crz(1, 1), Complex(1.0, 0.0));
    ASSERT_NEAR(std::abs(crz(2, 2) - std::polar(1.0, -0.3)), 0.0, 1e-15);
}

TEST(circuit, range_check) {
    Circuit c(2);
    ASSERT_THROW(c.append(Gate::x(2)), ValidationError);
    ASSERT_THROW(Circuit(0), ValidationError);
}

TEST(circuit, json_round_trip) {
    Circuit c(3, "demo");
    c.append(Gate::h(0)).append(Gate::rz(0.25, 1).with_term("Z1")).append(Gate::rccx(0, 1, 2));
    const Circuit back = Circuit::from_json(c.to_json());
    ASSERT_EQ(back.size(), 3u);
    ASSERT_EQ(back.label(), "demo");
    for (std::size_t i = 0; i < c.size(); ++i) {
        ASSERT_EQ(back.gates()[i], c.gates()[i]);
    }
    ASSERT_FALSE(c.to_json()["gates"][0].contains("angle"));
    ASSERT_THROW(Circuit::from_json({{"qubits", 2}, {"gates", {{{"kind", "foo"}, {"targets", {0}}}}}}),
                 ValidationError);
}

TEST(circuit, compose_steps) {
    Circuit step(2);
    step.append(Gate::h(0)).append(Gate::cx(0, 1));
    ASSERT_TRUE(compose_steps(step, 0).empty());
    ASSERT_EQ(compose_steps(step, 1).size(), 2u);
    const Circuit three = compose_steps(step, 3);
    ASSERT_EQ(three.size(), 6u);
    const DenseOperator u = circuit_unitary(step);
    ASSERT_LT(max_entry_distance(circuit_unitary(three), u * u * u), 1e-12);
}

TEST(circuit, unitary_and_simulation_agree_on_random_circuits) {
    Rng rng(1234);
    const GateKind kinds[] = {GateKind::H,  GateKind::X,   GateKind::RX, GateKind::RY,  GateKind::RZ,
                              GateKind::CX, GateKind::CRZ, GateKind::CH, GateKind::RCCX};
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + trial % 3;
        Circuit c(n);
        for (int k = 0; k < 20; ++k) {
            const GateKind kind = kinds[static_cast<std::size_t>(rng.uniform() * 9)];
            std::vector<std::size_t> qubits(n);
            for (std::size_t i = 0; i < n; ++i) {
                qubits[i] = i;
            }
            for (std::size_t i = n; i > 1; --i) {
                std::swap(qubits[i - 1], qubits[static_cast<std::size_t>(rng.uniform() * i)]);
            }
            qubits.resize(arity(kind));
            c.append({kind, is_parametric(kind) ? 6.0 * rng.uniform() - 3.0 : 0.0, qubits, {}});
        }
        const StateVector psi = testutil::random_state(n, rng);
        const StateVector out = run_circuit(c, psi);
        const DenseOperator u = circuit_unitary(c);
        for (std::size_t i = 0; i < psi.dim(); ++i) {
            Complex expect{0.0, 0.0};
            for (std::size_t j = 0; j < psi.dim(); ++j) {
                expect += u(i, j) * psi[j];
            }
            ASSERT_NEAR(std::abs(out[i] - expect), 0.0, 1e-12) << "trial " << trial;
        }
    }
}

TEST(encoding, basis_indices) {
    ASSERT_EQ(encode_basis({0, AtomLevel::G}), 0u);
    ASSERT_EQ(encode_basis({1, AtomLevel::G}), 1u);
    ASSERT_EQ(encode_basis({0, AtomLevel::E}), 2u);
    ASSERT_EQ(encode_basis({1, AtomLevel::E}), 3u);
    ASSERT_EQ(encode_basis({0, AtomLevel::F}), 6u);
    ASSERT_EQ(encode_basis({1, AtomLevel::F}), 7u);
    ASSERT_FALSE(decode_basis(4).has_value());
    ASSERT_FALSE(decode_basis(5).has_value());
    for (const BasisLabel &l : valid_labels()) {
        ASSERT_EQ(decode_basis(encode_basis(l)), l);
    }
    ASSERT_THROW(encode_basis({2, AtomLevel::G}), ValidationError);
}

TEST(encoding, level_parsing) {
    ASSERT_EQ(parse_atom_level("g"), AtomLevel::G);
    ASSERT_EQ(parse_atom_level("10"), AtomLevel::E);
    ASSERT_EQ(parse_atom_level("11"), AtomLevel::F);
    ASSERT_THROW(parse_atom_level("01"), ValidationError);
    ASSERT_THROW(parse_atom_level("q"), ValidationError);
    ASSERT_EQ(ladder_index(AtomLevel::F), 2);
}

TEST(encoding, leakage) {
    ASSERT_EQ(leakage_probability(StateVector::basis(3, 2)), 0.0);
    ASSERT_EQ(leakage_probability(StateVector::basis(3, 4)), 1.0);
    const double r = std::numbers::sqrt2 / 2;
    StateVector s(std::vector<Complex>(8, 0.0));
    s[0] = r;
    s[5] = r;
    ASSERT_NEAR(leakage_probability(s), 0.5, 1e-15);
}

TEST(measurement, bitstring_order) {
    ASSERT_EQ(bitstring(1, 3), "001");
    ASSERT_EQ(bitstring(6, 3), "110");
}

TEST(measurement, deterministic_and_binomial) {
    const double r = std::numbers::sqrt2 / 2;
    const StateVector plus(std::vector<Complex>{r, r});
    const MeasurementHistogram a = sample_measurements(plus, 100000, 42);
    const MeasurementHistogram b = sample_measurements(plus, 100000, 42);
    ASSERT_EQ(a, b);
    ASSERT_EQ(a.count("0") + a.count("1"), 100000u);
    const double sigma = std::sqrt(100000 * 0.25);
    ASSERT_LT(std::abs(static_cast<double>(a.count("0")) - 50000.0), 5 * sigma);
    ASSERT_NE(sample_measurements(plus, 1000, 1), sample_measurements(plus, 1000, 2));
}

TEST(measurement, basis_state_is_certain) {
    const MeasurementHistogram h = sample_measurements(StateVector::basis(3, 6), 1024, 7);
    ASSERT_EQ(h.count("110"), 1024u);
    ASSERT_EQ(h.counts.size(), 1u);
}

TEST(measurement, json_round_trip) {
    const MeasurementHistogram h = sample_measurements(StateVector::basis(2, 1), 10, 0);
    ASSERT_EQ(MeasurementHistogram::from_json(h.to_json()), h);
    ASSERT_THROW(MeasurementHistogram::from_json({{"shots", 3}, {"counts", {{"01", 2}}}}), ValidationError);
    ASSERT_THROW(sample_measurements(StateVector::basis(2, 1), 0, 0), ValidationError);
}
