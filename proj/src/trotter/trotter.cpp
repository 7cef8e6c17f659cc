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

#include "jcsim/trotter.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "jcsim/errors.hpp"
#include "jcsim/linalg.hpp"

namespace jcsim {
namespace {

constexpr std::size_t kQ0 = kFieldQubit;
constexpr std::size_t kQ1 = kAtomQubit1;
constexpr std::size_t kQ2 = kAtomQubit2;
constexpr std::size_t kAnc = kAncillaQubit;

const char *const kExchangeGE = "exchange(g1,e0)";
const char *const kExchangeEF = "exchange(e1,f0)";

struct StepBuild {
    Circuit circuit{kRegisterQubits};
    std::vector<AngleRow> table;
};

std::string z_label(unsigned mask) {
    std::string s;
    for (std::size_t q = 0; q < kEncodedQubits; ++q) {
        if ((mask >> q) & 1U) {
            s += "Z" + std::to_string(q);
        }
    }
    return s;
}

/// Coefficients h_S of E = sum_S h_S Z_S over the 3 encoded qubits, indexed by
/// the qubit mask S (Walsh-Hadamard transform of the diagonal).
std::array<double, 8> pauli_z_coefficients(const std::array<double, 8> &diag) {
    std::array<double, 8> h{};
    for (unsigned s = 0; s < 8; ++s) {
        double acc = 0.0;
        for (unsigned x = 0; x < 8; ++x) {
            acc += (std::popcount(x & s) % 2 == 0) ? diag[x] : -diag[x];
        }
        h[s] = acc / 8.0;
    }
    return h;
}

void append_rotation(StepBuild &b, const std::string &label, double h, double duration,
                     std::vector<std::size_t> qubits, bool record_rows) {
    const double angle = rz_angle(h, duration);
    if (record_rows) {
        b.table.push_back({label, h, duration, angle});
    }
    const std::size_t last = qubits.back();
    for (std::size_t i = 0; i + 1 < qubits.size(); ++i) {
        b.circuit.append(Gate::cx(qubits[i], last));
    }
    b.circuit.append(Gate::rz(angle, last).with_term(label));
    for (std::size_t i = qubits.size() - 1; i-- > 0;) {
        b.circuit.append(Gate::cx(qubits[i], last));
    }
}

/// exp(-i H_f duration) = RZ(-w_f duration) on q0, up to global phase.
void append_field_block(StepBuild &b, double omega_field, double duration, bool record_rows) {
    append_rotation(b, "field:Z0", -omega_field / 2.0, duration, {kQ0}, record_rows);
}

/// Everything diagonal that is not w_f n: the level energies on (q1, q2),
/// plus a w_f n correction that pins the excluded pattern to zero phase.
/// One RZ per single-Z term, a CX parity ladder around an RZ for multi-Z terms.
void append_atomic_block(StepBuild &b, const ModelParams &p, double duration, bool record_rows) {
    std::array<double, 8> diag = three_level_diagonal(p);
    double scale = 0.0;
    for (std::size_t x = 0; x < diag.size(); ++x) {
        diag[x] -= p.omega_field * static_cast<double>(x & 1U);
        scale = std::max(scale, std::abs(diag[x]));
    }
    const std::array<double, 8> h = pauli_z_coefficients(diag);
    for (unsigned mask : {0b010U, 0b100U, 0b110U, 0b001U, 0b011U, 0b101U, 0b111U}) {
        const bool level_term = (mask & 1U) == 0;
        if (!level_term && std::abs(h[mask]) <= 1e-12 * scale) {
            continue;
        }
        std::vector<std::size_t> qubits;
        for (std::size_t q = 0; q < kEncodedQubits; ++q) {
            if ((mask >> q) & 1U) {
                qubits.push_back(q);
            }
        }
        append_rotation(b, "atom:" + z_label(mask), h[mask], duration, std::move(qubits), record_rows);
    }
}

void append_free_blocks(StepBuild &b, const ModelParams &p, double duration, bool record_rows) {
    append_field_block(b, p.omega_field, duration, record_rows);
    append_atomic_block(b, p, duration, record_rows);
}

/// Controlled RX(angle) on `target` with the ancilla as control, written as
/// CH . CRZ . CH since RX(phi) = H RZ(phi) H.
void append_controlled_exchange_core(StepBuild &b, std::size_t target, double angle,
                                     const std::string &label) {
    b.circuit.append(Gate::ch(kAnc, target));
    b.circuit.append(Gate::crz(angle, kAnc, target).with_term(label));
    b.circuit.append(Gate::ch(kAnc, target));
}

/// |g,1> <-> |e,0>. CX(q0 -> q1) maps the pair onto {q1 = 1, q2 = 0} differing
/// in q0; the ancilla holds q1 AND NOT q2 while RX acts on q0.
void append_ge_exchange(StepBuild &b, double g, double dt) {
    const double angle = rz_angle(g, dt);
    b.table.push_back({kExchangeGE, g, dt, angle});
    b.circuit.append(Gate::cx(kQ0, kQ1));
    b.circuit.append(Gate::x(kQ2));
    b.circuit.append(Gate::rccx(kQ1, kQ2, kAnc));
    b.circuit.append(Gate::x(kQ2));
    append_controlled_exchange_core(b, kQ0, angle, kExchangeGE);
    b.circuit.append(Gate::x(kQ2));
    b.circuit.append(Gate::rccx(kQ1, kQ2, kAnc));
    b.circuit.append(Gate::x(kQ2));
    b.circuit.append(Gate::cx(kQ0, kQ1));
}

/// |e,1> <-> |f,0>. CX(q2 -> q0) maps the pair onto {q0 = 1, q1 = 1} differing
/// in q2; the ancilla holds q0 AND q1 while RX acts on q2.
void append_ef_exchange(StepBuild &b, double g, double dt) {
    const double angle = rz_angle(g, dt);
    b.table.push_back({kExchangeEF, g, dt, angle});
    b.circuit.append(Gate::cx(kQ2, kQ0));
    b.circuit.append(Gate::rccx(kQ0, kQ1, kAnc));
    append_controlled_exchange_core(b, kQ2, angle, kExchangeEF);
    b.circuit.append(Gate::rccx(kQ0, kQ1, kAnc));
    b.circuit.append(Gate::cx(kQ2, kQ0));
}

void require_step_inputs(const ModelParams &p, double dt) {
    p.validate();
    if (!std::isfinite(dt) || dt < 0.0) {
        throw ValidationError("Trotter step: dt must be finite and >= 0");
    }
}

StepBuild build_first(const ModelParams &p, double dt) {
    require_step_inputs(p, dt);
    StepBuild b;
    b.circuit = Circuit(kRegisterQubits, "first-order step");
    append_free_blocks(b, p, dt, true);
    append_ge_exchange(b, p.g_ge, dt);
    append_ef_exchange(b, p.g_ef, dt);
    return b;
}

StepBuild build_second(const ModelParams &p, double dt) {
    require_step_inputs(p, dt);
    StepBuild b;
    b.circuit = Circuit(kRegisterQubits, "second-order step");
    append_free_blocks(b, p, dt / 2, true);
    append_ge_exchange(b, p.g_ge, dt);
    append_ef_exchange(b, p.g_ef, dt);
    append_free_blocks(b, p, dt / 2, false);
    return b;
}

StepBuild build(const ModelParams &p, int order, double dt) {
    if (order == 1) {
        return build_first(p, dt);
    }
    if (order == 2) {
        return build_second(p, dt);
    }
    throw ValidationError("Trotter order must be 1 or 2, got " + std::to_string(order));
}

}  // namespace

double rz_angle(double h, double dt) { return 2.0 * h * dt; }

double choose_dt(double g, double phase_budget) {
    if (!(g > 0.0) || !std::isfinite(g)) {
        throw ValidationError("choose_dt: coupling g must be positive");
    }
    if (!(phase_budget > 0.0 && phase_budget < 1.0)) {
        throw ValidationError("choose_dt: phase budget must lie in (0, 1) rad");
    }
    return phase_budget / g;
}

nlohmann::json TrotterPlan::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const AngleRow &r : angle_table) {
        rows.push_back({{"term", r.label},
                        {"coefficient", r.coefficient},
                        {"duration", r.duration},
                        {"rz_angle", r.angle}});
    }
    return {{"order", order},
            {"dt", dt},
            {"steps", steps},
            {"t_total", total_time()},
            {"angle_table", std::move(rows)}};
}

Circuit build_first_order_step(const ModelParams &p, double dt) { return build_first(p, dt).circuit; }

Circuit build_second_order_step(const ModelParams &p, double dt) {
    return build_second(p, dt).circuit;
}

Circuit build_step(const ModelParams &p, int order, double dt) { return build(p, order, dt).circuit; }

TrotterPlan make_plan(const ModelParams &p, int order, double dt, std::size_t steps) {
    StepBuild b = build(p, order, dt);
    return TrotterPlan{order, dt, steps, std::move(b.table)};
}

DenseOperator logical_block(const DenseOperator &register_unitary) {
    if (register_unitary.dim() != (std::size_t{1} << kRegisterQubits)) {
        throw ValidationError("logical_block: expected a 16x16 register unitary");
    }
    return DenseOperator(register_unitary.matrix().topLeftCorner(8, 8));
}

double ancilla_leak(const DenseOperator &register_unitary) {
    if (register_unitary.dim() != (std::size_t{1} << kRegisterQubits)) {
        throw ValidationError("ancilla_leak: expected a 16x16 register unitary");
    }
    return spectral_norm(DenseOperator(register_unitary.matrix().bottomLeftCorner(8, 8).eval()));
}

DenseOperator step_unitary(const ModelParams &p, int order, double dt) {
    return logical_block(circuit_unitary(build_step(p, order, dt)));
}

double trotter_error(const ModelParams &p, int order, double dt) {
    if (!(dt > 0.0)) {
        throw ValidationError("trotter_error: dt must be positive");
    }
    return phase_aligned_distance(step_unitary(p, order, dt),
                                  hermitian_expm(build_three_level_hamiltonian(p), dt));
}

InitialStateRequest parse_initial_state(const std::string &text) {
    if (text.size() < 2) {
        throw ValidationError("initial state '" + text + "': expected <level><n> or <level>~<theta>");
    }
    if (text.rfind("01", 0) == 0) {
        parse_atom_level("01");
    }
    InitialStateRequest req;
    req.atom = parse_atom_level(text.substr(0, 1));
    const std::string rest = text.substr(1);
    if (rest == "0" || rest == "1") {
        req.fock_n = rest[0] - '0';
    } else if (rest[0] == '~') {
        try {
            std::size_t used = 0;
            req.weak_field_angle = std::stod(rest.substr(1), &used);
            if (used != rest.size() - 1) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw ValidationError("initial state '" + text + "': bad field angle");
        }
    } else {
        throw ValidationError("initial state '" + text + "': photon number must be 0 or 1");
    }
    return req;
}

Circuit prepare_initial_state(const InitialStateRequest &request, std::size_t qubit_count) {
    if (qubit_count < kEncodedQubits) {
        throw ValidationError("prepare_initial_state: need at least 3 qubits");
    }
    Circuit c(qubit_count, "state preparation");
    if (request.weak_field_angle) {
        const double theta = *request.weak_field_angle;
        if (!std::isfinite(theta) || std::abs(theta) > 0.5) {
            throw ValidationError("prepare_initial_state: weak field angle must satisfy |theta| <= 0.5");
        }
        if (request.fock_n != 0) {
            throw ValidationError("prepare_initial_state: choose a Fock state or a weak excitation");
        }
        c.append(Gate::ry(theta, kQ0));
    } else if (request.fock_n == 1) {
        c.append(Gate::x(kQ0));
    } else if (request.fock_n != 0) {
        throw ValidationError("prepare_initial_state: photon number must be 0 or 1");
    }
    if (request.atom != AtomLevel::G) {
        c.append(Gate::x(kQ1));
    }
    if (request.atom == AtomLevel::F) {
        c.append(Gate::x(kQ2));
    }
    return c;
}

StateVector drop_ancilla(const StateVector &register_state, double tol) {
    if (register_state.qubit_count() != kRegisterQubits) {
        throw ValidationError("drop_ancilla: expected a 4-qubit register state");
    }
    const auto amps = register_state.amplitudes();
    double leaked = 0.0;
    for (std::size_t i = 8; i < 16; ++i) {
        leaked += std::norm(amps[i]);
    }
    if (leaked > tol) {
        throw ValidationError("drop_ancilla: ancilla population " + std::to_string(leaked) +
                              " exceeds tolerance");
    }
    return StateVector(std::vector<Complex>(amps.begin(), amps.begin() + 8));
}

StateVector with_ancilla(const StateVector &encoded) {
    if (encoded.qubit_count() != kEncodedQubits) {
        throw ValidationError("with_ancilla: expected a 3-qubit encoded state");
    }
    std::vector<Complex> amps(16, Complex{0.0, 0.0});
    std::copy(encoded.amplitudes().begin(), encoded.amplitudes().end(), amps.begin());
    return StateVector(std::move(amps));
}

}  // namespace jcsim
