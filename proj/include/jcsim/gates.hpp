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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jcsim/dense_operator.hpp"

namespace jcsim {

enum class GateKind { H, X, RX, RY, RZ, CX, CRZ, CH, RCCX };

std::string_view to_string(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);
std::size_t arity(GateKind kind);
bool is_parametric(GateKind kind);
/// Single-qubit kinds are everything of arity 1.
inline bool is_single_qubit(GateKind kind) { return arity(kind) == 1; }

/// One gate application. Controls precede the target in `targets`.
///
/// `term` optionally names the Hamiltonian term a rotation implements, so
/// emitted angles can be audited against a Trotter angle table.
struct Gate {
    GateKind kind = GateKind::H;
    double angle = 0.0;
    std::vector<std::size_t> targets;
    std::string term;

    static Gate h(std::size_t q) { return {GateKind::H, 0.0, {q}, {}}; }
    static Gate x(std::size_t q) { return {GateKind::X, 0.0, {q}, {}}; }
    static Gate rx(double theta, std::size_t q) { return {GateKind::RX, theta, {q}, {}}; }
    static Gate ry(double theta, std::size_t q) { return {GateKind::RY, theta, {q}, {}}; }
    static Gate rz(double theta, std::size_t q) { return {GateKind::RZ, theta, {q}, {}}; }
    static Gate cx(std::size_t c, std::size_t t) { return {GateKind::CX, 0.0, {c, t}, {}}; }
    static Gate crz(double theta, std::size_t c, std::size_t t) {
        return {GateKind::CRZ, theta, {c, t}, {}};
    }
    static Gate ch(std::size_t c, std::size_t t) { return {GateKind::CH, 0.0, {c, t}, {}}; }
    static Gate rccx(std::size_t a, std::size_t b, std::size_t c) {
        return {GateKind::RCCX, 0.0, {a, b, c}, {}};
    }

    Gate with_term(std::string label) const {
        Gate g = *this;
        g.term = std::move(label);
        return g;
    }

    friend bool operator==(const Gate &, const Gate &) = default;
};

/// Throws ValidationError on arity mismatch, duplicate targets or a
/// non-finite angle.
void validate_gate(const Gate &g);

/// Exact unitary of `g` on its own targets.
///
/// RZ(t) = diag(e^{-it/2}, e^{it/2}), RY(t) = exp(-i t Y/2), RX(t) = exp(-i t X/2),
/// H = (X+Z)/sqrt2. Controlled kinds act on |c,t> with c the high bit.
/// RCCX is the Margolus relative-phase Toffoli: |a,b,c> -> |a,b,c^(ab)> with
/// phase -1 on |1,0,1> and +1 elsewhere. It is real and self-inverse.
DenseOperator gate_unitary(const Gate &g);

struct RccxEntry {
    std::uint8_t input;  ///< bits a b c, a most significant
    std::uint8_t output;
    Complex phase;
};

/// Exhaustive action of RCCX on the 8 computational basis states.
std::array<RccxEntry, 8> rccx_truth_table();

}  // namespace jcsim
