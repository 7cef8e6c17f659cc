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
#include <string>

#include "jcsim/errors.hpp"

namespace jcsim {
namespace {

constexpr Complex kI{0.0, 1.0};

DenseOperator controlled(const DenseOperator &u) {
    DenseOperator out = DenseOperator::identity(4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            out(2 + i, 2 + j) = u(i, j);
        }
    }
    return out;
}

DenseOperator hadamard() {
    const double s = 1.0 / std::numbers::sqrt2;
    return DenseOperator::from_rows({{s, s}, {s, -s}});
}

DenseOperator rz(double theta) {
    return DenseOperator::from_rows(
        {{std::polar(1.0, -theta / 2), 0.0}, {0.0, std::polar(1.0, theta / 2)}});
}

DenseOperator margolus() {
    // Toffoli permutation on |a,b,c> (a most significant), with the sign of
    // |1,0,1> flipped.
    DenseOperator m = DenseOperator::zero(8);
    for (const RccxEntry &e : rccx_truth_table()) {
        m(e.output, e.input) = e.phase;
    }
    return m;
}

}  // namespace

std::string_view to_string(GateKind kind) {
    switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CX: return "CX";
    case GateKind::CRZ: return "CRZ";
    case GateKind::CH: return "CH";
    case GateKind::RCCX: return "RCCX";
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    for (GateKind k : {GateKind::H, GateKind::X, GateKind::RX, GateKind::RY, GateKind::RZ,
                       GateKind::CX, GateKind::CRZ, GateKind::CH, GateKind::RCCX}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::size_t arity(GateKind kind) {
    switch (kind) {
    case GateKind::CX:
    case GateKind::CRZ:
    case GateKind::CH:
        return 2;
    case GateKind::RCCX:
        return 3;
    default:
        return 1;
    }
}

bool is_parametric(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ ||
           kind == GateKind::CRZ;
}

void validate_gate(const Gate &g) {
    if (g.targets.size() != arity(g.kind)) {
        throw ValidationError(std::string(to_string(g.kind)) + " expects " +
                              std::to_string(arity(g.kind)) + " targets, got " +
                              std::to_string(g.targets.size()));
    }
    for (std::size_t i = 0; i < g.targets.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (g.targets[i] == g.targets[j]) {
                throw ValidationError(std::string(to_string(g.kind)) + ": duplicate target " +
                                      std::to_string(g.targets[i]));
            }
        }
    }
    if (!std::isfinite(g.angle)) {
        throw ValidationError(std::string(to_string(g.kind)) + ": angle is not finite");
    }
}

DenseOperator gate_unitary(const Gate &g) {
    validate_gate(g);
    const double t = g.angle;
    switch (g.kind) {
    case GateKind::H:
        return hadamard();
    case GateKind::X:
        return DenseOperator::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case GateKind::RX:
        return DenseOperator::from_rows(
            {{std::cos(t / 2), -kI * std::sin(t / 2)}, {-kI * std::sin(t / 2), std::cos(t / 2)}});
    case GateKind::RY:
        return DenseOperator::from_rows(
            {{std::cos(t / 2), -std::sin(t / 2)}, {std::sin(t / 2), std::cos(t / 2)}});
    case GateKind::RZ:
        return rz(t);
    case GateKind::CX:
        return controlled(DenseOperator::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
    case GateKind::CRZ:
        return controlled(rz(t));
    case GateKind::CH:
        return controlled(hadamard());
    case GateKind::RCCX:
        return margolus();
    }
    throw ValidationError("gate_unitary: unknown gate kind");
}

std::array<RccxEntry, 8> rccx_truth_table() {
    std::array<RccxEntry, 8> table{};
    for (std::uint8_t in = 0; in < 8; ++in) {
        const bool a = (in >> 2) & 1U;
        const bool b = (in >> 1) & 1U;
        const bool c = in & 1U;
        const auto out = static_cast<std::uint8_t>((in & 0b110) | ((c ^ (a && b)) ? 1 : 0));
        const Complex phase = (a && !b && c) ? Complex{-1.0, 0.0} : Complex{1.0, 0.0};
        table[in] = {in, out, phase};
    }
    return table;
}

}  // namespace jcsim
