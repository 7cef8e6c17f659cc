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

#include "jcsim/jc_models.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jcsim/errors.hpp"
#include "jcsim/linalg.hpp"

namespace jcsim {
namespace {

constexpr double kTruncationWeight = 1.0 - 1e-6;

void require_finite_nonnegative(double v, const char *name) {
    if (!std::isfinite(v) || v < 0.0) {
        throw ValidationError(std::string("ModelParams: ") + name + " must be finite and >= 0");
    }
}

/// Unnormalized Poisson weights nbar^n e^{-nbar} / n! for n = 0..n_max.
std::vector<double> poisson_weights(double nbar, std::size_t n_max) {
    std::vector<double> w(n_max + 1);
    double log_w = -nbar;
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (n > 0) {
            log_w += std::log(nbar) - std::log(static_cast<double>(n));
        }
        w[n] = nbar == 0.0 ? (n == 0 ? 1.0 : 0.0) : std::exp(log_w);
    }
    return w;
}

}  // namespace

void ModelParams::validate() const {
    require_finite_nonnegative(omega_field, "omega_field");
    require_finite_nonnegative(omega_g, "omega_g");
    require_finite_nonnegative(omega_e, "omega_e");
    require_finite_nonnegative(omega_f, "omega_f");
    require_finite_nonnegative(g_ge, "g_ge");
    require_finite_nonnegative(g_ef, "g_ef");
    require_finite_nonnegative(omega_p, "omega_p");
    require_finite_nonnegative(omega_c, "omega_c");
    require_finite_nonnegative(nbar, "nbar");
    if (n_max < 1) {
        throw ValidationError("ModelParams: n_max must be >= 1");
    }
}

ModelParams ModelParams::defaults() {
    const double g = kDefaultCoupling;
    ModelParams p;
    p.omega_field = 4.0 * g;
    p.omega_g = 0.0;
    p.omega_e = 4.0 * g;
    p.omega_f = 8.0 * g;
    p.g_ge = g;
    p.g_ef = g;
    p.omega_p = g;
    p.omega_c = 2.0 * g;
    p.nbar = 2.0;
    p.n_max = 20;
    return p;
}

nlohmann::json ModelParams::to_json() const {
    return {{"omega_field", omega_field}, {"omega_g", omega_g}, {"omega_e", omega_e},
            {"omega_f", omega_f},         {"g_ge", g_ge},       {"g_ef", g_ef},
            {"omega_p", omega_p},         {"omega_c", omega_c}, {"nbar", nbar},
            {"n_max", n_max}};
}

std::size_t jc2_index(std::size_t n, bool excited) { return 2 * n + (excited ? 0 : 1); }

DenseOperator build_jc2_hamiltonian(const ModelParams &p) {
    p.validate();
    const std::size_t levels = p.n_max + 1;
    DenseOperator h = DenseOperator::zero(2 * levels);
    const double half_wa = 0.5 * p.omega_atom();
    for (std::size_t n = 0; n < levels; ++n) {
        const double field = p.omega_field * static_cast<double>(n);
        h(jc2_index(n, true), jc2_index(n, true)) = field + half_wa;
        h(jc2_index(n, false), jc2_index(n, false)) = field - half_wa;
        if (n + 1 < levels) {
            // a sigma+ takes |g,n+1> to sqrt(n+1) |e,n>.
            const double c = p.g_ge * std::sqrt(static_cast<double>(n + 1));
            h(jc2_index(n, true), jc2_index(n + 1, false)) = c;
            h(jc2_index(n + 1, false), jc2_index(n, true)) = c;
        }
    }
    return h;
}

DenseOperator jc2_excitation_operator(std::size_t n_max) {
    DenseOperator n_op = DenseOperator::zero(2 * (n_max + 1));
    for (std::size_t n = 0; n <= n_max; ++n) {
        n_op(jc2_index(n, true), jc2_index(n, true)) = static_cast<double>(n + 1);
        n_op(jc2_index(n, false), jc2_index(n, false)) = static_cast<double>(n);
    }
    return n_op;
}

Jc2Amplitudes analytic_jc2_amplitudes(double g, std::size_t n, double t) {
    const double phase = g * std::sqrt(static_cast<double>(n + 1)) * t;
    return {Complex{std::cos(phase), 0.0}, Complex{0.0, -std::sin(phase)}};
}

double rabi_frequency(double g, std::size_t n) {
    return 2.0 * g * std::sqrt(static_cast<double>(n + 1));
}

DenseOperator reduced_atom_density(double g, std::size_t n, double t) {
    const double phase = g * std::sqrt(static_cast<double>(n + 1)) * t;
    const double c = std::cos(phase);
    const double s = std::sin(phase);
    const std::array<double, 2> diag{c * c, s * s};
    return DenseOperator::diagonal(std::span<const double>(diag));
}

std::size_t required_n_max(double nbar) {
    if (!std::isfinite(nbar) || nbar < 0.0) {
        throw ValidationError("coherent_state: nbar must be finite and >= 0");
    }
    std::size_t n_max = 1;
    while (true) {
        const std::vector<double> w = poisson_weights(nbar, n_max);
        double total = 0.0;
        for (double x : w) {
            total += x;
        }
        if (total >= kTruncationWeight) {
            return n_max;
        }
        ++n_max;
    }
}

std::vector<Complex> coherent_state(double nbar, std::size_t n_max) {
    if (!std::isfinite(nbar) || nbar < 0.0) {
        throw ValidationError("coherent_state: nbar must be finite and >= 0");
    }
    const std::vector<double> w = poisson_weights(nbar, n_max);
    double total = 0.0;
    for (double x : w) {
        total += x;
    }
    if (total < kTruncationWeight) {
        throw ValidationError("coherent_state: n_max = " + std::to_string(n_max) +
                              " keeps too little Poisson weight for nbar = " +
                              std::to_string(nbar) + "; need n_max >= " +
                              std::to_string(required_n_max(nbar)));
    }
    std::vector<Complex> amps(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        amps[n] = std::sqrt(w[n] / total);
    }
    return amps;
}

Trajectory entropy_trajectory(const ModelParams &p, std::span<const double> times) {
    const std::vector<Complex> field = coherent_state(p.nbar, p.n_max);
    std::vector<Complex> psi0(2 * (p.n_max + 1), Complex{0.0, 0.0});
    for (std::size_t n = 0; n <= p.n_max; ++n) {
        psi0[jc2_index(n, true)] = field[n];
    }
    const HermitianPropagator propagator(build_jc2_hamiltonian(p));
    Trajectory out({"S"});
    for (double t : times) {
        const std::vector<Complex> psi = propagator.evolve(psi0, t);
        const DenseOperator rho_atom =
            partial_trace_bipartite(psi, p.n_max + 1, 2, Subsystem::Second);
        out.push_back(t, {von_neumann_entropy(rho_atom)});
    }
    return out;
}

std::vector<double> default_entropy_times(double g) {
    if (!(g > 0.0)) {
        throw ValidationError("default_entropy_times: g must be positive");
    }
    constexpr std::size_t kPoints = 200;
    std::vector<double> t(kPoints);
    for (std::size_t i = 0; i < kPoints; ++i) {
        t[i] = (10.0 / g) * static_cast<double>(i) / static_cast<double>(kPoints - 1);
    }
    return t;
}

std::array<double, 8> three_level_diagonal(const ModelParams &p) {
    std::array<double, 8> d{};
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto label = decode_basis(i);
        if (!label) {
            continue;
        }
        const double level = label->atom_level == AtomLevel::G   ? p.omega_g
                             : label->atom_level == AtomLevel::E ? p.omega_e
                                                                 : p.omega_f;
        d[i] = p.omega_field * label->photon_n + level;
    }
    return d;
}

DenseOperator build_three_level_interaction(const ModelParams &p) {
    p.validate();
    DenseOperator h = DenseOperator::zero(8);
    const std::size_t g1 = encode_basis({1, AtomLevel::G});
    const std::size_t e0 = encode_basis({0, AtomLevel::E});
    const std::size_t e1 = encode_basis({1, AtomLevel::E});
    const std::size_t f0 = encode_basis({0, AtomLevel::F});
    h(g1, e0) = h(e0, g1) = p.g_ge;
    h(e1, f0) = h(f0, e1) = p.g_ef;
    return h;
}

DenseOperator build_three_level_hamiltonian(const ModelParams &p) {
    const std::array<double, 8> d = three_level_diagonal(p);
    return DenseOperator::diagonal(std::span<const double>(d)) + build_three_level_interaction(p);
}

DenseOperator three_level_excitation_operator() {
    std::array<double, 8> d{};
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (const auto label = decode_basis(i)) {
            d[i] = label->photon_n + ladder_index(label->atom_level);
        }
    }
    return DenseOperator::diagonal(std::span<const double>(d));
}

LevelPopulations populations(const StateVector &state) {
    if (state.qubit_count() != kEncodedQubits) {
        throw ValidationError("populations: expected a 3-qubit encoded state, got " +
                              std::to_string(state.qubit_count()) + " qubits");
    }
    LevelPopulations out;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        const double p = state.probability(i);
        const auto label = decode_basis(i);
        if (!label) {
            out.leakage += p;
        } else if (label->atom_level == AtomLevel::G) {
            out.g += p;
        } else if (label->atom_level == AtomLevel::E) {
            out.e += p;
        } else {
            out.f += p;
        }
    }
    return out;
}

double excitation_expectation(const StateVector &state) {
    if (state.qubit_count() != kEncodedQubits) {
        throw ValidationError("excitation_expectation: expected a 3-qubit encoded state");
    }
    double n = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if (const auto label = decode_basis(i)) {
            n += state.probability(i) * (label->photon_n + ladder_index(label->atom_level));
        }
    }
    return n;
}

}  // namespace jcsim
