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
#include <span>
#include <utility>
#include <vector>

#include "json.hpp"

#include "jcsim/dense_operator.hpp"
#include "jcsim/encoding.hpp"
#include "jcsim/state_vector.hpp"
#include "jcsim/trajectory.hpp"

namespace jcsim {

/// Physical constants, all angular frequencies in rad/s (hbar = 1).
struct ModelParams {
    /// Cavity field frequency.
    double omega_field = 0.0;
    /// Atomic level energies.
    double omega_g = 0.0;
    double omega_e = 0.0;
    double omega_f = 0.0;
    /// Ladder couplings g<->e and e<->f through the shared mode.
    double g_ge = 0.0;
    double g_ef = 0.0;
    /// Lambda-system probe and control Rabi frequencies.
    double omega_p = 0.0;
    double omega_c = 0.0;
    /// Coherent-state mean photon number and field truncation.
    double nbar = 0.0;
    std::size_t n_max = 1;

    /// Two-level transition frequency e - g.
    double omega_atom() const { return omega_e - omega_g; }

    /// Throws ValidationError on non-finite or negative rates, or n_max < 1.
    void validate() const;

    /// g = 2pi x 25 kHz on both rungs, resonant ladder with omega_field = 4g.
    static ModelParams defaults();

    nlohmann::json to_json() const;
};

/// 2pi x 25 kHz, the default ladder coupling in rad/s.
inline constexpr double kDefaultCoupling = 2.0 * 3.14159265358979323846 * 25e3;

// ---------------------------------------------------------------------------
// Two-level Jaynes-Cummings model on (n_max + 1) Fock states x {g, e}.
// Basis index = 2 n + a with a = 0 for |e> and 1 for |g>, so tracing out
// the field gives the atomic matrix in the (e, g) order of the closed form.

std::size_t jc2_index(std::size_t n, bool excited);

/// w_f a^dag a + (w_a/2) sigma_z + g (a sigma+ + a^dag sigma-), with w_a and g
/// taken from omega_atom() and g_ge.
DenseOperator build_jc2_hamiltonian(const ModelParams &p);

/// a^dag a + sigma+ sigma- on the same space.
DenseOperator jc2_excitation_operator(std::size_t n_max);

struct Jc2Amplitudes {
    Complex c_e;
    Complex c_g;
};

/// Resonant solution from |e,n>: c_e = cos(g sqrt(n+1) t), c_g = -i sin(...).
Jc2Amplitudes analytic_jc2_amplitudes(double g, std::size_t n, double t);

/// 2 g sqrt(n+1).
double rabi_frequency(double g, std::size_t n);

/// diag(cos^2(g sqrt(n+1) t), sin^2(...)) in (e, g) order.
DenseOperator reduced_atom_density(double g, std::size_t n, double t);

/// Smallest truncation whose Poisson weight reaches 1 - 1e-6.
std::size_t required_n_max(double nbar);

/// Poisson amplitudes e^{-nbar/2} nbar^{n/2} / sqrt(n!) for n = 0..n_max,
/// renormalized. Throws ValidationError naming required_n_max() when the
/// retained weight is below 1 - 1e-6.
std::vector<Complex> coherent_state(double nbar, std::size_t n_max);

/// Atomic entropy S(t) in nats for atom |e> and field coherent_state(nbar),
/// evolved exactly under build_jc2_hamiltonian. Column "S".
Trajectory entropy_trajectory(const ModelParams &p, std::span<const double> times);

/// 200 uniform points over [0, 10/g].
std::vector<double> default_entropy_times(double g);

// ---------------------------------------------------------------------------
// Truncated three-level ladder on the 3-qubit encoding.

/// Encoded-diagonal energies w_field n + w_j; zero on excluded patterns.
std::array<double, 8> three_level_diagonal(const ModelParams &p);

/// H_f + H_a + H_int on the encoded 8-dim space. Rows and columns of the
/// excluded patterns are zero. Exchanges: |g,1> <-> |e,0> (g_ge) and
/// |e,1> <-> |f,0> (g_ef).
DenseOperator build_three_level_hamiltonian(const ModelParams &p);

/// Interaction part only.
DenseOperator build_three_level_interaction(const ModelParams &p);

/// n + ladder index on valid patterns, zero on excluded ones.
DenseOperator three_level_excitation_operator();

struct LevelPopulations {
    double g = 0.0;
    double e = 0.0;
    double f = 0.0;
    double leakage = 0.0;
};

/// Atomic populations traced over the field. Requires a 3-qubit state.
LevelPopulations populations(const StateVector &state);

/// <N> with N = n + ladder index. Requires a 3-qubit state.
double excitation_expectation(const StateVector &state);

// ---------------------------------------------------------------------------
// Resonantly driven Lambda system.

using LambdaAmplitudes = std::array<Complex, 3>;

struct LambdaOptions {
    /// Total RK4 steps over [0, times.back()]; 0 means the default step rule.
    std::size_t steps = 0;
};

/// RK4 integration of
///   c1' = i Wp c3 / 2,  c2' = i Wc c3 / 2,  c3' = i (Wp c1 + Wc c2) / 2
/// from c0 at t = 0. Reports columns P1, P2, P3, norm at each requested time
/// (times >= 0, strictly increasing). Default step:
/// h = min(0.01 / max(Wp, Wc, eps), t_span / 1000).
Trajectory lambda_integrate(const ModelParams &p, const LambdaAmplitudes &c0,
                            std::span<const double> times, LambdaOptions options = {});

/// Final amplitudes of the same integration, for callers that need phases.
LambdaAmplitudes lambda_propagate(const ModelParams &p, const LambdaAmplitudes &c0,
                                  double t_end, std::size_t steps);

/// Normalized (Wc, -Wp, 0).
LambdaAmplitudes lambda_dark_state(const ModelParams &p);

}  // namespace jcsim
