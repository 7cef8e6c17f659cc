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

#include "gtest/gtest.h"

#include "jcsim/errors.hpp"
#include "jcsim/linalg.hpp"
#include "test_util.hpp"

using namespace jcsim;

namespace {

ModelParams unit_params() {
    ModelParams p;
    p.omega_field = 3.0;
    p.omega_g = 0.0;
    p.omega_e = 3.0;
    p.omega_f = 6.0;
    p.g_ge = 1.0;
    p.g_ef = 0.7;
    p.n_max = 6;
    return p;
}

/// Independent RK4 of i c_e' = k c_g, i c_g' = k c_e.
std::pair<Complex, Complex> rk4_two_level(double k, double t, int steps) {
    const Complex mi{0.0, -1.0};
    Complex ce{1.0, 0.0};
    Complex cg{0.0, 0.0};
    const double h = t / steps;
    auto f = [&](Complex e, Complex g) { return std::pair{mi * k * g, mi * k * e}; };
    for (int s = 0; s < steps; ++s) {
        const auto [k1e, k1g] = f(ce, cg);
        const auto [k2e, k2g] = f(ce + 0.5 * h * k1e, cg + 0.5 * h * k1g);
        const auto [k3e, k3g] = f(ce + 0.5 * h * k2e, cg + 0.5 * h * k2g);
        const auto [k4e, k4g] = f(ce + h * k3e, cg + h * k3g);
        ce += h / 6.0 * (k1e + 2.0 * k2e + 2.0 * k3e + k4e);
        cg += h / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
    }
    return {ce, cg};
}

}  // namespace

TEST(model_params, validation) {
    ModelParams p = unit_params();
    ASSERT_NO_THROW(p.validate());
    p.g_ge = -1.0;
    ASSERT_THROW(p.validate(), ValidationError);
    p = unit_params();
    p.n_max = 0;
    ASSERT_THROW(p.validate(), ValidationError);
    p = unit_params();
    p.nbar = std::nan("");
    ASSERT_THROW(p.validate(), ValidationError);
}

TEST(model_params, defaults_are_resonant) {
    const ModelParams p = ModelParams::defaults();
    ASSERT_DOUBLE_EQ(p.g_ge, kDefaultCoupling);
    ASSERT_DOUBLE_EQ(p.omega_field, p.omega_atom());
    ASSERT_DOUBLE_EQ(p.omega_f - p.omega_e, p.omega_field);
}

TEST(jc2, hamiltonian_elements) {
    ModelParams p = unit_params();
    const DenseOperator h = build_jc2_hamiltonian(p);
    ASSERT_TRUE(is_hermitian(h));
    for (std::size_t n = 0; n < 3; ++n) {
        ASSERT_NEAR(std::abs(h(jc2_index(n, true), jc2_index(n + 1, false))), std::sqrt(n + 1.0), 1e-14);
    }
    p.g_ge = 0.0;
    const DenseOperator h0 = build_jc2_hamiltonian(p);
    for (std::size_t i = 0; i < h0.dim(); ++i) {
        for (std::size_t j = 0; j < h0.dim(); ++j) {
            if (i != j) {
                ASSERT_EQ(h0(i, j), Complex(0.0, 0.0));
            }
        }
    }
}

TEST(jc2, conserves_excitations) {
    const ModelParams p = unit_params();
    const DenseOperator c = commutator(build_jc2_hamiltonian(p), jc2_excitation_operator(p.n_max));
    ASSERT_LT(c.max_abs(), 1e-12);
}

TEST(jc2, analytic_amplitudes) {
    const Jc2Amplitudes a0 = analytic_jc2_amplitudes(1.0, 3, 0.0);
    ASSERT_EQ(a0.c_e, Complex(1.0, 0.0));
    ASSERT_EQ(a0.c_g, Complex(0.0, 0.0));
    const double t = std::numbers::pi / 2 / std::sqrt(2.0);
    const Jc2Amplitudes q = analytic_jc2_amplitudes(1.0, 1, t);
    ASSERT_NEAR(std::abs(q.c_e), 0.0, 1e-15);
    ASSERT_NEAR(std::abs(q.c_g - Complex(0.0, -1.0)), 0.0, 1e-15);
}

TEST(jc2, analytic_matches_rk4_oracle) {
    const Jc2Amplitudes a = analytic_jc2_amplitudes(1.0, 2, 0.37);
    const auto [ce, cg] = rk4_two_level(std::sqrt(3.0), 0.37, 2000);
    ASSERT_NEAR(std::abs(a.c_e - ce), 0.0, 1e-8);
    ASSERT_NEAR(std::abs(a.c_g - cg), 0.0, 1e-8);
}

TEST(jc2, analytic_satisfies_odes) {
    const double g = 1.0;
    const double h = 1e-6 / g;
    for (std::size_t n : {0u, 1u, 4u}) {
        const double k = g * std::sqrt(n + 1.0);
        for (double t : {0.1, 0.9, 2.5}) {
            const Jc2Amplitudes lo = analytic_jc2_amplitudes(g, n, t - h);
            const Jc2Amplitudes hi = analytic_jc2_amplitudes(g, n, t + h);
            const Jc2Amplitudes mid = analytic_jc2_amplitudes(g, n, t);
            const Complex dce = (hi.c_e - lo.c_e) / (2 * h);
            ASSERT_LT(std::abs(Complex(0, 1) * dce - k * mid.c_g), 1e-8);
        }
    }
}

TEST(jc2, rabi_frequency) {
    ASSERT_EQ(rabi_frequency(1.0, 0), 2.0);
    ASSERT_EQ(rabi_frequency(0.0, 3), 0.0);
    ASSERT_NEAR(rabi_frequency(kDefaultCoupling, 0), 4 * std::numbers::pi * 25e3, 1e-9);
}

TEST(jc2, reduced_density_matches_partial_trace) {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const double g = 0.5 + rng.uniform();
        const std::size_t n = static_cast<std::size_t>(rng.uniform() * 5);
        const double t = 4.0 * rng.uniform();
        ModelParams p;
        p.omega_field = 2.0;
        p.omega_e = 2.0;
        p.g_ge = g;
        p.n_max = n + 1;
        std::vector<Complex> psi0(2 * (p.n_max + 1), 0.0);
        psi0[jc2_index(n, true)] = 1.0;
        const std::vector<Complex> psi = HermitianPropagator(build_jc2_hamiltonian(p)).evolve(psi0, t);
        const DenseOperator rho = partial_trace_bipartite(psi, p.n_max + 1, 2, Subsystem::Second);
        ASSERT_LT(max_entry_distance(rho, reduced_atom_density(g, n, t)), 1e-10) << trial;
    }
    const double t = std::numbers::pi / 4;
    const DenseOperator half = reduced_atom_density(1.0, 0, t);
    ASSERT_NEAR(half(0, 0).real(), 0.5, 1e-15);
    ASSERT_NEAR(half(1, 1).real(), 0.5, 1e-15);
}

TEST(coherent_state, moments) {
    const std::vector<Complex> vac = coherent_state(0.0, 5);
    ASSERT_EQ(vac[0], Complex(1.0, 0.0));
    const std::vector<Complex> c2 = coherent_state(2.0, 30);
    double mean = 0.0;
    for (std::size_t n = 0; n < c2.size(); ++n) {
        mean += n * std::norm(c2[n]);
    }
    ASSERT_NEAR(mean, 2.0, 1e-4);
    const std::vector<Complex> c1 = coherent_state(1.0, 40);
    ASSERT_NEAR(std::norm(c1[1]), std::exp(-1.0), 1e-10);
}

TEST(coherent_state, truncation_error_names_requirement) {
    try {
        coherent_state(10.0, 5);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError &e) {
        ASSERT_NE(std::string(e.what()).find("n_max >= " + std::to_string(required_n_max(10.0))),
                  std::string::npos);
    }
}

TEST(entropy, vacuum_is_binary_entropy) {
    ModelParams p = unit_params();
    p.nbar = 0.0;
    p.n_max = 2;
    const std::vector<double> times = default_entropy_times(p.g_ge);
    ASSERT_EQ(times.size(), 200u);
    const Trajectory traj = entropy_trajectory(p, times);
    ASSERT_NEAR(traj.value(0, "S"), 0.0, 1e-9);
    double peak = 0.0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double c = std::cos(p.g_ge * traj.times()[i]);
        ASSERT_NEAR(traj.value(i, "S"), binary_entropy(c * c), 1e-8);
        peak = std::max(peak, traj.value(i, "S"));
    }
    ASSERT_LE(peak, std::numbers::ln2 + 1e-9);
    ASSERT_GT(peak, 0.69);
}

TEST(entropy, coherent_state_is_bounded_and_varies) {
    ModelParams p = unit_params();
    p.nbar = 2.0;
    p.n_max = 20;
    const Trajectory traj = entropy_trajectory(p, default_entropy_times(p.g_ge));
    const std::vector<double> s = traj.column("S");
    const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
    ASSERT_LE(*hi, std::numbers::ln2 + 1e-9);
    ASSERT_GT(*hi - *lo, 0.1);
}

TEST(three_level, hamiltonian_structure) {
    const ModelParams p = unit_params();
    const DenseOperator h = build_three_level_hamiltonian(p);
    ASSERT_TRUE(is_hermitian(h));
    ASSERT_EQ(h(encode_basis({0, AtomLevel::E}), encode_basis({1, AtomLevel::G})), Complex(p.g_ge, 0.0));
    ASSERT_EQ(h(encode_basis({0, AtomLevel::F}), encode_basis({1, AtomLevel::E})), Complex(p.g_ef, 0.0));
    for (std::size_t bad : {4u, 5u}) {
        for (std::size_t j = 0; j < 8; ++j) {
            ASSERT_EQ(h(bad, j), Complex(0.0, 0.0));
            ASSERT_EQ(h(j, bad), Complex(0.0, 0.0));
        }
    }
    ModelParams z = p;
    z.g_ge = 0.0;
    z.g_ef = 0.0;
    const DenseOperator h0 = build_three_level_hamiltonian(z);
    for (const BasisLabel &l : valid_labels()) {
        const double level = l.atom_level == AtomLevel::G ? p.omega_g
                             : l.atom_level == AtomLevel::E ? p.omega_e
                                                            : p.omega_f;
        const std::size_t i = encode_basis(l);
        ASSERT_EQ(h0(i, i).real(), p.omega_field * l.photon_n + level);
    }
    ASSERT_LT(commutator(h, three_level_excitation_operator()).max_abs(), 1e-12);
}

TEST(three_level, populations_and_excitations) {
    const LevelPopulations p0 = populations(StateVector::basis(3, 0));
    ASSERT_EQ(p0.g, 1.0);
    ASSERT_EQ(p0.e + p0.f + p0.leakage, 0.0);
    const double r = std::numbers::sqrt2 / 2;
    StateVector mix(std::vector<Complex>(8, 0.0));
    mix[encode_basis({1, AtomLevel::G})] = r;
    mix[encode_basis({0, AtomLevel::E})] = r;
    const LevelPopulations pm = populations(mix);
    ASSERT_NEAR(pm.g, 0.5, 1e-15);
    ASSERT_NEAR(pm.e, 0.5, 1e-15);
    ASSERT_EQ(excitation_expectation(StateVector::basis(3, 0)), 0.0);
    ASSERT_EQ(excitation_expectation(StateVector::basis(3, encode_basis({1, AtomLevel::E}))), 2.0);
}

TEST(three_level, excitation_conserved_along_exact_evolution) {
    const ModelParams p = unit_params();
    const HermitianPropagator prop(build_three_level_hamiltonian(p));
    const std::vector<Complex> psi0 = {0.0, 0.6, 0.8, 0.0, 0.0, 0.0, 0.0, 0.0};
    const double n0 = excitation_expectation(StateVector(psi0));
    for (int k = 0; k < 100; ++k) {
        const StateVector psi(prop.evolve(psi0, 0.05 * k));
        ASSERT_NEAR(excitation_expectation(psi), n0, 1e-10);
    }
}

TEST(lambda, frozen_without_drive) {
    ModelParams p;
    const LambdaAmplitudes c0{Complex(0.6, 0.0), Complex(0.0, 0.8), Complex(0.0, 0.0)};
    const LambdaAmplitudes c = lambda_propagate(p, c0, 5.0, 100);
    for (int i = 0; i < 3; ++i) {
        ASSERT_EQ(c[i], c0[i]);
    }
}

TEST(lambda, two_level_limit) {
    ModelParams p;
    p.omega_p = 1.0;
    p.omega_c = 0.0;
    const std::vector<double> times = {0.0, 0.5, 1.0, 2.0, 3.5, 6.0};
    const Trajectory traj =
        lambda_integrate(p, {Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0)}, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        ASSERT_NEAR(traj.value(i, "P1"), std::pow(std::cos(t / 2), 2), 1e-7);
        ASSERT_NEAR(traj.value(i, "P3"), std::pow(std::sin(t / 2), 2), 1e-7);
    }
}

TEST(lambda, dark_state_stays_dark) {
    ModelParams p;
    p.omega_p = 1.3;
    p.omega_c = 0.4;
    const LambdaAmplitudes dark = lambda_dark_state(p);
    const Trajectory traj = lambda_integrate(p, dark, std::vector<double>{0.0, 1.0, 10.0, 50.0});
    for (double p3 : traj.column("P3")) {
        ASSERT_LT(p3, 1e-10);
    }
}

TEST(lambda, norm_conserved_over_many_steps) {
    ModelParams p;
    p.omega_p = 1.0;
    p.omega_c = 2.0;
    const LambdaAmplitudes c = lambda_propagate(p, {Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0)},
                                                100.0, 10000);
    const double norm = std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]);
    ASSERT_NEAR(norm, 1.0, 1e-8);
}

TEST(lambda, rejects_bad_times) {
    ModelParams p;
    p.omega_p = 1.0;
    ASSERT_THROW(lambda_integrate(p, {Complex(1.0, 0.0), 0.0, 0.0}, std::vector<double>{0.0, 1.0, 0.5}),
                 ValidationError);
}

TEST(trajectory, csv_and_json) {
    Trajectory t({"a", "b"});
    t.push_back(0.0, {1.0, 0.5});
    t.push_back(0.1, {0.25, 0.75});
    ASSERT_EQ(t.to_csv(), "t,a,b\n0,1,0.5\n0.1,0.25,0.75\n");
    ASSERT_EQ(t.to_json()["b"][1], 0.75);
    ASSERT_THROW(t.push_back(0.1, {0.0, 0.0}), ValidationError);
    ASSERT_THROW(t.push_back(0.2, {0.0}), ValidationError);
    ASSERT_EQ(t.rescaled_time(10.0).times()[1], 1.0);
}
