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
#include <vector>

#include "jcsim/dense_operator.hpp"
#include "jcsim/state_vector.hpp"

namespace jcsim {

/// Kronecker product; `a`'s index varies slowest.
DenseOperator tensor_product(const DenseOperator &a, const DenseOperator &b);

/// Eigendecomposition of a Hermitian generator, cached so that exp(-iHt) can
/// be evaluated for many t. All generators use hbar = 1 (angular frequencies).
class HermitianPropagator {
  public:
    /// Throws ValidationError if `h` is not Hermitian.
    explicit HermitianPropagator(const DenseOperator &h);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(eigenvalues_.size()); }
    const Eigen::VectorXd &eigenvalues() const noexcept { return eigenvalues_; }

    /// exp(-i H t).
    DenseOperator at(double t) const;
    /// exp(-i H t) |psi>, without forming the full propagator.
    std::vector<Complex> evolve(std::span<const Complex> psi, double t) const;

  private:
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
};

/// exp(-i H t) by full Hermitian eigendecomposition (hbar = 1).
DenseOperator hermitian_expm(const DenseOperator &h, double t);

/// Applies `u` to `targets` of `state`. targets[0] is the most significant bit
/// of u's row/column index. Dispatches to the active state kernels.
StateVector apply_operator(const StateVector &state, const DenseOperator &u,
                           std::span<const std::size_t> targets);

/// Full 2^n x 2^n matrix of `u` acting on `targets` (identity elsewhere).
DenseOperator embed_operator(const DenseOperator &u, std::span<const std::size_t> targets,
                             std::size_t qubit_count);

DenseOperator density_matrix(const StateVector &state);

/// Reduced density matrix on `keep` (keep[0] becomes the most significant bit).
/// Requires a valid density matrix: trace 1, Hermitian, eigenvalues >= -1e-10.
DenseOperator partial_trace(const DenseOperator &rho, std::span<const std::size_t> keep);
DenseOperator partial_trace(const StateVector &state, std::span<const std::size_t> keep);

enum class Subsystem { First, Second };

/// Reduced state of a pure bipartite vector laid out as first (x) second,
/// for subsystems whose dimensions are not powers of two.
DenseOperator partial_trace_bipartite(std::span<const Complex> psi, std::size_t dim_first,
                                      std::size_t dim_second, Subsystem keep);

/// -sum lambda ln lambda in nats. Eigenvalues in [-1e-9, 0) are clamped to zero.
double von_neumann_entropy(const DenseOperator &rho);

/// Binary entropy in nats; 0 ln 0 := 0.
double binary_entropy(double p);

/// |<a|b>|^2.
double state_fidelity(const StateVector &a, const StateVector &b);

/// Largest singular value.
double spectral_norm(const DenseOperator &op);

/// min over phi of ||u - e^{i phi} v||_2 for unitary u, v.
///
/// For unitaries, ||u - e^{i phi} v||_2 = max_k |lambda_k - e^{i phi}| where lambda_k
/// are eigenvalues of v^dagger u, so the optimal phi bisects the smallest arc
/// containing all eigenphases. The norm itself is then taken from the singular
/// values of the aligned difference.
double phase_aligned_distance(const DenseOperator &u, const DenseOperator &v);

}  // namespace jcsim
