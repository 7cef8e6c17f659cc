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

#include "jcsim/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "jcsim/errors.hpp"
#include "jcsim/kernels.hpp"

namespace jcsim {
namespace {

constexpr double kPsdTolerance = 1e-10;
constexpr double kEntropyClamp = 1e-9;

void require_targets(std::span<const std::size_t> targets, std::size_t qubit_count,
                     const char *where) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] >= qubit_count) {
            throw ValidationError(std::string(where) + ": target " + std::to_string(targets[i]) +
                                  " out of range for " + std::to_string(qubit_count) + " qubits");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) {
                throw ValidationError(std::string(where) + ": duplicate target " +
                                      std::to_string(targets[i]));
            }
        }
    }
}

/// Bits of `index` at `qubits`, qubits[0] most significant.
std::size_t gather_bits(std::size_t index, std::span<const std::size_t> qubits) {
    std::size_t out = 0;
    for (std::size_t q : qubits) {
        out = (out << 1) | ((index >> q) & 1U);
    }
    return out;
}

void validate_density_matrix(const DenseOperator &rho, const char *where) {
    if (!is_hermitian(rho, 1e-10)) {
        throw ValidationError(std::string(where) + ": density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex{1.0, 0.0}) > 1e-10) {
        throw ValidationError(std::string(where) + ": density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<DenseOperator::Matrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTolerance) {
        throw ValidationError(std::string(where) + ": density matrix has a negative eigenvalue");
    }
}

}  // namespace

DenseOperator tensor_product(const DenseOperator &a, const DenseOperator &b) {
    const auto na = static_cast<Eigen::Index>(a.dim());
    const auto nb = static_cast<Eigen::Index>(b.dim());
    DenseOperator::Matrix out(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; ++i) {
        for (Eigen::Index j = 0; j < na; ++j) {
            out.block(i * nb, j * nb, nb, nb) = a.matrix()(i, j) * b.matrix();
        }
    }
    return DenseOperator(std::move(out));
}

HermitianPropagator::HermitianPropagator(const DenseOperator &h) {
    if (!is_hermitian(h)) {
        throw ValidationError("hermitian_expm: generator is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<DenseOperator::Matrix> es(h.matrix());
    eigenvalues_ = es.eigenvalues();
    eigenvectors_ = es.eigenvectors();
}

DenseOperator HermitianPropagator::at(double t) const {
    Eigen::VectorXcd phases(eigenvalues_.size());
    for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k) {
        phases(k) = std::polar(1.0, -eigenvalues_(k) * t);
    }
    return DenseOperator(eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint());
}

std::vector<Complex> HermitianPropagator::evolve(std::span<const Complex> psi, double t) const {
    if (psi.size() != dim()) {
        throw ValidationError("HermitianPropagator::evolve: dimension mismatch");
    }
    const Eigen::Map<const Eigen::VectorXcd> in(psi.data(), static_cast<Eigen::Index>(psi.size()));
    Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * in;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        coeffs(k) *= std::polar(1.0, -eigenvalues_(k) * t);
    }
    const Eigen::VectorXcd out = eigenvectors_ * coeffs;
    return {out.data(), out.data() + out.size()};
}

DenseOperator hermitian_expm(const DenseOperator &h, double t) {
    return HermitianPropagator(h).at(t);
}

StateVector apply_operator(const StateVector &state, const DenseOperator &u,
                           std::span<const std::size_t> targets) {
    require_targets(targets, state.qubit_count(), "apply_operator");
    if (targets.empty() || u.dim() != (std::size_t{1} << targets.size())) {
        throw ValidationError("apply_operator: operator dimension " + std::to_string(u.dim()) +
                              " does not match " + std::to_string(targets.size()) + " targets");
    }
    StateVector out = state;
    const std::vector<Complex> m = u.row_major();
    const kernels::KernelTable &k = kernels::active_kernels();
    switch (targets.size()) {
    case 1:
        k.apply_1q(out.amplitudes(), targets[0], m.data());
        break;
    case 2:
        k.apply_2q(out.amplitudes(), targets[0], targets[1], m.data());
        break;
    default:
        k.apply_kq(out.amplitudes(), targets, m.data());
        break;
    }
    return out;
}

DenseOperator embed_operator(const DenseOperator &u, std::span<const std::size_t> targets,
                             std::size_t qubit_count) {
    require_targets(targets, qubit_count, "embed_operator");
    if (u.dim() != (std::size_t{1} << targets.size())) {
        throw ValidationError("embed_operator: operator dimension does not match targets");
    }
    std::size_t target_mask = 0;
    for (std::size_t t : targets) {
        target_mask |= std::size_t{1} << t;
    }
    const std::size_t dim = std::size_t{1} << qubit_count;
    DenseOperator out = DenseOperator::zero(dim);
    for (std::size_t row = 0; row < dim; ++row) {
        const std::size_t r = gather_bits(row, targets);
        for (std::size_t col = 0; col < dim; ++col) {
            if ((row & ~target_mask) != (col & ~target_mask)) {
                continue;
            }
            out(row, col) = u(r, gather_bits(col, targets));
        }
    }
    return out;
}

DenseOperator density_matrix(const StateVector &state) {
    const Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(),
                                                 static_cast<Eigen::Index>(state.dim()));
    return DenseOperator(psi * psi.adjoint());
}

DenseOperator partial_trace(const DenseOperator &rho, std::span<const std::size_t> keep) {
    if (!std::has_single_bit(rho.dim())) {
        throw ValidationError("partial_trace: dimension is not a power of two");
    }
    const auto qubit_count = static_cast<std::size_t>(std::countr_zero(rho.dim()));
    require_targets(keep, qubit_count, "partial_trace");
    validate_density_matrix(rho, "partial_trace");

    std::size_t keep_mask = 0;
    for (std::size_t q : keep) {
        keep_mask |= std::size_t{1} << q;
    }
    DenseOperator out = DenseOperator::zero(std::size_t{1} << keep.size());
    const std::size_t dim = rho.dim();
    for (std::size_t row = 0; row < dim; ++row) {
        const std::size_t r = gather_bits(row, keep);
        for (std::size_t col = 0; col < dim; ++col) {
            if ((row & ~keep_mask) == (col & ~keep_mask)) {
                out(r, gather_bits(col, keep)) += rho(row, col);
            }
        }
    }
    return out;
}

DenseOperator partial_trace(const StateVector &state, std::span<const std::size_t> keep) {
    if (!state.is_normalized(1e-10)) {
        throw ValidationError("partial_trace: state is not normalized");
    }
    return partial_trace(density_matrix(state), keep);
}

DenseOperator partial_trace_bipartite(std::span<const Complex> psi, std::size_t dim_first,
                                      std::size_t dim_second, Subsystem keep) {
    if (psi.size() != dim_first * dim_second) {
        throw ValidationError("partial_trace_bipartite: state length does not match dimensions");
    }
    // psi reshaped as a dim_first x dim_second matrix M (row-major); the
    // reduced states are M M^dag and M^T M^*.
    const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
        psi.data(), static_cast<Eigen::Index>(dim_first), static_cast<Eigen::Index>(dim_second));
    if (keep == Subsystem::First) {
        return DenseOperator(m * m.adjoint());
    }
    return DenseOperator(m.transpose() * m.conjugate());
}

double von_neumann_entropy(const DenseOperator &rho) {
    if (!is_hermitian(rho, 1e-10)) {
        throw ValidationError("von_neumann_entropy: density matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<DenseOperator::Matrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        const double lambda = es.eigenvalues()(k);
        if (lambda < -kEntropyClamp) {
            throw ValidationError("von_neumann_entropy: eigenvalue " + std::to_string(lambda) +
                                  " is below -1e-9");
        }
        if (lambda > 0.0) {
            s -= lambda * std::log(lambda);
        }
    }
    return std::max(s, 0.0);
}

double binary_entropy(double p) {
    double s = 0.0;
    if (p > 0.0) {
        s -= p * std::log(p);
    }
    if (p < 1.0) {
        s -= (1.0 - p) * std::log(1.0 - p);
    }
    return s;
}

double state_fidelity(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw ValidationError("state_fidelity: dimension mismatch");
    }
    Complex overlap{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::norm(overlap);
}

double spectral_norm(const DenseOperator &op) {
    if (op.dim() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<DenseOperator::Matrix> svd(op.matrix());
    return svd.singularValues()(0);
}

double phase_aligned_distance(const DenseOperator &u, const DenseOperator &v) {
    if (u.dim() != v.dim()) {
        throw ValidationError("phase_aligned_distance: dimension mismatch");
    }
    const DenseOperator::Matrix w = v.matrix().adjoint() * u.matrix();
    Eigen::ComplexEigenSolver<DenseOperator::Matrix> es(w, false);
    std::vector<double> phases;
    phases.reserve(static_cast<std::size_t>(w.rows()));
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        phases.push_back(std::arg(es.eigenvalues()(k)));
    }
    std::sort(phases.begin(), phases.end());
    // The largest gap between consecutive eigenphases (cyclically) is the
    // complement of the smallest covering arc.
    const double two_pi = 2.0 * std::numbers::pi;
    std::size_t gap_end = 0;
    double best_gap = phases.front() + two_pi - phases.back();
    for (std::size_t i = 1; i < phases.size(); ++i) {
        const double gap = phases[i] - phases[i - 1];
        if (gap > best_gap) {
            best_gap = gap;
            gap_end = i;
        }
    }
    const double arc_start = phases[gap_end];
    const double center = arc_start + 0.5 * (two_pi - best_gap);
    return spectral_norm(DenseOperator(u.matrix() - std::polar(1.0, center) * v.matrix()));
}

}  // namespace jcsim
