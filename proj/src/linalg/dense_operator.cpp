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

#include "jcsim/dense_operator.hpp"

#include <algorithm>

#include "jcsim/errors.hpp"

namespace jcsim {

DenseOperator::DenseOperator(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw ValidationError("DenseOperator: matrix is not square");
    }
}

DenseOperator DenseOperator::identity(std::size_t dim) {
    return DenseOperator(Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)));
}

DenseOperator DenseOperator::zero(std::size_t dim) {
    return DenseOperator(Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)));
}

DenseOperator DenseOperator::diagonal(std::span<const Complex> entries) {
    DenseOperator d = zero(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        d.m_(i, i) = entries[i];
    }
    return d;
}

DenseOperator DenseOperator::diagonal(std::span<const double> entries) {
    DenseOperator d = zero(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        d.m_(i, i) = entries[i];
    }
    return d;
}

DenseOperator DenseOperator::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    Matrix m(n, n);
    Eigen::Index i = 0;
    for (const auto &row : rows) {
        if (static_cast<Eigen::Index>(row.size()) != n) {
            throw ValidationError("DenseOperator::from_rows: ragged or non-square rows");
        }
        Eigen::Index j = 0;
        for (const Complex &v : row) {
            m(i, j++) = v;
        }
        ++i;
    }
    return DenseOperator(std::move(m));
}

double DenseOperator::max_abs() const { return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff(); }

std::vector<Complex> DenseOperator::row_major() const {
    std::vector<Complex> out(static_cast<std::size_t>(m_.size()));
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i * n + j] = m_(i, j);
        }
    }
    return out;
}

namespace {
void require_same_dim(const DenseOperator &a, const DenseOperator &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw ValidationError(std::string(what) + ": dimension mismatch");
    }
}
}  // namespace

DenseOperator operator*(const DenseOperator &a, const DenseOperator &b) {
    require_same_dim(a, b, "operator*");
    return DenseOperator(a.m_ * b.m_);
}

DenseOperator operator+(const DenseOperator &a, const DenseOperator &b) {
    require_same_dim(a, b, "operator+");
    return DenseOperator(a.m_ + b.m_);
}

DenseOperator operator-(const DenseOperator &a, const DenseOperator &b) {
    require_same_dim(a, b, "operator-");
    return DenseOperator(a.m_ - b.m_);
}

DenseOperator operator*(Complex s, const DenseOperator &a) { return DenseOperator(s * a.m_); }

double max_entry_distance(const DenseOperator &a, const DenseOperator &b) {
    return (a - b).max_abs();
}

bool is_hermitian(const DenseOperator &op, double tol) {
    const double scale = std::max(1.0, op.max_abs());
    return (op.matrix() - op.matrix().adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

bool is_unitary(const DenseOperator &op, double tol) {
    const auto n = static_cast<Eigen::Index>(op.dim());
    const DenseOperator::Matrix residual =
        op.matrix() * op.matrix().adjoint() - DenseOperator::Matrix::Identity(n, n);
    return residual.cwiseAbs().maxCoeff() <= tol;
}

DenseOperator commutator(const DenseOperator &a, const DenseOperator &b) { return a * b - b * a; }

}  // namespace jcsim
