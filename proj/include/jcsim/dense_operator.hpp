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

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace jcsim {

using Complex = std::complex<double>;

/// Square complex matrix. Row i / column j index basis states with the same
/// bit convention as StateVector.
class DenseOperator {
  public:
    using Matrix = Eigen::MatrixXcd;

    DenseOperator() = default;
    explicit DenseOperator(Matrix m);

    static DenseOperator identity(std::size_t dim);
    static DenseOperator zero(std::size_t dim);
    static DenseOperator diagonal(std::span<const Complex> entries);
    static DenseOperator diagonal(std::span<const double> entries);
    static DenseOperator from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    Complex &operator()(std::size_t i, std::size_t j) { return m_(i, j); }
    const Matrix &matrix() const noexcept { return m_; }

    DenseOperator adjoint() const { return DenseOperator(m_.adjoint()); }
    double max_abs() const;
    Complex trace() const { return m_.trace(); }
    /// Entries in row-major order, the layout the state kernels consume.
    std::vector<Complex> row_major() const;

    friend DenseOperator operator*(const DenseOperator &a, const DenseOperator &b);
    friend DenseOperator operator+(const DenseOperator &a, const DenseOperator &b);
    friend DenseOperator operator-(const DenseOperator &a, const DenseOperator &b);
    friend DenseOperator operator*(Complex s, const DenseOperator &a);

  private:
    Matrix m_;
};

/// Max-entry distance between two operators of equal dimension.
double max_entry_distance(const DenseOperator &a, const DenseOperator &b);

/// Tolerances are absolute, scaled by max(1, max|entry|).
bool is_hermitian(const DenseOperator &op, double tol = 1e-12);
bool is_unitary(const DenseOperator &op, double tol = 1e-10);

DenseOperator commutator(const DenseOperator &a, const DenseOperator &b);

}  // namespace jcsim
