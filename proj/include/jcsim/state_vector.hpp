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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace jcsim {

using Complex = std::complex<double>;

/// Dense amplitude vector over `qubit_count` qubits.
///
/// Basis index i has qubit q set iff bit q of i is set, so the display
/// bitstring of index i reads q_{n-1} ... q_1 q_0.
class StateVector {
  public:
    /// |0...0> on `qubit_count` qubits.
    explicit StateVector(std::size_t qubit_count);
    /// Takes ownership of raw amplitudes; the length must be a power of two.
    explicit StateVector(std::vector<Complex> amplitudes);

    static StateVector basis(std::size_t qubit_count, std::uint64_t index);

    std::size_t qubit_count() const noexcept { return qubit_count_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }

    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    std::span<Complex> amplitudes() noexcept { return amplitudes_; }

    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }
    Complex &operator[](std::size_t i) { return amplitudes_[i]; }

    double squared_norm() const;
    double probability(std::size_t index) const { return std::norm(amplitudes_.at(index)); }
    bool is_normalized(double tol = 1e-10) const;

  private:
    std::vector<Complex> amplitudes_;
    std::size_t qubit_count_;
};

}  // namespace jcsim
