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

#include "jcsim/state_vector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "jcsim/errors.hpp"
#include "jcsim/kernels.hpp"

namespace jcsim {

StateVector::StateVector(std::size_t qubit_count)
    : amplitudes_(std::size_t{1} << qubit_count, Complex{0.0, 0.0}), qubit_count_(qubit_count) {
    if (qubit_count > 30) {
        throw ValidationError("StateVector: qubit_count " + std::to_string(qubit_count) +
                              " is too large");
    }
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)), qubit_count_(0) {
    if (amplitudes_.empty() || !std::has_single_bit(amplitudes_.size())) {
        throw ValidationError("StateVector: length " + std::to_string(amplitudes_.size()) +
                              " is not a power of two");
    }
    qubit_count_ = static_cast<std::size_t>(std::countr_zero(amplitudes_.size()));
}

StateVector StateVector::basis(std::size_t qubit_count, std::uint64_t index) {
    StateVector s(qubit_count);
    if (index >= s.dim()) {
        throw ValidationError("StateVector::basis: index out of range");
    }
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

double StateVector::squared_norm() const {
    return kernels::active_kernels().squared_norm(amplitudes_);
}

bool StateVector::is_normalized(double tol) const { return std::abs(squared_norm() - 1.0) <= tol; }

}  // namespace jcsim
