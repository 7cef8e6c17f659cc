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

#include "jcsim/kernels.hpp"

namespace jcsim::kernels::detail {

/// Inserts a zero bit at each (ascending) position in `sorted_targets`.
inline std::size_t insert_zero_bits(std::size_t compressed,
                                    std::span<const std::size_t> sorted_targets) {
    for (std::size_t t : sorted_targets) {
        const std::size_t low = compressed & ((std::size_t{1} << t) - 1);
        compressed = ((compressed >> t) << (t + 1)) | low;
    }
    return compressed;
}

/// offsets[c] = sum_j bit(c, k-1-j) << targets[j].
inline std::vector<std::size_t> matrix_offsets(std::span<const std::size_t> targets) {
    const std::size_t k = targets.size();
    std::vector<std::size_t> offsets(std::size_t{1} << k, 0);
    for (std::size_t c = 0; c < offsets.size(); ++c) {
        for (std::size_t j = 0; j < k; ++j) {
            if ((c >> (k - 1 - j)) & 1U) {
                offsets[c] |= std::size_t{1} << targets[j];
            }
        }
    }
    return offsets;
}

void apply_1q_scalar(std::span<Complex> amps, std::size_t target, const Complex *m);
void apply_2q_scalar(std::span<Complex> amps, std::size_t t_hi, std::size_t t_lo,
                     const Complex *m);
void apply_kq_scalar(std::span<Complex> amps, std::span<const std::size_t> targets,
                     const Complex *m);
double squared_norm_scalar(std::span<const Complex> amps);

#if defined(JCSIM_HAVE_AVX2)
const KernelTable &avx2_table();
#endif

}  // namespace jcsim::kernels::detail
