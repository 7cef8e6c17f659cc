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

#include <algorithm>
#include <array>
#include <vector>

#include "kernels_internal.hpp"

namespace jcsim::kernels::detail {

void apply_1q_scalar(std::span<Complex> amps, std::size_t target, const Complex *m) {
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t dim = amps.size();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            const Complex a0 = amps[i];
            const Complex a1 = amps[i + stride];
            amps[i] = m[0] * a0 + m[1] * a1;
            amps[i + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

void apply_2q_scalar(std::span<Complex> amps, std::size_t t_hi, std::size_t t_lo,
                     const Complex *m) {
    const std::size_t b_hi = std::size_t{1} << t_hi;
    const std::size_t b_lo = std::size_t{1} << t_lo;
    const std::array<std::size_t, 2> sorted{std::min(t_hi, t_lo), std::max(t_hi, t_lo)};
    const std::size_t n_bases = amps.size() / 4;
    for (std::size_t j = 0; j < n_bases; ++j) {
        const std::size_t base = insert_zero_bits(j, sorted);
        const std::array<std::size_t, 4> idx{base, base | b_lo, base | b_hi, base | b_hi | b_lo};
        const std::array<Complex, 4> v{amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]};
        for (std::size_t r = 0; r < 4; ++r) {
            const Complex *row = m + 4 * r;
            amps[idx[r]] = row[0] * v[0] + row[1] * v[1] + row[2] * v[2] + row[3] * v[3];
        }
    }
}

void apply_kq_scalar(std::span<Complex> amps, std::span<const std::size_t> targets,
                     const Complex *m) {
    const std::size_t k = targets.size();
    const std::size_t block = std::size_t{1} << k;
    std::vector<std::size_t> sorted(targets.begin(), targets.end());
    std::sort(sorted.begin(), sorted.end());
    const std::vector<std::size_t> offsets = matrix_offsets(targets);
    std::vector<Complex> in(block);
    const std::size_t n_bases = amps.size() >> k;
    for (std::size_t j = 0; j < n_bases; ++j) {
        const std::size_t base = insert_zero_bits(j, sorted);
        for (std::size_t c = 0; c < block; ++c) {
            in[c] = amps[base + offsets[c]];
        }
        for (std::size_t r = 0; r < block; ++r) {
            Complex acc{0.0, 0.0};
            const Complex *row = m + r * block;
            for (std::size_t c = 0; c < block; ++c) {
                acc += row[c] * in[c];
            }
            amps[base + offsets[r]] = acc;
        }
    }
}

double squared_norm_scalar(std::span<const Complex> amps) {
    double s = 0.0;
    for (const Complex &a : amps) {
        s += std::norm(a);
    }
    return s;
}

}  // namespace jcsim::kernels::detail
