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

// Compiled with -mavx2 -mfma; only reached after a CPUID check in dispatch.cpp.

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <vector>

#include "kernels_internal.hpp"

namespace jcsim::kernels::detail {
namespace {

// A __m256d holds two complex doubles: [re0, im0, re1, im1].

/// Broadcast scalar m times both lanes of x.
inline __m256d cmul_scalar(__m256d x, Complex m) {
    const __m256d mr = _mm256_set1_pd(m.real());
    const __m256d mi = _mm256_set1_pd(m.imag());
    const __m256d xs = _mm256_permute_pd(x, 0b0101);
    return _mm256_fmaddsub_pd(x, mr, _mm256_mul_pd(xs, mi));
}

/// Lane-wise complex product.
inline __m256d cmul(__m256d x, __m256d y) {
    const __m256d yr = _mm256_movedup_pd(y);
    const __m256d yi = _mm256_permute_pd(y, 0b1111);
    const __m256d xs = _mm256_permute_pd(x, 0b0101);
    return _mm256_fmaddsub_pd(x, yr, _mm256_mul_pd(xs, yi));
}

inline __m256d load2(const Complex *p) { return _mm256_loadu_pd(reinterpret_cast<const double *>(p)); }
inline void store2(Complex *p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double *>(p), v); }

void apply_1q_avx2(std::span<Complex> amps, std::size_t target, const Complex *m) {
    const std::size_t dim = amps.size();
    Complex *a = amps.data();
    if (dim < 2) {
        return;
    }
    if (target == 0) {
        // Each vector is one pair [a0, a1].
        const __m256d col0 = _mm256_setr_pd(m[0].real(), m[0].imag(), m[2].real(), m[2].imag());
        const __m256d col1 = _mm256_setr_pd(m[1].real(), m[1].imag(), m[3].real(), m[3].imag());
        for (std::size_t i = 0; i < dim; i += 2) {
            const __m256d v = load2(a + i);
            const __m256d a0 = _mm256_permute2f128_pd(v, v, 0x00);
            const __m256d a1 = _mm256_permute2f128_pd(v, v, 0x11);
            store2(a + i, _mm256_add_pd(cmul(a0, col0), cmul(a1, col1)));
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; i += 2) {
            const __m256d a0 = load2(a + i);
            const __m256d a1 = load2(a + i + stride);
            store2(a + i, _mm256_add_pd(cmul_scalar(a0, m[0]), cmul_scalar(a1, m[1])));
            store2(a + i + stride, _mm256_add_pd(cmul_scalar(a0, m[2]), cmul_scalar(a1, m[3])));
        }
    }
}

void apply_2q_avx2(std::span<Complex> amps, std::size_t t_hi, std::size_t t_lo,
                   const Complex *m) {
    if (t_hi == 0 || t_lo == 0) {
        apply_2q_scalar(amps, t_hi, t_lo, m);
        return;
    }
    // Bit 0 is free, so compressed indices j and j+1 give bases b and b+1.
    const std::size_t b_hi = std::size_t{1} << t_hi;
    const std::size_t b_lo = std::size_t{1} << t_lo;
    const std::array<std::size_t, 2> sorted{std::min(t_hi, t_lo), std::max(t_hi, t_lo)};
    const std::size_t n_bases = amps.size() / 4;
    Complex *a = amps.data();
    for (std::size_t j = 0; j < n_bases; j += 2) {
        const std::size_t base = insert_zero_bits(j, sorted);
        const std::array<std::size_t, 4> idx{base, base | b_lo, base | b_hi, base | b_hi | b_lo};
        const __m256d v[4] = {load2(a + idx[0]), load2(a + idx[1]), load2(a + idx[2]),
                              load2(a + idx[3])};
        for (std::size_t r = 0; r < 4; ++r) {
            const Complex *row = m + 4 * r;
            __m256d acc = cmul_scalar(v[0], row[0]);
            acc = _mm256_add_pd(acc, cmul_scalar(v[1], row[1]));
            acc = _mm256_add_pd(acc, cmul_scalar(v[2], row[2]));
            acc = _mm256_add_pd(acc, cmul_scalar(v[3], row[3]));
            store2(a + idx[r], acc);
        }
    }
}

void apply_kq_avx2(std::span<Complex> amps, std::span<const std::size_t> targets,
                   const Complex *m) {
    if (std::find(targets.begin(), targets.end(), std::size_t{0}) != targets.end()) {
        apply_kq_scalar(amps, targets, m);
        return;
    }
    const std::size_t k = targets.size();
    const std::size_t block = std::size_t{1} << k;
    std::vector<std::size_t> sorted(targets.begin(), targets.end());
    std::sort(sorted.begin(), sorted.end());
    const std::vector<std::size_t> offsets = matrix_offsets(targets);
    std::vector<Complex> in(2 * block);
    Complex *a = amps.data();
    const std::size_t n_bases = amps.size() >> k;
    for (std::size_t j = 0; j < n_bases; j += 2) {
        const std::size_t base = insert_zero_bits(j, sorted);
        for (std::size_t c = 0; c < block; ++c) {
            in[2 * c] = a[base + offsets[c]];
            in[2 * c + 1] = a[base + offsets[c] + 1];
        }
        for (std::size_t r = 0; r < block; ++r) {
            const Complex *row = m + r * block;
            __m256d acc = _mm256_setzero_pd();
            for (std::size_t c = 0; c < block; ++c) {
                acc = _mm256_add_pd(acc, cmul_scalar(load2(in.data() + 2 * c), row[c]));
            }
            store2(a + base + offsets[r], acc);
        }
    }
}

double squared_norm_avx2(std::span<const Complex> amps) {
    const double *p = reinterpret_cast<const double *>(amps.data());
    const std::size_t n = 2 * amps.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(p + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) std::array<double, 4> lanes{};
    _mm256_store_pd(lanes.data(), acc);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) {
        s += p[i] * p[i];
    }
    return s;
}

}  // namespace

const KernelTable &avx2_table() {
    static const KernelTable table{Backend::Avx2, "avx2", apply_1q_avx2, apply_2q_avx2,
                                   apply_kq_avx2, squared_norm_avx2};
    return table;
}

}  // namespace jcsim::kernels::detail
