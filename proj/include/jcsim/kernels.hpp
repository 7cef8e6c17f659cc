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
#include <span>

namespace jcsim::kernels {

using Complex = std::complex<double>;

enum class Backend { Scalar, Avx2 };

/// In-place statevector kernels. Matrices are row-major; for multi-qubit
/// kernels the first target is the most significant bit of the matrix index.
struct KernelTable {
    Backend backend;
    const char *name;
    void (*apply_1q)(std::span<Complex> amps, std::size_t target, const Complex *m);
    void (*apply_2q)(std::span<Complex> amps, std::size_t t_hi, std::size_t t_lo,
                     const Complex *m);
    void (*apply_kq)(std::span<Complex> amps, std::span<const std::size_t> targets,
                     const Complex *m);
    double (*squared_norm)(std::span<const Complex> amps);
};

const KernelTable &scalar_kernels();

/// nullptr when the build has no AVX2 variant or the CPU lacks AVX2+FMA.
const KernelTable *avx2_kernels();

/// Best available table. JCSIM_KERNELS=scalar in the environment forces the
/// scalar reference path.
const KernelTable &active_kernels();

}  // namespace jcsim::kernels
