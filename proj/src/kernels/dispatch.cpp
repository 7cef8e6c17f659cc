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

#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"

namespace jcsim::kernels {

const KernelTable &scalar_kernels() {
    static const KernelTable table{Backend::Scalar, "scalar", detail::apply_1q_scalar,
                                   detail::apply_2q_scalar, detail::apply_kq_scalar,
                                   detail::squared_norm_scalar};
    return table;
}

const KernelTable *avx2_kernels() {
#if defined(JCSIM_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &detail::avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable &active_kernels() {
    static const KernelTable *chosen = [] {
        const char *env = std::getenv("JCSIM_KERNELS");
        if (env != nullptr && std::string_view(env) == "scalar") {
            return &scalar_kernels();
        }
        const KernelTable *simd = avx2_kernels();
        return simd != nullptr ? simd : &scalar_kernels();
    }();
    return *chosen;
}

}  // namespace jcsim::kernels
