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
#include <cmath>
#include <limits>

#include "jcsim/errors.hpp"
#include "jcsim/jc_models.hpp"

namespace jcsim {
namespace {

constexpr Complex kHalfI{0.0, 0.5};

LambdaAmplitudes derivative(const LambdaAmplitudes &c, double wp, double wc) {
    return {kHalfI * wp * c[2], kHalfI * wc * c[2], kHalfI * (wp * c[0] + wc * c[1])};
}

LambdaAmplitudes axpy(const LambdaAmplitudes &y, double h, const LambdaAmplitudes &k) {
    return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2]};
}

void rk4_step(LambdaAmplitudes &c, double h, double wp, double wc) {
    const LambdaAmplitudes k1 = derivative(c, wp, wc);
    const LambdaAmplitudes k2 = derivative(axpy(c, h / 2, k1), wp, wc);
    const LambdaAmplitudes k3 = derivative(axpy(c, h / 2, k2), wp, wc);
    const LambdaAmplitudes k4 = derivative(axpy(c, h, k3), wp, wc);
    for (std::size_t i = 0; i < 3; ++i) {
        c[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
}

double norm2(const LambdaAmplitudes &c) { return std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]); }

void require_normalized(const LambdaAmplitudes &c0) {
    if (std::abs(norm2(c0) - 1.0) > 1e-10) {
        throw ValidationError("lambda_integrate: initial amplitudes are not normalized");
    }
}

}  // namespace

LambdaAmplitudes lambda_propagate(const ModelParams &p, const LambdaAmplitudes &c0, double t_end,
                                  std::size_t steps) {
    p.validate();
    require_normalized(c0);
    if (steps == 0) {
        throw ValidationError("lambda_propagate: step count must be positive");
    }
    if (!std::isfinite(t_end) || t_end < 0.0) {
        throw ValidationError("lambda_propagate: t_end must be finite and >= 0");
    }
    const double h = t_end / static_cast<double>(steps);
    LambdaAmplitudes c = c0;
    for (std::size_t s = 0; s < steps; ++s) {
        rk4_step(c, h, p.omega_p, p.omega_c);
    }
    return c;
}

Trajectory lambda_integrate(const ModelParams &p, const LambdaAmplitudes &c0,
                            std::span<const double> times, LambdaOptions options) {
    p.validate();
    require_normalized(c0);
    if (times.empty()) {
        throw ValidationError("lambda_integrate: no output times");
    }
    if (times.front() < 0.0) {
        throw ValidationError("lambda_integrate: times must be >= 0");
    }
    const double t_span = times.back();
    double h_nominal = 0.0;
    if (options.steps > 0) {
        h_nominal = t_span / static_cast<double>(options.steps);
    } else {
        const double rate = std::max({p.omega_p, p.omega_c, std::numeric_limits<double>::min()});
        h_nominal = std::min(0.01 / rate, t_span / 1000.0);
    }

    Trajectory out({"P1", "P2", "P3", "norm"});
    LambdaAmplitudes c = c0;
    double t_prev = 0.0;
    for (double t : times) {
        const double span = t - t_prev;
        if (span > 0.0) {
            // Equal sub-steps no longer than h_nominal, landing exactly on t.
            const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(span / h_nominal - 1e-9)));
            const double h = span / static_cast<double>(n);
            for (std::size_t s = 0; s < n; ++s) {
                rk4_step(c, h, p.omega_p, p.omega_c);
            }
        }
        out.push_back(t, {std::norm(c[0]), std::norm(c[1]), std::norm(c[2]), norm2(c)});
        t_prev = t;
    }
    return out;
}

LambdaAmplitudes lambda_dark_state(const ModelParams &p) {
    const double n = std::hypot(p.omega_p, p.omega_c);
    if (!(n > 0.0)) {
        throw ValidationError("lambda_dark_state: needs a nonzero drive");
    }
    return {Complex{p.omega_c / n, 0.0}, Complex{-p.omega_p / n, 0.0}, Complex{0.0, 0.0}};
}

}  // namespace jcsim
