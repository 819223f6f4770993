// Copyright 2026 The quanfuzz developers
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

#include "quanfuzz/core/kernels.hpp"

namespace quanfuzz::core::kernels {

void apply_single_qubit_serial(Amp *amps, std::size_t size, std::size_t mask,
                               const Mat2 &u) {
    const std::size_t lo_mask = mask - 1;
    const std::size_t hi_mask = ~lo_mask;
    const std::size_t pairs = size >> 1;
    for (std::size_t k = 0; k < pairs; ++k) {
        const std::size_t i0 = ((k & hi_mask) << 1) | (k & lo_mask);
        const std::size_t i1 = i0 | mask;
        const Amp a0 = amps[i0];
        const Amp a1 = amps[i1];
        amps[i0] = u[0] * a0 + u[1] * a1;
        amps[i1] = u[2] * a0 + u[3] * a1;
    }
}

void apply_single_qubit_parallel(Amp *amps, std::size_t size, std::size_t mask,
                                 const Mat2 &u) {
    const std::size_t lo_mask = mask - 1;
    const std::size_t hi_mask = ~lo_mask;
    const std::ptrdiff_t pairs = static_cast<std::ptrdiff_t>(size >> 1);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < pairs; ++k) {
        const std::size_t kk = static_cast<std::size_t>(k);
        const std::size_t i0 = ((kk & hi_mask) << 1) | (kk & lo_mask);
        const std::size_t i1 = i0 | mask;
        const Amp a0 = amps[i0];
        const Amp a1 = amps[i1];
        amps[i0] = u[0] * a0 + u[1] * a1;
        amps[i1] = u[2] * a0 + u[3] * a1;
    }
}

void apply_single_qubit(Amp *amps, std::size_t size, std::size_t mask,
                        const Mat2 &u) {
    if (size >= kParallelThreshold) {
        apply_single_qubit_parallel(amps, size, mask, u);
    } else {
        apply_single_qubit_serial(amps, size, mask, u);
    }
}

void probabilities_serial(const Amp *amps, std::size_t size, double *out) {
    for (std::size_t i = 0; i < size; ++i) {
        out[i] = std::norm(amps[i]);
    }
}

void probabilities_parallel(const Amp *amps, std::size_t size, double *out) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(size);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = std::norm(amps[i]);
    }
}

void probabilities(const Amp *amps, std::size_t size, double *out) {
    if (size >= kParallelThreshold) {
        probabilities_parallel(amps, size, out);
    } else {
        probabilities_serial(amps, size, out);
    }
}

double norm_sqr(const Amp *amps, std::size_t size) {
    double total = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
        total += std::norm(amps[i]);
    }
    return total;
}

} // namespace quanfuzz::core::kernels
