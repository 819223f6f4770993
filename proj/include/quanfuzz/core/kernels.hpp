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

#ifndef QUANFUZZ_CORE_KERNELS_HPP
#define QUANFUZZ_CORE_KERNELS_HPP

#include <cstddef>

#include "quanfuzz/core/gates.hpp"

namespace quanfuzz::core::kernels {

/// Amplitude count at/above which the dispatching entry points use the
/// OpenMP kernels. Below it the serial path wins on overhead.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

/// In-place single-qubit gate over `size` amplitudes. `mask` has exactly
/// the target bit set; the kernel pairs index i0 (bit clear) with
/// i0|mask (bit set) and multiplies each pair by `u`.
///
/// The serial kernel is the reference implementation; the parallel one
/// must produce bit-identical output (disjoint writes, no reductions).
void apply_single_qubit_serial(Amp *amps, std::size_t size, std::size_t mask,
                               const Mat2 &u);
void apply_single_qubit_parallel(Amp *amps, std::size_t size, std::size_t mask,
                                 const Mat2 &u);
void apply_single_qubit(Amp *amps, std::size_t size, std::size_t mask,
                        const Mat2 &u);

/// out[i] = |amps[i]|^2.
void probabilities_serial(const Amp *amps, std::size_t size, double *out);
void probabilities_parallel(const Amp *amps, std::size_t size, double *out);
void probabilities(const Amp *amps, std::size_t size, double *out);

/// Serial by design: a fixed summation order keeps norms reproducible.
double norm_sqr(const Amp *amps, std::size_t size);

} // namespace quanfuzz::core::kernels

#endif
