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

#ifndef QUANFUZZ_CORE_GATES_HPP
#define QUANFUZZ_CORE_GATES_HPP

#include <array>
#include <complex>
#include <optional>
#include <string_view>

namespace quanfuzz::core {

using Amp = std::complex<double>;

/// Single-qubit gate set: the Pauli gates, Hadamard, and the S/T phase
/// rotations.
enum class GateKind { X, Y, Z, H, S, T };

inline constexpr std::array<GateKind, 6> kAllGates = {
    GateKind::X, GateKind::Y, GateKind::Z,
    GateKind::H, GateKind::S, GateKind::T};

/// 2x2 complex matrix, row-major.
using Mat2 = std::array<Amp, 4>;

/// The defining matrix of `g`. The T entry e^{i pi/4} is computed at full
/// double precision.
Mat2 gate_matrix(GateKind g);

std::string_view gate_name(GateKind g);

/// Parses a one-letter gate name ("X".."T", case-sensitive).
std::optional<GateKind> gate_from_name(std::string_view name);

} // namespace quanfuzz::core

#endif
