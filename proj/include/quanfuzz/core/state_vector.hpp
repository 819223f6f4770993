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

#ifndef QUANFUZZ_CORE_STATE_VECTOR_HPP
#define QUANFUZZ_CORE_STATE_VECTOR_HPP

#include <cstdint>
#include <vector>

#include "quanfuzz/core/gates.hpp"
#include "quanfuzz/rng.hpp"

namespace quanfuzz::core {

/// Hard cap on register width; 2^28 amplitudes is already 4 GiB.
inline constexpr int kMaxQubits = 28;

/// Pure state of an n-qubit register: 2^n complex amplitudes whose
/// squared magnitudes sum to 1.
///
/// Qubit 0 is the MOST significant bit of the basis index, so the ket
/// |00101> of a 5-qubit register is amplitude index 5.
struct StateVector {
    int n_qubits = 0;
    std::vector<Amp> amps;

    std::size_t size() const { return amps.size(); }
};

/// |value> of an n-qubit register.
StateVector basis_state(int n_qubits, std::uint64_t value);

/// Normalized state with i.i.d. standard-normal real/imag parts.
/// Deterministic for a given rng state.
StateVector random_state(int n_qubits, Rng &rng);

/// (I x ... x U_g x ... x I)|s> with U_g acting on `qubit`. The input is
/// left untouched.
StateVector apply_gate(const StateVector &s, GateKind g, int qubit);
void apply_gate_inplace(StateVector &s, GateKind g, int qubit);

/// H on every qubit, in index order 0..n-1. From a basis state this
/// spreads probability uniformly over all 2^n outcomes.
StateVector mix(const StateVector &s);
void mix_inplace(StateVector &s);

/// |amps[value]|^2.
double prob_of_value(const StateVector &s, std::uint64_t value);

/// All 2^n outcome probabilities.
std::vector<double> measure_probabilities(const StateVector &s);

/// Post-measurement state for outcome `value`; the outcome must have
/// nonzero probability.
StateVector collapse(const StateVector &s, std::uint64_t value);

/// Draws one measurement outcome by inverse CDF with a single uniform
/// draw.
std::uint64_t sample_value(const StateVector &s, Rng &rng);

double norm(const StateVector &s);

/// Elementwise amplitude comparison within `tol`.
bool amps_close(const StateVector &a, const StateVector &b, double tol);

} // namespace quanfuzz::core

#endif
