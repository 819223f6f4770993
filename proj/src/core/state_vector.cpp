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

#include "quanfuzz/core/state_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "quanfuzz/core/kernels.hpp"

namespace quanfuzz::core {

namespace {

void check_width(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n_qubits));
    }
}

void check_qubit(const StateVector &s, int qubit) {
    if (qubit < 0 || qubit >= s.n_qubits) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " out of range for " +
                                std::to_string(s.n_qubits) + " qubits");
    }
}

void check_value(const StateVector &s, std::uint64_t value) {
    if (value >= s.size()) {
        throw std::out_of_range("basis value " + std::to_string(value) +
                                " out of range for " +
                                std::to_string(s.n_qubits) + " qubits");
    }
}

} // namespace

StateVector basis_state(int n_qubits, std::uint64_t value) {
    check_width(n_qubits);
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps.assign(std::size_t{1} << n_qubits, Amp{0.0, 0.0});
    check_value(s, value);
    s.amps[value] = Amp{1.0, 0.0};
    return s;
}

StateVector random_state(int n_qubits, Rng &rng) {
    check_width(n_qubits);
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps.resize(std::size_t{1} << n_qubits);
    for (auto &a : s.amps) {
        a = Amp{rng.normal(), rng.normal()};
    }
    double inv =
        1.0 / std::sqrt(kernels::norm_sqr(s.amps.data(), s.amps.size()));
    for (auto &a : s.amps) {
        a *= inv;
    }
    return s;
}

void apply_gate_inplace(StateVector &s, GateKind g, int qubit) {
    check_qubit(s, qubit);
    Mat2 u = gate_matrix(g);
    // Qubit 0 is the MSB, so its stride covers half the vector.
    std::size_t mask = std::size_t{1} << (s.n_qubits - 1 - qubit);
    kernels::apply_single_qubit(s.amps.data(), s.amps.size(), mask, u);
}

StateVector apply_gate(const StateVector &s, GateKind g, int qubit) {
    StateVector out = s;
    apply_gate_inplace(out, g, qubit);
    return out;
}

void mix_inplace(StateVector &s) {
    for (int q = 0; q < s.n_qubits; ++q) {
        apply_gate_inplace(s, GateKind::H, q);
    }
}

StateVector mix(const StateVector &s) {
    StateVector out = s;
    mix_inplace(out);
    return out;
}

double prob_of_value(const StateVector &s, std::uint64_t value) {
    check_value(s, value);
    return std::norm(s.amps[value]);
}

std::vector<double> measure_probabilities(const StateVector &s) {
    std::vector<double> probs(s.size());
    kernels::probabilities(s.amps.data(), s.size(), probs.data());
    return probs;
}

StateVector collapse(const StateVector &s, std::uint64_t value) {
    double p = prob_of_value(s, value);
    if (p <= 0.0) {
        throw std::invalid_argument("cannot collapse to zero-probability "
                                    "outcome " +
                                    std::to_string(value));
    }
    return basis_state(s.n_qubits, value);
}

std::uint64_t sample_value(const StateVector &s, Rng &rng) {
    std::vector<double> probs = measure_probabilities(s);
    double u = rng.uniform();
    double cum = 0.0;
    std::uint64_t last_nonzero = 0;
    bool seen_nonzero = false;
    for (std::uint64_t i = 0; i < probs.size(); ++i) {
        if (probs[i] <= 0.0) {
            continue;
        }
        last_nonzero = i;
        seen_nonzero = true;
        cum += probs[i];
        if (u < cum) {
            return i;
        }
    }
    if (!seen_nonzero) {
        throw std::invalid_argument("state has no nonzero outcome");
    }
    // Rounding left u just above the accumulated total.
    return last_nonzero;
}

double norm(const StateVector &s) {
    return std::sqrt(kernels::norm_sqr(s.amps.data(), s.amps.size()));
}

bool amps_close(const StateVector &a, const StateVector &b, double tol) {
    if (a.n_qubits != b.n_qubits || a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.amps[i].real() - b.amps[i].real()) > tol ||
            std::abs(a.amps[i].imag() - b.amps[i].imag()) > tol) {
            return false;
        }
    }
    return true;
}

} // namespace quanfuzz::core
