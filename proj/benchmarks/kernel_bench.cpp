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

// Serial vs OpenMP kernel comparison. Run with --benchmark_filter to
// narrow, e.g. --benchmark_filter=probabilities.

#include <benchmark/benchmark.h>

#include <vector>

#include "quanfuzz/core/gates.hpp"
#include "quanfuzz/core/kernels.hpp"
#include "quanfuzz/rng.hpp"

namespace {

using quanfuzz::Rng;
using namespace quanfuzz::core;
using namespace quanfuzz::core::kernels;

std::vector<Amp> random_amps(int n_qubits) {
    Rng rng(12345);
    std::vector<Amp> amps(std::size_t{1} << n_qubits);
    for (auto &a : amps) {
        a = Amp{rng.normal(), rng.normal()};
    }
    return amps;
}

void bm_gate_serial(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    auto amps = random_amps(n);
    std::size_t mask = std::size_t{1} << (n / 2);
    Mat2 u = gate_matrix(GateKind::H);
    for (auto _ : state) {
        apply_single_qubit_serial(amps.data(), amps.size(), mask, u);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * (1LL << n));
}

void bm_gate_parallel(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    auto amps = random_amps(n);
    std::size_t mask = std::size_t{1} << (n / 2);
    Mat2 u = gate_matrix(GateKind::H);
    for (auto _ : state) {
        apply_single_qubit_parallel(amps.data(), amps.size(), mask, u);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * (1LL << n));
}

void bm_probabilities_serial(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    auto amps = random_amps(n);
    std::vector<double> probs(amps.size());
    for (auto _ : state) {
        probabilities_serial(amps.data(), amps.size(), probs.data());
        benchmark::DoNotOptimize(probs.data());
    }
    state.SetItemsProcessed(state.iterations() * (1LL << n));
}

void bm_probabilities_parallel(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    auto amps = random_amps(n);
    std::vector<double> probs(amps.size());
    for (auto _ : state) {
        probabilities_parallel(amps.data(), amps.size(), probs.data());
        benchmark::DoNotOptimize(probs.data());
    }
    state.SetItemsProcessed(state.iterations() * (1LL << n));
}

BENCHMARK(bm_gate_serial)->DenseRange(10, 24, 2);
BENCHMARK(bm_gate_parallel)->DenseRange(10, 24, 2);
BENCHMARK(bm_probabilities_serial)->DenseRange(10, 24, 2);
BENCHMARK(bm_probabilities_parallel)->DenseRange(10, 24, 2);

} // namespace

BENCHMARK_MAIN();
