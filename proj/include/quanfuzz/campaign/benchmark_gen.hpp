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

#ifndef QUANFUZZ_CAMPAIGN_BENCHMARK_GEN_HPP
#define QUANFUZZ_CAMPAIGN_BENCHMARK_GEN_HPP

#include <cstdint>
#include <string>

#include "quanfuzz/dsl/ast.hpp"

namespace quanfuzz::campaign {

/// One benchmark program: an n-qubit register mixed to uniform, one
/// measurement-guarded branch hiding a division by zero, a trailing
/// print. QB_01 through QB_07 cover n = 2..8.
struct BenchmarkSpec {
    std::string id;
    int n_qubits = 0;
    std::int64_t target_value = 0;
    dsl::Program program;
};

/// Deterministic per (n, seed). The default seed keeps the target at
/// 5 mod 2^n; other seeds shift it. At n = 5 the generated program is
/// the canonical example program.
BenchmarkSpec gen_benchmark(int n, std::uint64_t seed = 0);

/// The benchmark's source text (canonical formatting).
std::string benchmark_source(const BenchmarkSpec &spec);

} // namespace quanfuzz::campaign

#endif
