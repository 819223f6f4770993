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

#include "quanfuzz/campaign/benchmark_gen.hpp"

#include <sstream>
#include <stdexcept>

#include "quanfuzz/dsl/parser.hpp"
#include "quanfuzz/dsl/printer.hpp"

namespace quanfuzz::campaign {

BenchmarkSpec gen_benchmark(int n, std::uint64_t seed) {
    if (n < 2 || n > 8) {
        throw std::invalid_argument("benchmark qubit count must be in "
                                    "[2, 8], got " +
                                    std::to_string(n));
    }
    std::uint64_t dim = std::uint64_t{1} << n;
    std::int64_t target = static_cast<std::int64_t>((5 + seed) % dim);

    std::ostringstream src;
    src << "procedure example(){\n";
    src << "    qureg q[" << n << "];\n";
    src << "    Mix(q);\n";
    src << "    if (measure(q)==" << target << "){\n";
    src << "        print \"crash\";\n";
    src << "        int i=1/0;\n";
    src << "    }\n";
    src << "    print \"safe\";\n";
    src << "}\n";

    BenchmarkSpec spec;
    spec.id = "QB_0" + std::to_string(n - 1);
    spec.n_qubits = n;
    spec.target_value = target;
    spec.program = dsl::parse(src.str());
    return spec;
}

std::string benchmark_source(const BenchmarkSpec &spec) {
    return dsl::pretty_print(spec.program);
}

} // namespace quanfuzz::campaign
