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

#ifndef QUANFUZZ_INTERP_INTERPRETER_HPP
#define QUANFUZZ_INTERP_INTERPRETER_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quanfuzz/analysis/sensitivity.hpp"
#include "quanfuzz/core/state_vector.hpp"
#include "quanfuzz/dsl/ast.hpp"
#include "quanfuzz/rng.hpp"

namespace quanfuzz::interp {

/// Weight mode rejects programs whose target site sits behind another
/// measurement; see run_to_measurement.
class UnsupportedProgram : public std::runtime_error {
  public:
    explicit UnsupportedProgram(const std::string &msg)
        : std::runtime_error(msg) {}
};

enum class CrashKind { DivisionByZero };

struct Crash {
    CrashKind kind = CrashKind::DivisionByZero;
    dsl::SourceSpan span;
};

struct ExecutionTrace {
    std::set<int> branches_taken;
    std::vector<std::pair<int, std::uint64_t>> measurement_results;
    std::optional<Crash> crash;
    std::vector<std::string> log;
};

struct CoverageReport {
    int trials = 0;
    std::set<int> covered;
    double coverage_ratio = 0.0;
    /// Per site, the fraction of trials that entered the then-branch.
    std::vector<double> sensitive_hit_frequency;
    int crashes = 0;
};

/// Applies every gate/Mix statement preceding `site` to a copy of `init`
/// and returns the ket just before the site's measurement. The site must
/// be the first measurement on the execution path; otherwise throws
/// UnsupportedProgram. Width mismatches throw std::invalid_argument.
core::StateVector run_to_measurement(const dsl::Program &p,
                                     const core::StateVector &init,
                                     const analysis::SensitiveSite &site);

/// Probability that the site's measurement yields its target value:
/// prob_of_value(run_to_measurement(p, init, site), site.target_value).
double weight_analysis(const dsl::Program &p, const core::StateVector &init,
                       const analysis::SensitiveSite &site);

/// Full stochastic run. Each IfMeasure draws one outcome by inverse CDF,
/// collapses the register, and branches on outcome == target. Division
/// by zero records a crash and halts; a crash-free run takes the
/// program-exit branch.
ExecutionTrace execute_sampled(const dsl::Program &p,
                               const core::StateVector &init, Rng &rng);

/// Aggregates execute_sampled over `trials` runs. Trial t uses an
/// independent generator seeded with Rng::derive(seed, t), so the report
/// does not depend on scheduling.
CoverageReport coverage(const dsl::Program &p, const core::StateVector &init,
                        int trials, std::uint64_t seed);

} // namespace quanfuzz::interp

#endif
