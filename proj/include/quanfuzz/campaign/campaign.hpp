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

#ifndef QUANFUZZ_CAMPAIGN_CAMPAIGN_HPP
#define QUANFUZZ_CAMPAIGN_CAMPAIGN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quanfuzz/campaign/benchmark_gen.hpp"
#include "quanfuzz/fuzz/fuzzer.hpp"
#include "quanfuzz/interp/interpreter.hpp"

namespace quanfuzz::campaign {

struct BenchOptions {
    int min_qubits = 2;
    int max_qubits = 8;
    int repeats = 5;
    std::uint64_t seed = 0;
    double p = 0.5;
    std::size_t capacity = 6;
    int max_iterations = 50;
    std::optional<std::uint64_t> max_candidates;
    int coverage_trials = 10;
};

struct BaselineSummary {
    double best_weight = 0.0;
    std::uint64_t evaluations = 0;
    /// Baseline running-best sampled at the fuzz run's cumulative
    /// evaluation counts (same length as FuzzResult::per_iteration_best).
    std::vector<double> best_at_checkpoints;
};

struct RepeatOutcome {
    fuzz::FuzzResult fuzz;
    BaselineSummary baseline;
};

struct CampaignAverages {
    double fuzz_probability = 0.0;
    double fuzz_iterations = 0.0;
    double fuzz_evaluations = 0.0;
    double baseline_probability = 0.0;
};

/// Everything one (benchmark, campaign seed) pair produced: the paired
/// fuzz/baseline repeats, their averages, and the before/after coverage
/// comparison. The baseline budget equals the fuzz budget per repeat.
struct CampaignReport {
    std::string benchmark_id;
    int n_qubits = 0;
    std::int64_t target_value = 0;
    BenchOptions config;
    std::vector<RepeatOutcome> repeats;
    CampaignAverages averages;
    /// Repeat whose best matrix seeds coverage_fuzz (highest weight,
    /// earliest on ties).
    int best_repeat = 0;
    interp::CoverageReport coverage_default;
    interp::CoverageReport coverage_fuzz;
    std::string started_at;
    std::string finished_at;
    double elapsed_seconds = 0.0;
};

/// Runs one campaign: `repeats` paired fuzz/baseline runs plus the
/// coverage comparison, all seeded from Rng::derive chains off
/// (opts.seed, n) so results are reproducible run to run.
CampaignReport run_campaign(const BenchmarkSpec &spec,
                            const BenchOptions &opts);

/// Runs campaigns for every n in [min_qubits, max_qubits] against the
/// default benchmark corpus and writes per-benchmark artifacts
/// (QB_0x.json, QB_0x.qpl, QB_0x.best.mat) plus summary.csv to
/// `out_dir`.
std::vector<CampaignReport> bench(const BenchOptions &opts,
                                  const std::string &out_dir);

/// The aggregate table written as summary.csv.
std::string summary_csv(const std::vector<CampaignReport> &reports);

} // namespace quanfuzz::campaign

#endif
