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

#ifndef QUANFUZZ_FUZZ_FUZZER_HPP
#define QUANFUZZ_FUZZ_FUZZER_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "quanfuzz/analysis/sensitivity.hpp"
#include "quanfuzz/core/state_vector.hpp"
#include "quanfuzz/dsl/ast.hpp"
#include "quanfuzz/rng.hpp"

namespace quanfuzz::fuzz {

/// One gate application: (gate, qubit).
using LineageStep = std::pair<core::GateKind, int>;

struct WeightedMatrix {
    core::StateVector state;
    double weight = 0.0;
    /// Gates applied since the campaign seed, in application order.
    std::vector<LineageStep> lineage;
};

/// Amplitude tolerance for queue duplicate detection.
inline constexpr double kDedupTolerance = 1e-9;

/// Bounded best-first queue: sorted by weight descending, ties broken by
/// earlier insertion, no two entries amplitude-equal within
/// kDedupTolerance.
class TopMatrices {
  public:
    explicit TopMatrices(std::size_t capacity);

    /// Appends without reordering; call consolidate() afterwards.
    void append(WeightedMatrix wm);

    /// Sorts, drops duplicates (the better-sorted twin survives), prunes
    /// to capacity.
    void consolidate();

    const WeightedMatrix &head() const { return entries_.front(); }
    const std::vector<WeightedMatrix> &entries() const { return entries_; }
    std::size_t capacity() const { return capacity_; }

  private:
    std::size_t capacity_;
    std::uint64_t next_seq_ = 0;
    std::vector<WeightedMatrix> entries_;
    std::vector<std::uint64_t> seq_; // parallel to entries_
};

struct FuzzConfig {
    double p = 0.5;
    std::size_t capacity = 6;
    int max_iterations = 50;
    std::uint64_t seed = 0;
    std::vector<core::GateKind> gate_set{core::kAllGates.begin(),
                                         core::kAllGates.end()};
    /// Per-iteration cap on evaluated candidates; unset = exhaustive.
    std::optional<std::uint64_t> max_candidates;
};

struct FuzzResult {
    WeightedMatrix best;
    int iterations_used = 0;
    bool converged = false;
    /// Queue head weight before any traversal, then after each iteration;
    /// non-decreasing, length iterations_used + 1.
    std::vector<double> per_iteration_best;
    std::uint64_t evaluations = 0;
    /// Cumulative weight_analysis calls, aligned with per_iteration_best.
    std::vector<std::uint64_t> evals_at_iteration;
};

/// One candidate of the per-qubit two-gate traversal, with the gates
/// that produced it.
struct Candidate {
    core::StateVector state;
    std::vector<LineageStep> gates;
};

/// For each qubit in [first, last] two gates are drawn from `gate_set`
/// without replacement (a single-gate set repeats its gate); the output
/// is all 2^(last-first+1) ways of applying one drawn gate per qubit,
/// enumerated depth-first so the last qubit's choice alternates fastest.
std::vector<Candidate> traverse_candidates(
    const core::StateVector &seed, int first, int last,
    const std::vector<core::GateKind> &gate_set, Rng &rng);

/// traverse_candidates over the full six-gate set, states only.
std::vector<core::StateVector> traversing(const core::StateVector &seed,
                                          int first, int last, Rng &rng);

/// The main search loop. Starts from `init` (defaults to basis_state(n, 0)),
/// keeps the best `capacity` states, mutates every retained state each
/// iteration via traverse_candidates, and stops once the best weight
/// reaches cfg.p or cfg.max_iterations iterations have run.
FuzzResult fuzz_main(const dsl::Program &p, const analysis::SensitiveSite &site,
                     const FuzzConfig &cfg,
                     const std::optional<core::StateVector> &init = {});

/// Best weight over `evaluations` random_state draws; the control group
/// for fuzz_main under a matched evaluation budget.
double random_baseline(const dsl::Program &p,
                       const analysis::SensitiveSite &site,
                       std::uint64_t evaluations, Rng &rng);

/// Running best after each draw; back() equals random_baseline.
std::vector<double> random_baseline_running(const dsl::Program &p,
                                            const analysis::SensitiveSite &site,
                                            std::uint64_t evaluations,
                                            Rng &rng);

/// Re-applies a lineage to a fresh campaign seed; used to audit results.
core::StateVector replay_lineage(const core::StateVector &seed,
                                 const std::vector<LineageStep> &lineage);

} // namespace quanfuzz::fuzz

#endif
