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

#include "quanfuzz/fuzz/fuzzer.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

#include "quanfuzz/interp/interpreter.hpp"

namespace quanfuzz::fuzz {

TopMatrices::TopMatrices(std::size_t capacity) : capacity_(capacity) {
    if (capacity < 1) {
        throw std::invalid_argument("queue capacity must be at least 1");
    }
}

void TopMatrices::append(WeightedMatrix wm) {
    entries_.push_back(std::move(wm));
    seq_.push_back(next_seq_++);
}

void TopMatrices::consolidate() {
    std::vector<std::size_t> order(entries_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [this](std::size_t a, std::size_t b) {
                  if (entries_[a].weight != entries_[b].weight) {
                      return entries_[a].weight > entries_[b].weight;
                  }
                  return seq_[a] < seq_[b];
              });

    std::vector<WeightedMatrix> kept;
    std::vector<std::uint64_t> kept_seq;
    for (std::size_t idx : order) {
        if (kept.size() == capacity_) {
            break;
        }
        bool duplicate = false;
        for (const WeightedMatrix &k : kept) {
            if (core::amps_close(k.state, entries_[idx].state,
                                 kDedupTolerance)) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            kept.push_back(std::move(entries_[idx]));
            kept_seq.push_back(seq_[idx]);
        }
    }
    entries_ = std::move(kept);
    seq_ = std::move(kept_seq);
}

namespace {

using GatePair = std::array<core::GateKind, 2>;

/// Two gates per qubit, drawn without replacement (with replacement only
/// for a degenerate one-gate set).
std::vector<GatePair> draw_gate_pairs(int qubits,
                                      const std::vector<core::GateKind> &set,
                                      Rng &rng) {
    std::vector<GatePair> drawn(static_cast<std::size_t>(qubits));
    for (auto &pair : drawn) {
        std::size_t m = set.size();
        if (m == 1) {
            pair = {set[0], set[0]};
            continue;
        }
        std::size_t a = rng.below(m);
        std::size_t b = rng.below(m - 1);
        if (b >= a) {
            ++b;
        }
        pair = {set[a], set[b]};
    }
    return drawn;
}

/// Applies combination `mask` of the drawn pairs to a copy of `seed`:
/// bit (m-1-j) of mask picks the gate for qubit first+j, so mask order
/// reproduces the depth-first traversal order.
Candidate materialize(const core::StateVector &seed, int first,
                      const std::vector<GatePair> &drawn,
                      std::uint64_t mask) {
    Candidate cand;
    cand.state = seed;
    int m = static_cast<int>(drawn.size());
    for (int j = 0; j < m; ++j) {
        int bit = static_cast<int>((mask >> (m - 1 - j)) & 1u);
        core::GateKind g = drawn[static_cast<std::size_t>(j)]
                                [static_cast<std::size_t>(bit)];
        core::apply_gate_inplace(cand.state, g, first + j);
        cand.gates.emplace_back(g, first + j);
    }
    return cand;
}

void check_range(const core::StateVector &seed, int first, int last) {
    if (first < 0 || last < first || last >= seed.n_qubits) {
        throw std::invalid_argument(
            "qubit range [" + std::to_string(first) + ", " +
            std::to_string(last) + "] invalid for " +
            std::to_string(seed.n_qubits) + " qubits");
    }
}

} // namespace

std::vector<Candidate> traverse_candidates(
    const core::StateVector &seed, int first, int last,
    const std::vector<core::GateKind> &gate_set, Rng &rng) {
    check_range(seed, first, last);
    if (gate_set.empty()) {
        throw std::invalid_argument("gate set must not be empty");
    }
    int m = last - first + 1;
    std::vector<GatePair> drawn = draw_gate_pairs(m, gate_set, rng);
    std::uint64_t total = std::uint64_t{1} << m;
    std::vector<Candidate> out;
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        out.push_back(materialize(seed, first, drawn, mask));
    }
    return out;
}

std::vector<core::StateVector> traversing(const core::StateVector &seed,
                                          int first, int last, Rng &rng) {
    std::vector<core::GateKind> all{core::kAllGates.begin(),
                                    core::kAllGates.end()};
    std::vector<Candidate> cands =
        traverse_candidates(seed, first, last, all, rng);
    std::vector<core::StateVector> out;
    out.reserve(cands.size());
    for (Candidate &c : cands) {
        out.push_back(std::move(c.state));
    }
    return out;
}

namespace {

void check_config(const FuzzConfig &cfg) {
    if (!(cfg.p > 0.0 && cfg.p <= 1.0)) {
        throw std::invalid_argument("threshold p must be in (0, 1]");
    }
    if (cfg.capacity < 1) {
        throw std::invalid_argument("queue capacity must be at least 1");
    }
    if (cfg.max_iterations < 0) {
        throw std::invalid_argument("max_iterations must be non-negative");
    }
    if (cfg.gate_set.empty()) {
        throw std::invalid_argument("gate set must not be empty");
    }
}

/// Picks `cap` distinct indices out of [0, total), ascending. A partial
/// Fisher-Yates shuffle when the index table fits comfortably, rejection
/// sampling into a set otherwise.
std::vector<std::uint64_t> sample_indices(std::uint64_t total,
                                          std::uint64_t cap, Rng &rng) {
    std::vector<std::uint64_t> picked;
    if (total <= (std::uint64_t{1} << 20)) {
        std::vector<std::uint64_t> all(total);
        std::iota(all.begin(), all.end(), std::uint64_t{0});
        for (std::uint64_t i = 0; i < cap; ++i) {
            std::uint64_t j = i + rng.below(total - i);
            std::swap(all[i], all[j]);
        }
        picked.assign(all.begin(), all.begin() + static_cast<long>(cap));
        std::sort(picked.begin(), picked.end());
    } else {
        std::set<std::uint64_t> chosen;
        while (chosen.size() < cap) {
            chosen.insert(rng.below(total));
        }
        picked.assign(chosen.begin(), chosen.end());
    }
    return picked;
}

} // namespace

FuzzResult fuzz_main(const dsl::Program &p,
                     const analysis::SensitiveSite &site,
                     const FuzzConfig &cfg,
                     const std::optional<core::StateVector> &init) {
    check_config(cfg);
    int n = site.width;
    core::StateVector seed_state = init ? *init : core::basis_state(n, 0);

    Rng rng(cfg.seed);
    TopMatrices queue(cfg.capacity);
    queue.append(WeightedMatrix{seed_state,
                                interp::weight_analysis(p, seed_state, site),
                                {}});
    queue.consolidate();

    FuzzResult res;
    res.evaluations = 1;
    res.per_iteration_best.push_back(queue.head().weight);
    res.evals_at_iteration.push_back(res.evaluations);

    while (true) {
        if (queue.head().weight >= cfg.p) {
            res.converged = true;
            break;
        }
        if (res.iterations_used >= cfg.max_iterations) {
            break;
        }
        ++res.iterations_used;

        // Snapshot the retained queue; every entry is re-seeded.
        std::vector<WeightedMatrix> snapshot = queue.entries();
        std::vector<std::vector<GatePair>> drawn;
        drawn.reserve(snapshot.size());
        for (std::size_t e = 0; e < snapshot.size(); ++e) {
            drawn.push_back(draw_gate_pairs(n, cfg.gate_set, rng));
        }

        std::uint64_t per_entry = std::uint64_t{1} << n;
        std::uint64_t total = per_entry * snapshot.size();
        std::vector<std::uint64_t> selected;
        if (cfg.max_candidates && total > *cfg.max_candidates) {
            selected = sample_indices(total, *cfg.max_candidates, rng);
        } else {
            selected.resize(total);
            std::iota(selected.begin(), selected.end(), std::uint64_t{0});
        }

        std::vector<Candidate> cands(selected.size());
        std::vector<double> weights(selected.size());
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(selected.size());
             ++i) {
            std::uint64_t d = selected[static_cast<std::size_t>(i)];
            std::size_t entry = static_cast<std::size_t>(d / per_entry);
            std::uint64_t mask = d % per_entry;
            Candidate cand =
                materialize(snapshot[entry].state, 0, drawn[entry], mask);
            weights[static_cast<std::size_t>(i)] =
                interp::weight_analysis(p, cand.state, site);
            cands[static_cast<std::size_t>(i)] = std::move(cand);
        }
        res.evaluations += selected.size();

        // Merge in generation order so thread scheduling cannot change
        // the queue contents.
        for (std::size_t i = 0; i < cands.size(); ++i) {
            std::size_t entry =
                static_cast<std::size_t>(selected[i] / per_entry);
            WeightedMatrix wm;
            wm.state = std::move(cands[i].state);
            wm.weight = weights[i];
            wm.lineage = snapshot[entry].lineage;
            wm.lineage.insert(wm.lineage.end(), cands[i].gates.begin(),
                              cands[i].gates.end());
            queue.append(std::move(wm));
        }
        queue.consolidate();

        res.per_iteration_best.push_back(queue.head().weight);
        res.evals_at_iteration.push_back(res.evaluations);
    }

    res.best = queue.head();
    return res;
}

std::vector<double> random_baseline_running(
    const dsl::Program &p, const analysis::SensitiveSite &site,
    std::uint64_t evaluations, Rng &rng) {
    if (evaluations < 1) {
        throw std::invalid_argument("baseline needs at least one evaluation");
    }
    int n = site.width;
    std::vector<double> running(evaluations);
    double best = 0.0;
    constexpr std::uint64_t kBatch = 256;
    std::uint64_t done = 0;
    std::vector<core::StateVector> states;
    std::vector<double> weights;
    while (done < evaluations) {
        std::uint64_t count = std::min(kBatch, evaluations - done);
        states.clear();
        states.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) {
            states.push_back(core::random_state(n, rng));
        }
        weights.assign(count, 0.0);
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            weights[static_cast<std::size_t>(i)] = interp::weight_analysis(
                p, states[static_cast<std::size_t>(i)], site);
        }
        for (std::uint64_t i = 0; i < count; ++i) {
            best = std::max(best, weights[i]);
            running[done + i] = best;
        }
        done += count;
    }
    return running;
}

double random_baseline(const dsl::Program &p,
                       const analysis::SensitiveSite &site,
                       std::uint64_t evaluations, Rng &rng) {
    return random_baseline_running(p, site, evaluations, rng).back();
}

core::StateVector replay_lineage(const core::StateVector &seed,
                                 const std::vector<LineageStep> &lineage) {
    core::StateVector state = seed;
    for (const LineageStep &step : lineage) {
        core::apply_gate_inplace(state, step.first, step.second);
    }
    return state;
}

} // namespace quanfuzz::fuzz
