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

#include "quanfuzz/interp/interpreter.hpp"

#include <unordered_map>

namespace quanfuzz::interp {

namespace {

void check_width(const dsl::Program &p, const core::StateVector &init) {
    const dsl::QuregDecl *reg = p.qureg();
    if (reg && reg->n_qubits != init.n_qubits) {
        throw std::invalid_argument(
            "initial state has " + std::to_string(init.n_qubits) +
            " qubits but the program declares " +
            std::to_string(reg->n_qubits));
    }
}

void apply_quantum_stmt(core::StateVector &state, const dsl::Stmt &s) {
    if (const auto *gate = std::get_if<dsl::GateApply>(&s.node)) {
        if (gate->qubit) {
            core::apply_gate_inplace(state, gate->gate, *gate->qubit);
        } else {
            for (int q = 0; q < state.n_qubits; ++q) {
                core::apply_gate_inplace(state, gate->gate, q);
            }
        }
    } else if (std::holds_alternative<dsl::MixApply>(s.node)) {
        core::mix_inplace(state);
    }
}

/// Pre-order site id of every IfMeasure node, keyed by node address.
std::unordered_map<const dsl::IfMeasure *, int>
number_sites(const dsl::Program &p) {
    std::unordered_map<const dsl::IfMeasure *, int> ids;
    int next = 0;
    auto walk = [&](auto &&self, const std::vector<dsl::Stmt> &body) -> void {
        for (const dsl::Stmt &s : body) {
            const auto *ifm = std::get_if<dsl::IfMeasure>(&s.node);
            if (!ifm) {
                continue;
            }
            ids[ifm] = next++;
            self(self, ifm->then_body);
            if (ifm->else_body) {
                self(self, *ifm->else_body);
            }
        }
    };
    walk(walk, p.body);
    return ids;
}

struct CrashSignal {
    Crash crash;
};

class Executor {
  public:
    Executor(const dsl::Program &p, core::StateVector state, Rng &rng)
        : site_ids_(number_sites(p)), state_(std::move(state)), rng_(rng) {}

    ExecutionTrace run(const dsl::Program &p) {
        ExecutionTrace trace;
        try {
            exec_block(p.body, trace);
            trace.branches_taken.insert(
                2 * static_cast<int>(site_ids_.size()));
        } catch (const CrashSignal &signal) {
            trace.crash = signal.crash;
        }
        return trace;
    }

  private:
    void exec_block(const std::vector<dsl::Stmt> &body,
                    ExecutionTrace &trace) {
        for (const dsl::Stmt &s : body) {
            exec_stmt(s, trace);
        }
    }

    void exec_stmt(const dsl::Stmt &s, ExecutionTrace &trace) {
        std::visit(
            [&](const auto &node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, dsl::QuregDecl>) {
                    // Width already validated against the initial state.
                } else if constexpr (std::is_same_v<T, dsl::GateApply> ||
                                     std::is_same_v<T, dsl::MixApply>) {
                    apply_quantum_stmt(state_, s);
                } else if constexpr (std::is_same_v<T, dsl::IfMeasure>) {
                    exec_if_measure(node, trace);
                } else if constexpr (std::is_same_v<T, dsl::Print>) {
                    trace.log.push_back(node.text);
                } else if constexpr (std::is_same_v<T, dsl::IntDecl>) {
                    vars_[node.name] = eval(node.value);
                } else if constexpr (std::is_same_v<T, dsl::Assign>) {
                    vars_[node.name] = eval(node.value);
                }
            },
            s.node);
    }

    void exec_if_measure(const dsl::IfMeasure &node, ExecutionTrace &trace) {
        int site_id = site_ids_.at(&node);
        std::uint64_t v = core::sample_value(state_, rng_);
        trace.measurement_results.emplace_back(site_id, v);
        state_ = core::collapse(state_, v);
        if (static_cast<std::int64_t>(v) == node.target) {
            trace.branches_taken.insert(2 * site_id);
            exec_block(node.then_body, trace);
        } else {
            trace.branches_taken.insert(2 * site_id + 1);
            if (node.else_body) {
                exec_block(*node.else_body, trace);
            }
        }
    }

    std::int64_t eval(const dsl::Expr &e) {
        if (const auto *lit = std::get_if<dsl::IntLit>(&e.node)) {
            return lit->value;
        }
        if (const auto *var = std::get_if<dsl::VarRef>(&e.node)) {
            return vars_.at(var->name);
        }
        const auto &bin = std::get<dsl::BinExpr>(e.node);
        std::int64_t lhs = eval(bin.lhs());
        std::int64_t rhs = eval(bin.rhs());
        switch (bin.op) {
        case dsl::BinOp::Add: return lhs + rhs;
        case dsl::BinOp::Sub: return lhs - rhs;
        case dsl::BinOp::Mul: return lhs * rhs;
        case dsl::BinOp::Div:
            if (rhs == 0) {
                throw CrashSignal{Crash{CrashKind::DivisionByZero, e.span}};
            }
            return lhs / rhs;
        }
        return 0;
    }

    std::unordered_map<const dsl::IfMeasure *, int> site_ids_;
    core::StateVector state_;
    Rng &rng_;
    std::unordered_map<std::string, std::int64_t> vars_;
};

} // namespace

core::StateVector run_to_measurement(const dsl::Program &p,
                                     const core::StateVector &init,
                                     const analysis::SensitiveSite &site) {
    check_width(p, init);
    core::StateVector state = init;
    // Site ids are assigned in pre-order, so if the target site is the
    // first measurement on the path it must be a top-level IfMeasure
    // with id equal to the number of sites seen so far, which is zero.
    for (const dsl::Stmt &s : p.body) {
        if (const auto *ifm = std::get_if<dsl::IfMeasure>(&s.node)) {
            if (site.site_id != 0) {
                throw UnsupportedProgram(
                    "site " + std::to_string(site.site_id) +
                    " is preceded by another measurement; weight mode "
                    "requires the target site to be the first measurement");
            }
            if (ifm->reg != site.register_name ||
                ifm->target != site.target_value) {
                throw std::invalid_argument(
                    "site does not match the program's first measurement");
            }
            return state;
        }
        apply_quantum_stmt(state, s);
    }
    throw UnsupportedProgram(
        "site " + std::to_string(site.site_id) +
        " is not reachable as the first measurement of the program");
}

double weight_analysis(const dsl::Program &p, const core::StateVector &init,
                       const analysis::SensitiveSite &site) {
    core::StateVector ket = run_to_measurement(p, init, site);
    return core::prob_of_value(ket,
                               static_cast<std::uint64_t>(site.target_value));
}

ExecutionTrace execute_sampled(const dsl::Program &p,
                               const core::StateVector &init, Rng &rng) {
    check_width(p, init);
    Executor exec(p, init, rng);
    return exec.run(p);
}

CoverageReport coverage(const dsl::Program &p, const core::StateVector &init,
                        int trials, std::uint64_t seed) {
    if (trials < 1) {
        throw std::invalid_argument("coverage needs at least one trial");
    }
    check_width(p, init);
    analysis::SensitivityReport sens = analysis::extract_sensitive(p);

    std::vector<ExecutionTrace> traces(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(static)
    for (int t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        traces[static_cast<std::size_t>(t)] = execute_sampled(p, init, rng);
    }

    CoverageReport report;
    report.trials = trials;
    std::vector<int> then_hits(sens.sites.size(), 0);
    for (const ExecutionTrace &trace : traces) {
        report.covered.insert(trace.branches_taken.begin(),
                              trace.branches_taken.end());
        if (trace.crash) {
            ++report.crashes;
        }
        for (std::size_t k = 0; k < sens.sites.size(); ++k) {
            if (trace.branches_taken.count(2 * static_cast<int>(k))) {
                ++then_hits[k];
            }
        }
    }
    report.coverage_ratio = static_cast<double>(report.covered.size()) /
                            static_cast<double>(sens.universe_size());
    report.sensitive_hit_frequency.resize(sens.sites.size());
    for (std::size_t k = 0; k < sens.sites.size(); ++k) {
        report.sensitive_hit_frequency[k] =
            static_cast<double>(then_hits[k]) / static_cast<double>(trials);
    }
    return report;
}

} // namespace quanfuzz::interp
