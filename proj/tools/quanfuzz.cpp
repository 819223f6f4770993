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

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "quanfuzz/campaign/benchmark_gen.hpp"
#include "quanfuzz/campaign/campaign.hpp"
#include "quanfuzz/campaign/report.hpp"
#include "quanfuzz/campaign/serialize.hpp"
#include "quanfuzz/core/matrix_io.hpp"
#include "quanfuzz/dsl/parser.hpp"
#include "quanfuzz/fuzz/fuzzer.hpp"
#include "quanfuzz/interp/interpreter.hpp"

namespace {

using namespace quanfuzz;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotConverged = 2;

/// --seed wins; QUANFUZZ_SEED is the fallback; 0 otherwise.
std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed) {
    if (seed_given) {
        return seed;
    }
    if (const char *env = std::getenv("QUANFUZZ_SEED")) {
        return std::stoull(env);
    }
    return 0;
}

int cmd_analyze(const std::string &path) {
    dsl::Program prog = dsl::parse_file(path);
    analysis::SensitivityReport report = analysis::extract_sensitive(prog);
    std::cout << campaign::to_json(report).dump(2) << '\n';
    return kExitOk;
}

int cmd_run(const std::string &path, const std::optional<std::string> &matrix,
            std::optional<std::uint64_t> basis, int trials,
            std::uint64_t seed) {
    dsl::Program prog = dsl::parse_file(path);
    analysis::SensitivityReport sens = analysis::extract_sensitive(prog);

    core::StateVector init;
    if (matrix) {
        init = core::read_state_file(*matrix);
    } else {
        int width = sens.register_width > 0 ? sens.register_width : 1;
        init = core::basis_state(width, basis.value_or(0));
    }

    interp::CoverageReport cov = interp::coverage(prog, init, trials, seed);
    nlohmann::json doc = campaign::to_json(cov);
    doc["schema_version"] = campaign::kSchemaVersion;
    doc["program"] = path;
    doc["seed"] = seed;
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_fuzz(const std::string &path, int site_id, const fuzz::FuzzConfig &cfg,
             const std::optional<std::string> &trace_path,
             const std::optional<std::string> &matrix_path) {
    dsl::Program prog = dsl::parse_file(path);
    analysis::SensitivityReport sens = analysis::extract_sensitive(prog);
    if (site_id < 0 || site_id >= static_cast<int>(sens.sites.size())) {
        throw std::runtime_error("program has " +
                                 std::to_string(sens.sites.size()) +
                                 " sensitive site(s); --site " +
                                 std::to_string(site_id) + " is out of range");
    }

    fuzz::FuzzResult result =
        fuzz::fuzz_main(prog, sens.sites[static_cast<std::size_t>(site_id)],
                        cfg);

    if (trace_path) {
        std::ofstream out(*trace_path);
        if (!out) {
            throw std::runtime_error("cannot open " + *trace_path);
        }
        out << "iteration,best_weight,evaluations\n";
        for (std::size_t it = 0; it < result.per_iteration_best.size();
             ++it) {
            out << it << ','
                << campaign::format_double(result.per_iteration_best[it])
                << ',' << result.evals_at_iteration[it] << '\n';
        }
    }
    if (matrix_path) {
        core::write_state_file(*matrix_path, result.best.state);
    }

    nlohmann::json doc = campaign::to_json(result);
    doc["schema_version"] = campaign::kSchemaVersion;
    doc["program"] = path;
    doc["site"] = site_id;
    doc["seed"] = cfg.seed;
    std::cout << doc.dump(2) << '\n';
    return result.converged ? kExitOk : kExitNotConverged;
}

int cmd_bench(const campaign::BenchOptions &opts, const std::string &out_dir) {
    std::vector<campaign::CampaignReport> reports =
        campaign::bench(opts, out_dir);
    std::cout << campaign::summary_csv(reports);
    return kExitOk;
}

int cmd_report(const std::string &dir) {
    campaign::ReportOutput output = campaign::report(dir);
    std::cout << output.tables_md;
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Search-based test input generation for quantum programs: "
                 "finds initial states that trigger measurement-guarded "
                 "branches"};
    app.set_version_flag("--version", "quanfuzz 0.1.0");
    app.require_subcommand(1);

    std::string program_path;
    std::string matrix_path;
    std::uint64_t basis_value = 0;
    int trials = 10;
    std::uint64_t seed = 0;
    int site_id = 0;
    double p = 0.5;
    std::size_t capacity = 6;
    int max_iters = 50;
    std::uint64_t max_candidates = 0;
    std::string emit_trace;
    std::string emit_matrix;
    campaign::BenchOptions bench_opts;
    std::string out_dir;
    std::string report_dir;

    CLI::App *analyze = app.add_subcommand(
        "analyze", "Extract sensitive sites and the branch universe");
    analyze->add_option("program", program_path, "Program file (.qpl)")
        ->required();

    CLI::App *run = app.add_subcommand(
        "run", "Sample executions and report branch coverage");
    run->add_option("program", program_path, "Program file (.qpl)")
        ->required();
    CLI::Option *run_matrix =
        run->add_option("--matrix", matrix_path, "Initial state file");
    CLI::Option *run_basis =
        run->add_option("--basis", basis_value, "Initial basis value");
    run_matrix->excludes(run_basis);
    run->add_option("--trials", trials, "Number of sampled executions");
    CLI::Option *run_seed = run->add_option("--seed", seed, "Seed");

    CLI::App *fuzz_cmd = app.add_subcommand(
        "fuzz", "Search for an initial state that triggers a sensitive "
                "branch");
    fuzz_cmd->add_option("--program", program_path, "Program file (.qpl)")
        ->required();
    fuzz_cmd->add_option("--site", site_id, "Sensitive site id");
    fuzz_cmd->add_option("--p", p, "Weight threshold");
    fuzz_cmd->add_option("--capacity", capacity, "Queue capacity");
    fuzz_cmd->add_option("--max-iters", max_iters, "Iteration limit");
    CLI::Option *fuzz_seed = fuzz_cmd->add_option("--seed", seed, "Seed");
    CLI::Option *fuzz_cap = fuzz_cmd->add_option(
        "--max-candidates", max_candidates,
        "Per-iteration candidate cap (0 = exhaustive)");
    fuzz_cmd->add_option("--emit-trace", emit_trace,
                         "Write per-iteration best weights as CSV");
    fuzz_cmd->add_option("--emit-matrix", emit_matrix,
                         "Write the best state in matrix file format");

    CLI::App *bench_cmd = app.add_subcommand(
        "bench", "Run fuzz/baseline campaigns over the benchmark corpus");
    bench_cmd->add_option("--min-qubits", bench_opts.min_qubits,
                          "Smallest register");
    bench_cmd->add_option("--max-qubits", bench_opts.max_qubits,
                          "Largest register");
    bench_cmd->add_option("--repeats", bench_opts.repeats,
                          "Paired repeats per benchmark");
    CLI::Option *bench_seed =
        bench_cmd->add_option("--seed", bench_opts.seed, "Campaign seed");
    bench_cmd->add_option("--p", bench_opts.p, "Weight threshold");
    bench_cmd->add_option("--capacity", bench_opts.capacity,
                          "Queue capacity");
    bench_cmd->add_option("--max-iters", bench_opts.max_iterations,
                          "Iteration limit");
    bench_cmd->add_option("--trials", bench_opts.coverage_trials,
                          "Coverage trials per input");
    bench_cmd->add_option("--out", out_dir, "Output directory")->required();

    CLI::App *report_cmd = app.add_subcommand(
        "report", "Render trace.csv and tables.md from campaign output");
    report_cmd->add_option("dir", report_dir, "Campaign directory")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            return cmd_analyze(program_path);
        }
        if (run->parsed()) {
            std::optional<std::string> matrix;
            if (run_matrix->count() > 0) {
                matrix = matrix_path;
            }
            std::optional<std::uint64_t> basis;
            if (run_basis->count() > 0) {
                basis = basis_value;
            }
            return cmd_run(program_path, matrix, basis, trials,
                           resolve_seed(run_seed->count() > 0, seed));
        }
        if (fuzz_cmd->parsed()) {
            fuzz::FuzzConfig cfg;
            cfg.p = p;
            cfg.capacity = capacity;
            cfg.max_iterations = max_iters;
            cfg.seed = resolve_seed(fuzz_seed->count() > 0, seed);
            if (fuzz_cap->count() > 0 && max_candidates > 0) {
                cfg.max_candidates = max_candidates;
            }
            std::optional<std::string> trace;
            if (!emit_trace.empty()) {
                trace = emit_trace;
            }
            std::optional<std::string> matrix;
            if (!emit_matrix.empty()) {
                matrix = emit_matrix;
            }
            return cmd_fuzz(program_path, site_id, cfg, trace, matrix);
        }
        if (bench_cmd->parsed()) {
            bench_opts.seed =
                resolve_seed(bench_seed->count() > 0, bench_opts.seed);
            return cmd_bench(bench_opts, out_dir);
        }
        if (report_cmd->parsed()) {
            return cmd_report(report_dir);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
