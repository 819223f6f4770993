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

#include "quanfuzz/campaign/serialize.hpp"

#include <charconv>

namespace quanfuzz::campaign {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

namespace {

json span_json(const dsl::SourceSpan &span) {
    return json{{"line", span.line}, {"column", span.column}};
}

const char *branch_kind_name(analysis::BranchKind kind) {
    switch (kind) {
    case analysis::BranchKind::SensitiveThen: return "sensitive-then";
    case analysis::BranchKind::SensitiveElse: return "sensitive-else";
    case analysis::BranchKind::ProgramExit: return "program-exit";
    }
    return "?";
}

json lineage_json(const std::vector<fuzz::LineageStep> &lineage) {
    json arr = json::array();
    for (const auto &[gate, qubit] : lineage) {
        arr.push_back(json::array(
            {std::string(core::gate_name(gate)), qubit}));
    }
    return arr;
}

std::vector<fuzz::LineageStep> lineage_from_json(const json &arr) {
    std::vector<fuzz::LineageStep> lineage;
    for (const json &step : arr) {
        auto gate = core::gate_from_name(step.at(0).get<std::string>());
        if (!gate) {
            throw std::runtime_error("unknown gate in lineage: " +
                                     step.at(0).get<std::string>());
        }
        lineage.emplace_back(*gate, step.at(1).get<int>());
    }
    return lineage;
}

json config_json(const BenchOptions &opts) {
    json j{{"min_qubits", opts.min_qubits},
           {"max_qubits", opts.max_qubits},
           {"repeats", opts.repeats},
           {"seed", opts.seed},
           {"p", opts.p},
           {"capacity", opts.capacity},
           {"max_iterations", opts.max_iterations},
           {"coverage_trials", opts.coverage_trials}};
    if (opts.max_candidates) {
        j["max_candidates"] = *opts.max_candidates;
    } else {
        j["max_candidates"] = nullptr;
    }
    return j;
}

BenchOptions config_from_json(const json &j) {
    BenchOptions opts;
    opts.min_qubits = j.at("min_qubits").get<int>();
    opts.max_qubits = j.at("max_qubits").get<int>();
    opts.repeats = j.at("repeats").get<int>();
    opts.seed = j.at("seed").get<std::uint64_t>();
    opts.p = j.at("p").get<double>();
    opts.capacity = j.at("capacity").get<std::size_t>();
    opts.max_iterations = j.at("max_iterations").get<int>();
    opts.coverage_trials = j.at("coverage_trials").get<int>();
    if (!j.at("max_candidates").is_null()) {
        opts.max_candidates = j.at("max_candidates").get<std::uint64_t>();
    }
    return opts;
}

interp::CoverageReport coverage_from_json(const json &j) {
    interp::CoverageReport report;
    report.trials = j.at("trials").get<int>();
    for (const json &id : j.at("covered")) {
        report.covered.insert(id.get<int>());
    }
    report.coverage_ratio = j.at("coverage_ratio").get<double>();
    report.sensitive_hit_frequency =
        j.at("sensitive_hit_frequency").get<std::vector<double>>();
    report.crashes = j.at("crashes").get<int>();
    return report;
}

fuzz::FuzzResult fuzz_from_json(const json &j) {
    fuzz::FuzzResult result;
    result.converged = j.at("converged").get<bool>();
    result.iterations_used = j.at("iterations_used").get<int>();
    result.evaluations = j.at("evaluations").get<std::uint64_t>();
    result.per_iteration_best =
        j.at("per_iteration_best").get<std::vector<double>>();
    result.evals_at_iteration =
        j.at("evals_at_iteration").get<std::vector<std::uint64_t>>();
    result.best.weight = j.at("best").at("weight").get<double>();
    result.best.lineage = lineage_from_json(j.at("best").at("lineage"));
    return result;
}

} // namespace

json to_json(const analysis::SensitivityReport &report) {
    json sites = json::array();
    for (const analysis::SensitiveSite &site : report.sites) {
        sites.push_back(json{{"site_id", site.site_id},
                             {"register", site.register_name},
                             {"width", site.width},
                             {"op", "=="},
                             {"target", site.target_value},
                             {"then_branch_id", site.then_branch_id},
                             {"else_branch_id", site.else_branch_id},
                             {"span", span_json(site.span)}});
    }
    json branches = json::array();
    for (const analysis::BranchId &branch : report.branches) {
        json b{{"id", branch.id},
               {"kind", branch_kind_name(branch.kind)},
               {"span", span_json(branch.span)}};
        if (branch.site_id) {
            b["site_id"] = *branch.site_id;
        } else {
            b["site_id"] = nullptr;
        }
        branches.push_back(b);
    }
    return json{{"schema_version", kSchemaVersion},
                {"ket_info", json{{"register", report.register_name},
                                  {"width", report.register_width}}},
                {"sites", sites},
                {"branches", branches}};
}

json to_json(const interp::CoverageReport &report) {
    return json{{"trials", report.trials},
                {"covered", report.covered},
                {"coverage_ratio", report.coverage_ratio},
                {"sensitive_hit_frequency", report.sensitive_hit_frequency},
                {"crashes", report.crashes}};
}

json to_json(const fuzz::FuzzResult &result) {
    return json{{"converged", result.converged},
                {"iterations_used", result.iterations_used},
                {"evaluations", result.evaluations},
                {"best", json{{"weight", result.best.weight},
                              {"lineage", lineage_json(result.best.lineage)}}},
                {"per_iteration_best", result.per_iteration_best},
                {"evals_at_iteration", result.evals_at_iteration}};
}

json to_json(const CampaignReport &report) {
    json repeats = json::array();
    for (const RepeatOutcome &outcome : report.repeats) {
        repeats.push_back(json{
            {"fuzz", to_json(outcome.fuzz)},
            {"baseline",
             json{{"best_weight", outcome.baseline.best_weight},
                  {"evaluations", outcome.baseline.evaluations},
                  {"best_at_checkpoints",
                   outcome.baseline.best_at_checkpoints}}}});
    }
    return json{
        {"schema_version", kSchemaVersion},
        {"benchmark", report.benchmark_id},
        {"n_qubits", report.n_qubits},
        {"target_value", report.target_value},
        {"config", config_json(report.config)},
        {"repeats", repeats},
        {"averages",
         json{{"fuzz_probability", report.averages.fuzz_probability},
              {"fuzz_iterations", report.averages.fuzz_iterations},
              {"fuzz_evaluations", report.averages.fuzz_evaluations},
              {"baseline_probability", report.averages.baseline_probability}}},
        {"best_repeat", report.best_repeat},
        {"coverage", json{{"default", to_json(report.coverage_default)},
                          {"fuzz", to_json(report.coverage_fuzz)}}},
        {"timestamps", json{{"started_at", report.started_at},
                            {"finished_at", report.finished_at},
                            {"elapsed_seconds", report.elapsed_seconds}}}};
}

CampaignReport campaign_from_json(const json &doc) {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
        throw std::runtime_error("unsupported campaign schema version");
    }
    CampaignReport report;
    report.benchmark_id = doc.at("benchmark").get<std::string>();
    report.n_qubits = doc.at("n_qubits").get<int>();
    report.target_value = doc.at("target_value").get<std::int64_t>();
    report.config = config_from_json(doc.at("config"));
    for (const json &outcome : doc.at("repeats")) {
        RepeatOutcome r;
        r.fuzz = fuzz_from_json(outcome.at("fuzz"));
        const json &baseline = outcome.at("baseline");
        r.baseline.best_weight = baseline.at("best_weight").get<double>();
        r.baseline.evaluations =
            baseline.at("evaluations").get<std::uint64_t>();
        r.baseline.best_at_checkpoints =
            baseline.at("best_at_checkpoints").get<std::vector<double>>();
        report.repeats.push_back(std::move(r));
    }
    const json &avg = doc.at("averages");
    report.averages.fuzz_probability =
        avg.at("fuzz_probability").get<double>();
    report.averages.fuzz_iterations =
        avg.at("fuzz_iterations").get<double>();
    report.averages.fuzz_evaluations =
        avg.at("fuzz_evaluations").get<double>();
    report.averages.baseline_probability =
        avg.at("baseline_probability").get<double>();
    report.best_repeat = doc.at("best_repeat").get<int>();
    report.coverage_default =
        coverage_from_json(doc.at("coverage").at("default"));
    report.coverage_fuzz = coverage_from_json(doc.at("coverage").at("fuzz"));
    const json &ts = doc.at("timestamps");
    report.started_at = ts.at("started_at").get<std::string>();
    report.finished_at = ts.at("finished_at").get<std::string>();
    report.elapsed_seconds = ts.at("elapsed_seconds").get<double>();
    return report;
}

} // namespace quanfuzz::campaign
