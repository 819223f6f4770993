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

#include "quanfuzz/campaign/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "quanfuzz/campaign/serialize.hpp"

namespace quanfuzz::campaign {

namespace {

std::string trace_csv(const std::vector<CampaignReport> &reports) {
    std::ostringstream out;
    out << "benchmark,iteration,fuzz_weight,baseline_best_so_far\n";
    for (const CampaignReport &r : reports) {
        const RepeatOutcome &first = r.repeats.at(0);
        for (std::size_t it = 0; it < first.fuzz.per_iteration_best.size();
             ++it) {
            out << r.benchmark_id << ',' << it << ','
                << format_double(first.fuzz.per_iteration_best[it]) << ','
                << format_double(first.baseline.best_at_checkpoints.at(it))
                << '\n';
        }
    }
    return out.str();
}

std::string tables_md(const std::vector<CampaignReport> &reports) {
    std::ostringstream out;
    out << "# Campaign results\n\n";
    out << "Averages over " << reports.at(0).config.repeats
        << " seeded repeats per benchmark.\n\n";

    out << "## Matrix generator\n\n";
    out << "| Benchmark | Qubit number | Iteration | Evaluations | "
           "Probability |\n";
    out << "|---|---|---|---|---|\n";
    for (const CampaignReport &r : reports) {
        out << "| " << r.benchmark_id << " | " << r.n_qubits << " | "
            << format_double(r.averages.fuzz_iterations) << " | "
            << format_double(r.averages.fuzz_evaluations) << " | "
            << format_double(r.averages.fuzz_probability) << " |\n";
    }

    out << "\n## Random generator (matched budget)\n\n";
    out << "| Benchmark | Qubit number | Evaluations | Probability |\n";
    out << "|---|---|---|---|\n";
    for (const CampaignReport &r : reports) {
        out << "| " << r.benchmark_id << " | " << r.n_qubits << " | "
            << format_double(r.averages.fuzz_evaluations) << " | "
            << format_double(r.averages.baseline_probability) << " |\n";
    }

    out << "\n## Coverage (" << reports.at(0).config.coverage_trials
        << " trials per input)\n\n";
    out << "| Benchmark | Default input | Fuzzed input | Uplift | Crashes "
           "|\n";
    out << "|---|---|---|---|---|\n";
    for (const CampaignReport &r : reports) {
        double uplift = r.coverage_fuzz.coverage_ratio -
                        r.coverage_default.coverage_ratio;
        out << "| " << r.benchmark_id << " | "
            << format_double(r.coverage_default.coverage_ratio) << " | "
            << format_double(r.coverage_fuzz.coverage_ratio) << " | "
            << format_double(uplift) << " | " << r.coverage_fuzz.crashes
            << " |\n";
    }
    return out.str();
}

} // namespace

ReportOutput render_report(const std::vector<CampaignReport> &reports) {
    if (reports.empty()) {
        throw std::runtime_error("no campaign reports to render");
    }
    return ReportOutput{trace_csv(reports), tables_md(reports)};
}

ReportOutput report(const std::string &campaign_dir) {
    namespace fs = std::filesystem;
    fs::path dir(campaign_dir);
    if (!fs::is_directory(dir)) {
        throw std::runtime_error("not a directory: " + campaign_dir);
    }

    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir)) {
        std::string name = entry.path().filename().string();
        if (name.rfind("QB_", 0) == 0 && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    if (files.empty()) {
        throw std::runtime_error("no campaign reports (QB_*.json) in " +
                                 campaign_dir);
    }
    std::sort(files.begin(), files.end());

    std::vector<CampaignReport> reports;
    for (const fs::path &file : files) {
        std::ifstream in(file);
        if (!in) {
            throw std::runtime_error("cannot open " + file.string());
        }
        nlohmann::json doc;
        try {
            in >> doc;
            reports.push_back(campaign_from_json(doc));
        } catch (const nlohmann::json::exception &e) {
            throw std::runtime_error("corrupt campaign report " +
                                     file.string() + ": " + e.what());
        }
    }

    ReportOutput output = render_report(reports);
    {
        std::ofstream out(dir / "trace.csv");
        out << output.trace_csv;
    }
    {
        std::ofstream out(dir / "tables.md");
        out << output.tables_md;
    }
    return output;
}

} // namespace quanfuzz::campaign
