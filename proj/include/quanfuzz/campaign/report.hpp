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

#ifndef QUANFUZZ_CAMPAIGN_REPORT_HPP
#define QUANFUZZ_CAMPAIGN_REPORT_HPP

#include <string>
#include <vector>

#include "quanfuzz/campaign/campaign.hpp"

namespace quanfuzz::campaign {

struct ReportOutput {
    /// Per-iteration curves, repeat 0 of each benchmark; columns
    /// benchmark,iteration,fuzz_weight,baseline_best_so_far.
    std::string trace_csv;
    /// Markdown tables: search results, matched-budget baseline,
    /// coverage comparison.
    std::string tables_md;
};

ReportOutput render_report(const std::vector<CampaignReport> &reports);

/// Loads every QB_*.json in `campaign_dir` (sorted by name), renders the
/// report, and writes trace.csv and tables.md back into the directory.
ReportOutput report(const std::string &campaign_dir);

} // namespace quanfuzz::campaign

#endif
