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

#ifndef QUANFUZZ_CAMPAIGN_SERIALIZE_HPP
#define QUANFUZZ_CAMPAIGN_SERIALIZE_HPP

#include <json.hpp>

#include "quanfuzz/analysis/sensitivity.hpp"
#include "quanfuzz/campaign/campaign.hpp"
#include "quanfuzz/fuzz/fuzzer.hpp"
#include "quanfuzz/interp/interpreter.hpp"

namespace quanfuzz::campaign {

/// All emitted documents carry {"schema_version": 1}. Wall-clock data
/// lives only under the "timestamps" key so determinism checks can strip
/// one subtree.
inline constexpr int kSchemaVersion = 1;

/// Shortest decimal form that round-trips the exact double ('.' decimal
/// separator, no locale); CSV and Markdown cells use this so repeated
/// runs are byte-identical.
std::string format_double(double v);

nlohmann::json to_json(const analysis::SensitivityReport &report);
nlohmann::json to_json(const interp::CoverageReport &report);
nlohmann::json to_json(const fuzz::FuzzResult &result);
nlohmann::json to_json(const CampaignReport &report);

CampaignReport campaign_from_json(const nlohmann::json &doc);

} // namespace quanfuzz::campaign

#endif
