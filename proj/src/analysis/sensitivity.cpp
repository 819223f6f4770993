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

#include "quanfuzz/analysis/sensitivity.hpp"

#include <stdexcept>

namespace quanfuzz::analysis {

namespace {

void walk(const std::vector<dsl::Stmt> &body, SensitivityReport &report) {
    for (const dsl::Stmt &s : body) {
        const auto *ifm = std::get_if<dsl::IfMeasure>(&s.node);
        if (!ifm) {
            continue;
        }
        int k = static_cast<int>(report.sites.size());
        SensitiveSite site;
        site.site_id = k;
        site.register_name = ifm->reg;
        site.width = report.register_width;
        site.predicate_op = ifm->op;
        site.target_value = ifm->target;
        site.then_branch_id = 2 * k;
        site.else_branch_id = 2 * k + 1;
        site.span = s.span;
        report.sites.push_back(site);

        report.branches.push_back(
            BranchId{2 * k, BranchKind::SensitiveThen, k, s.span});
        report.branches.push_back(
            BranchId{2 * k + 1, BranchKind::SensitiveElse, k, s.span});

        walk(ifm->then_body, report);
        if (ifm->else_body) {
            walk(*ifm->else_body, report);
        }
    }
}

} // namespace

SensitivityReport extract_sensitive(const dsl::Program &p) {
    SensitivityReport report;
    if (const dsl::QuregDecl *reg = p.qureg()) {
        report.register_name = reg->name;
        report.register_width = reg->n_qubits;
    }
    walk(p.body, report);
    report.branches.push_back(BranchId{report.exit_branch_id(),
                                       BranchKind::ProgramExit, std::nullopt,
                                       p.span});
    return report;
}

std::vector<HookPoint> instrumentation_points(const dsl::Program &p,
                                              const SensitiveSite &site) {
    SensitivityReport report = extract_sensitive(p);
    if (site.site_id < 0 ||
        site.site_id >= static_cast<int>(report.sites.size())) {
        throw std::invalid_argument("site " + std::to_string(site.site_id) +
                                    " does not belong to the program");
    }
    const SensitiveSite &own = report.sites[site.site_id];
    if (own.register_name != site.register_name ||
        own.target_value != site.target_value ||
        own.span.line != site.span.line ||
        own.span.column != site.span.column) {
        throw std::invalid_argument("site " + std::to_string(site.site_id) +
                                    " does not match the program's site");
    }

    dsl::SourceSpan start = p.body.empty() ? p.span : p.body.front().span;
    dsl::SourceSpan transform = own.span;
    for (const dsl::Stmt &s : p.body) {
        if (std::holds_alternative<dsl::GateApply>(s.node) ||
            std::holds_alternative<dsl::MixApply>(s.node)) {
            transform = s.span;
            break;
        }
    }

    return {
        HookPoint{HookKind::InputMatrixRead, start},
        HookPoint{HookKind::KetTransform, transform},
        HookPoint{HookKind::KetBeforeMeasurement, own.span},
        HookPoint{HookKind::MeasurementResult, own.span},
    };
}

} // namespace quanfuzz::analysis
