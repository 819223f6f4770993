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

#ifndef QUANFUZZ_ANALYSIS_SENSITIVITY_HPP
#define QUANFUZZ_ANALYSIS_SENSITIVITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quanfuzz/dsl/ast.hpp"

namespace quanfuzz::analysis {

enum class BranchKind { SensitiveThen, SensitiveElse, ProgramExit };

/// One entry of the branch coverage universe. Site k owns branches 2k
/// (then) and 2k+1 (else); id 2S, with S the site count, is the implicit
/// program-exit branch.
struct BranchId {
    int id = 0;
    BranchKind kind = BranchKind::ProgramExit;
    std::optional<int> site_id;
    dsl::SourceSpan span;
};

/// A measurement-guarded conditional: the quantum-sensitive part of a
/// program. The else arm is part of the coverage universe even when the
/// program has no else block (not entering the then-branch is an
/// observable outcome).
struct SensitiveSite {
    int site_id = 0;
    std::string register_name;
    int width = 0;
    dsl::CmpOp predicate_op = dsl::CmpOp::Eq;
    std::int64_t target_value = 0;
    int then_branch_id = 0;
    int else_branch_id = 0;
    dsl::SourceSpan span;
};

struct SensitivityReport {
    std::vector<SensitiveSite> sites;
    std::vector<BranchId> branches;
    // ket info from the qureg declaration; empty name if none declared.
    std::string register_name;
    int register_width = 0;

    int universe_size() const { return static_cast<int>(branches.size()); }
    int exit_branch_id() const { return 2 * static_cast<int>(sites.size()); }
};

/// Walks the AST in pre-order and numbers every IfMeasure as one
/// SensitiveSite.
SensitivityReport extract_sensitive(const dsl::Program &p);

enum class HookKind {
    InputMatrixRead,
    KetTransform,
    KetBeforeMeasurement,
    MeasurementResult,
};

struct HookPoint {
    HookKind kind = HookKind::InputMatrixRead;
    dsl::SourceSpan span;
};

/// The four interpreter hooks for one site, in execution order: read the
/// input matrix, transform the ket with it, emit the ket right before
/// the measurement, emit the measurement result.
/// Throws std::invalid_argument if `site` does not belong to `p`.
std::vector<HookPoint> instrumentation_points(const dsl::Program &p,
                                              const SensitiveSite &site);

} // namespace quanfuzz::analysis

#endif
