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

#include "quanfuzz/core/gates.hpp"

#include <cmath>
#include <numbers>

namespace quanfuzz::core {

Mat2 gate_matrix(GateKind g) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Amp i{0.0, 1.0};
    switch (g) {
    case GateKind::X:
        return {Amp{0}, Amp{1}, Amp{1}, Amp{0}};
    case GateKind::Y:
        return {Amp{0}, -i, i, Amp{0}};
    case GateKind::Z:
        return {Amp{1}, Amp{0}, Amp{0}, Amp{-1}};
    case GateKind::H:
        return {Amp{inv_sqrt2}, Amp{inv_sqrt2}, Amp{inv_sqrt2},
                Amp{-inv_sqrt2}};
    case GateKind::S:
        return {Amp{1}, Amp{0}, Amp{0}, i};
    case GateKind::T:
        return {Amp{1}, Amp{0}, Amp{0},
                std::polar(1.0, std::numbers::pi / 4.0)};
    }
    return {};
}

std::string_view gate_name(GateKind g) {
    switch (g) {
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::T: return "T";
    }
    return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
    if (name.size() != 1) {
        return std::nullopt;
    }
    switch (name[0]) {
    case 'X': return GateKind::X;
    case 'Y': return GateKind::Y;
    case 'Z': return GateKind::Z;
    case 'H': return GateKind::H;
    case 'S': return GateKind::S;
    case 'T': return GateKind::T;
    default: return std::nullopt;
    }
}

} // namespace quanfuzz::core
