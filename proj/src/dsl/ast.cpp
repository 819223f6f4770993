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

#include "quanfuzz/dsl/ast.hpp"

namespace quanfuzz::dsl {

bool operator==(const IntLit &a, const IntLit &b) {
    return a.value == b.value;
}

bool operator==(const VarRef &a, const VarRef &b) {
    return a.name == b.name;
}

bool operator==(const BinExpr &a, const BinExpr &b) {
    return a.op == b.op && a.operands == b.operands;
}

bool operator==(const Expr &a, const Expr &b) {
    return a.node == b.node;
}

bool operator==(const QuregDecl &a, const QuregDecl &b) {
    return a.name == b.name && a.n_qubits == b.n_qubits;
}

bool operator==(const GateApply &a, const GateApply &b) {
    return a.gate == b.gate && a.reg == b.reg && a.qubit == b.qubit;
}

bool operator==(const MixApply &a, const MixApply &b) {
    return a.reg == b.reg;
}

bool operator==(const IfMeasure &a, const IfMeasure &b) {
    return a.reg == b.reg && a.op == b.op && a.target == b.target &&
           a.then_body == b.then_body && a.else_body == b.else_body;
}

bool operator==(const Print &a, const Print &b) {
    return a.text == b.text;
}

bool operator==(const IntDecl &a, const IntDecl &b) {
    return a.name == b.name && a.value == b.value;
}

bool operator==(const Assign &a, const Assign &b) {
    return a.name == b.name && a.value == b.value;
}

bool operator==(const Stmt &a, const Stmt &b) {
    return a.node == b.node;
}

bool operator==(const Program &a, const Program &b) {
    return a.name == b.name && a.body == b.body;
}

const QuregDecl *Program::qureg() const {
    for (const Stmt &s : body) {
        if (const auto *d = std::get_if<QuregDecl>(&s.node)) {
            return d;
        }
    }
    return nullptr;
}

} // namespace quanfuzz::dsl
