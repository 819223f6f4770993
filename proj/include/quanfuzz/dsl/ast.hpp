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

#ifndef QUANFUZZ_DSL_AST_HPP
#define QUANFUZZ_DSL_AST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quanfuzz/core/gates.hpp"
#include "quanfuzz/dsl/token.hpp"

namespace quanfuzz::dsl {

// Everything here is a plain value; copying a Program deep-copies it.
// Structural equality (operator==) ignores SourceSpans.

enum class BinOp { Add, Sub, Mul, Div };

struct Expr;

struct IntLit {
    std::int64_t value = 0;
};

struct VarRef {
    std::string name;
};

/// operands[0] op operands[1]; held in a vector so Expr stays a regular
/// value type despite the recursion.
struct BinExpr {
    BinOp op = BinOp::Add;
    std::vector<Expr> operands;

    const Expr &lhs() const { return operands[0]; }
    const Expr &rhs() const { return operands[1]; }
};

struct Expr {
    SourceSpan span;
    std::variant<IntLit, VarRef, BinExpr> node;
};

bool operator==(const Expr &a, const Expr &b);
bool operator==(const IntLit &a, const IntLit &b);
bool operator==(const VarRef &a, const VarRef &b);
bool operator==(const BinExpr &a, const BinExpr &b);

struct Stmt;

struct QuregDecl {
    std::string name;
    int n_qubits = 0;
};

/// Single-qubit gate on one qubit, or on every qubit of the register
/// when `qubit` is empty (written `H(q)`).
struct GateApply {
    core::GateKind gate = core::GateKind::X;
    std::string reg;
    std::optional<int> qubit;
};

struct MixApply {
    std::string reg;
};

enum class CmpOp { Eq };

struct IfMeasure {
    std::string reg;
    CmpOp op = CmpOp::Eq;
    std::int64_t target = 0;
    std::vector<Stmt> then_body;
    std::optional<std::vector<Stmt>> else_body;
};

struct Print {
    std::string text;
};

struct IntDecl {
    std::string name;
    Expr value;
};

struct Assign {
    std::string name;
    Expr value;
};

struct Stmt {
    SourceSpan span;
    std::variant<QuregDecl, GateApply, MixApply, IfMeasure, Print, IntDecl,
                 Assign>
        node;
};

bool operator==(const Stmt &a, const Stmt &b);
bool operator==(const QuregDecl &a, const QuregDecl &b);
bool operator==(const GateApply &a, const GateApply &b);
bool operator==(const MixApply &a, const MixApply &b);
bool operator==(const IfMeasure &a, const IfMeasure &b);
bool operator==(const Print &a, const Print &b);
bool operator==(const IntDecl &a, const IntDecl &b);
bool operator==(const Assign &a, const Assign &b);

struct Program {
    std::string name;
    std::vector<Stmt> body;
    SourceSpan span;

    /// The single qureg declaration, if any.
    const QuregDecl *qureg() const;
};

bool operator==(const Program &a, const Program &b);

} // namespace quanfuzz::dsl

#endif
