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

#include "quanfuzz/dsl/printer.hpp"

#include <sstream>

namespace quanfuzz::dsl {

namespace {

int precedence(BinOp op) {
    return (op == BinOp::Mul || op == BinOp::Div) ? 2 : 1;
}

const char *op_text(BinOp op) {
    switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    }
    return "?";
}

// `parent_prec` is the precedence required at this position; `is_rhs`
// forces parentheses on equal precedence so the reparse keeps the tree
// shape (the grammar is left-associative).
void print_expr(std::ostringstream &out, const Expr &e, int parent_prec,
                bool is_rhs) {
    if (const auto *lit = std::get_if<IntLit>(&e.node)) {
        out << lit->value;
        return;
    }
    if (const auto *var = std::get_if<VarRef>(&e.node)) {
        out << var->name;
        return;
    }
    const auto &bin = std::get<BinExpr>(e.node);
    int prec = precedence(bin.op);
    bool parens = prec < parent_prec || (prec == parent_prec && is_rhs);
    if (parens) {
        out << '(';
    }
    print_expr(out, bin.lhs(), prec, false);
    out << op_text(bin.op);
    print_expr(out, bin.rhs(), prec, true);
    if (parens) {
        out << ')';
    }
}

std::string expr_text(const Expr &e) {
    std::ostringstream out;
    print_expr(out, e, 0, false);
    return out.str();
}

void print_block(std::ostringstream &out, const std::vector<Stmt> &body,
                 int depth);

void print_stmt(std::ostringstream &out, const Stmt &s, int depth) {
    std::string pad(4 * static_cast<std::size_t>(depth), ' ');
    std::visit(
        [&](const auto &node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, QuregDecl>) {
                out << pad << "qureg " << node.name << '[' << node.n_qubits
                    << "];\n";
            } else if constexpr (std::is_same_v<T, GateApply>) {
                out << pad << core::gate_name(node.gate) << '(' << node.reg;
                if (node.qubit) {
                    out << '[' << *node.qubit << ']';
                }
                out << ");\n";
            } else if constexpr (std::is_same_v<T, MixApply>) {
                out << pad << "Mix(" << node.reg << ");\n";
            } else if constexpr (std::is_same_v<T, IfMeasure>) {
                out << pad << "if (measure(" << node.reg << ")=="
                    << node.target << "){\n";
                print_block(out, node.then_body, depth + 1);
                if (node.else_body) {
                    out << pad << "} else {\n";
                    print_block(out, *node.else_body, depth + 1);
                }
                out << pad << "}\n";
            } else if constexpr (std::is_same_v<T, Print>) {
                out << pad << "print \"" << node.text << "\";\n";
            } else if constexpr (std::is_same_v<T, IntDecl>) {
                out << pad << "int " << node.name << '='
                    << expr_text(node.value) << ";\n";
            } else if constexpr (std::is_same_v<T, Assign>) {
                out << pad << node.name << '=' << expr_text(node.value)
                    << ";\n";
            }
        },
        s.node);
}

void print_block(std::ostringstream &out, const std::vector<Stmt> &body,
                 int depth) {
    for (const Stmt &s : body) {
        print_stmt(out, s, depth);
    }
}

} // namespace

std::string pretty_print(const Program &p) {
    std::ostringstream out;
    out << "procedure " << p.name << "(){\n";
    print_block(out, p.body, 1);
    out << "}\n";
    return out.str();
}

} // namespace quanfuzz::dsl
