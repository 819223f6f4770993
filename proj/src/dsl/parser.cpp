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

#include "quanfuzz/dsl/parser.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "quanfuzz/core/state_vector.hpp"

namespace quanfuzz::dsl {

namespace {

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Program run() {
        Program prog;
        prog.span = peek().span;
        expect(TokenKind::KwProcedure);
        prog.name = expect(TokenKind::Ident).text;
        expect(TokenKind::LParen);
        expect(TokenKind::RParen);
        std::set<std::string> vars;
        prog.body = block(vars);
        expect(TokenKind::End);
        return prog;
    }

  private:
    const Token &peek() const { return tokens_[pos_]; }

    const Token &advance() { return tokens_[pos_++]; }

    bool at(TokenKind k) const { return peek().kind == k; }

    const Token &expect(TokenKind k) {
        if (!at(k)) {
            throw ParseError(peek().span,
                             std::string("expected ") + token_kind_name(k) +
                                 ", got " + token_kind_name(peek().kind));
        }
        return advance();
    }

    // Enclosing-scope variables are visible inside; new declarations are
    // local to the block.
    std::vector<Stmt> block(std::set<std::string> vars) {
        expect(TokenKind::LBrace);
        std::vector<Stmt> stmts;
        while (!at(TokenKind::RBrace)) {
            if (at(TokenKind::End)) {
                throw ParseError(peek().span, "expected '}', got end of input");
            }
            stmts.push_back(statement(vars));
        }
        expect(TokenKind::RBrace);
        return stmts;
    }

    Stmt statement(std::set<std::string> &vars) {
        Stmt s;
        s.span = peek().span;
        switch (peek().kind) {
        case TokenKind::KwQureg: s.node = qureg_decl(); break;
        case TokenKind::KwMix: s.node = mix_apply(); break;
        case TokenKind::KwIf: s.node = if_measure(vars); break;
        case TokenKind::KwPrint: s.node = print_stmt(); break;
        case TokenKind::KwInt: s.node = int_decl(vars); break;
        case TokenKind::Ident: s.node = gate_or_assign(vars); break;
        default:
            throw ParseError(peek().span, std::string("expected statement, "
                                                      "got ") +
                                              token_kind_name(peek().kind));
        }
        return s;
    }

    QuregDecl qureg_decl() {
        expect(TokenKind::KwQureg);
        const Token &name = expect(TokenKind::Ident);
        if (reg_) {
            throw ParseError(name.span,
                             "only one quantum register may be declared");
        }
        expect(TokenKind::LBracket);
        const Token &width = expect(TokenKind::IntLit);
        if (width.value < 1 || width.value > core::kMaxQubits) {
            throw ParseError(width.span,
                             "register width must be in [1, " +
                                 std::to_string(core::kMaxQubits) + "], got " +
                                 std::to_string(width.value));
        }
        expect(TokenKind::RBracket);
        expect(TokenKind::Semi);
        QuregDecl d{name.text, static_cast<int>(width.value)};
        reg_ = d;
        return d;
    }

    void check_register(const Token &name) const {
        if (!reg_ || reg_->name != name.text) {
            throw ParseError(name.span, "undeclared quantum register '" +
                                            name.text + "'");
        }
    }

    MixApply mix_apply() {
        expect(TokenKind::KwMix);
        expect(TokenKind::LParen);
        const Token &name = expect(TokenKind::Ident);
        check_register(name);
        expect(TokenKind::RParen);
        expect(TokenKind::Semi);
        return MixApply{name.text};
    }

    IfMeasure if_measure(const std::set<std::string> &vars) {
        expect(TokenKind::KwIf);
        expect(TokenKind::LParen);
        expect(TokenKind::KwMeasure);
        expect(TokenKind::LParen);
        const Token &name = expect(TokenKind::Ident);
        check_register(name);
        expect(TokenKind::RParen);
        expect(TokenKind::EqEq);
        const Token &target = expect(TokenKind::IntLit);
        std::int64_t limit = std::int64_t{1} << reg_->n_qubits;
        if (target.value >= limit) {
            throw ParseError(target.span,
                             "measurement target " +
                                 std::to_string(target.value) +
                                 " does not fit in " +
                                 std::to_string(reg_->n_qubits) + " qubits");
        }
        expect(TokenKind::RParen);
        IfMeasure node;
        node.reg = name.text;
        node.target = target.value;
        node.then_body = block(vars);
        if (at(TokenKind::KwElse)) {
            advance();
            node.else_body = block(vars);
        }
        return node;
    }

    Print print_stmt() {
        expect(TokenKind::KwPrint);
        const Token &text = expect(TokenKind::StringLit);
        expect(TokenKind::Semi);
        return Print{text.text};
    }

    IntDecl int_decl(std::set<std::string> &vars) {
        expect(TokenKind::KwInt);
        const Token &name = expect(TokenKind::Ident);
        expect(TokenKind::Assign);
        Expr value = expression(vars);
        expect(TokenKind::Semi);
        vars.insert(name.text);
        return IntDecl{name.text, std::move(value)};
    }

    std::variant<QuregDecl, GateApply, MixApply, IfMeasure, Print, IntDecl,
                 Assign>
    gate_or_assign(const std::set<std::string> &vars) {
        const Token &name = advance();
        if (at(TokenKind::LParen)) {
            auto gate = core::gate_from_name(name.text);
            if (!gate) {
                throw ParseError(name.span,
                                 "unknown gate '" + name.text + "'");
            }
            advance();
            GateApply g;
            g.gate = *gate;
            const Token &reg = expect(TokenKind::Ident);
            check_register(reg);
            g.reg = reg.text;
            if (at(TokenKind::LBracket)) {
                advance();
                const Token &idx = expect(TokenKind::IntLit);
                if (idx.value < 0 || idx.value >= reg_->n_qubits) {
                    throw ParseError(idx.span,
                                     "qubit index " +
                                         std::to_string(idx.value) +
                                         " out of range for register of "
                                         "width " +
                                         std::to_string(reg_->n_qubits));
                }
                g.qubit = static_cast<int>(idx.value);
                expect(TokenKind::RBracket);
            }
            expect(TokenKind::RParen);
            expect(TokenKind::Semi);
            return g;
        }
        if (at(TokenKind::Assign)) {
            if (vars.find(name.text) == vars.end()) {
                throw ParseError(name.span,
                                 "undeclared variable '" + name.text + "'");
            }
            advance();
            Expr value = expression(vars);
            expect(TokenKind::Semi);
            return Assign{name.text, std::move(value)};
        }
        throw ParseError(peek().span,
                         std::string("expected '(' or '=' after identifier, "
                                     "got ") +
                             token_kind_name(peek().kind));
    }

    Expr expression(const std::set<std::string> &vars) {
        Expr lhs = term(vars);
        while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
            BinOp op =
                advance().kind == TokenKind::Plus ? BinOp::Add : BinOp::Sub;
            Expr rhs = term(vars);
            lhs = make_bin(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr term(const std::set<std::string> &vars) {
        Expr lhs = factor(vars);
        while (at(TokenKind::Star) || at(TokenKind::Slash)) {
            BinOp op =
                advance().kind == TokenKind::Star ? BinOp::Mul : BinOp::Div;
            Expr rhs = factor(vars);
            lhs = make_bin(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr factor(const std::set<std::string> &vars) {
        Expr e;
        e.span = peek().span;
        if (at(TokenKind::IntLit)) {
            e.node = IntLit{advance().value};
            return e;
        }
        if (at(TokenKind::Ident)) {
            const Token &name = advance();
            if (vars.find(name.text) == vars.end()) {
                throw ParseError(name.span,
                                 "undeclared variable '" + name.text + "'");
            }
            e.node = VarRef{name.text};
            return e;
        }
        if (at(TokenKind::LParen)) {
            advance();
            Expr inner = expression(vars);
            expect(TokenKind::RParen);
            return inner;
        }
        throw ParseError(peek().span,
                         std::string("expected expression, got ") +
                             token_kind_name(peek().kind));
    }

    static Expr make_bin(BinOp op, Expr lhs, Expr rhs) {
        Expr e;
        e.span = lhs.span;
        BinExpr b;
        b.op = op;
        b.operands.push_back(std::move(lhs));
        b.operands.push_back(std::move(rhs));
        e.node = std::move(b);
        return e;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::optional<QuregDecl> reg_;
};

} // namespace

Program parse(const std::string &text) {
    return Parser(tokenize(text)).run();
}

Program parse_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open program file " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

} // namespace quanfuzz::dsl
