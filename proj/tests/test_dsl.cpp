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

#include <catch2/catch_amalgamated.hpp>

#include "quanfuzz/dsl/lexer.hpp"
#include "quanfuzz/dsl/parser.hpp"
#include "quanfuzz/dsl/printer.hpp"
#include "support/helpers.hpp"

using namespace quanfuzz::dsl;
namespace qt = quanfuzz::testing;

namespace {

std::vector<TokenKind> kinds(const std::string &text) {
    std::vector<TokenKind> out;
    for (const Token &t : tokenize(text)) {
        out.push_back(t.kind);
    }
    return out;
}

} // namespace

TEST_CASE("tokenize: declaration, measurement, comments") {
    CHECK(kinds("qureg q[5];") ==
          std::vector<TokenKind>{TokenKind::KwQureg, TokenKind::Ident,
                                 TokenKind::LBracket, TokenKind::IntLit,
                                 TokenKind::RBracket, TokenKind::Semi,
                                 TokenKind::End});

    CHECK(kinds("measure(q)==5") ==
          std::vector<TokenKind>{TokenKind::KwMeasure, TokenKind::LParen,
                                 TokenKind::Ident, TokenKind::RParen,
                                 TokenKind::EqEq, TokenKind::IntLit,
                                 TokenKind::End});

    CHECK(kinds("int i=1/0; //bug") ==
          std::vector<TokenKind>{TokenKind::KwInt, TokenKind::Ident,
                                 TokenKind::Assign, TokenKind::IntLit,
                                 TokenKind::Slash, TokenKind::IntLit,
                                 TokenKind::Semi, TokenKind::End});
}

TEST_CASE("tokenize: token payloads and spans") {
    std::vector<Token> toks = tokenize("qureg q[5];\nMix(q);");
    CHECK(toks[0].span.line == 1);
    CHECK(toks[0].span.column == 1);
    CHECK(toks[1].text == "q");
    CHECK(toks[3].value == 5);
    CHECK(toks[6].span.line == 2);
    CHECK(toks[6].span.column == 1);
    CHECK(toks[6].kind == TokenKind::KwMix);

    toks = tokenize("print \"crash\";");
    CHECK(toks[1].kind == TokenKind::StringLit);
    CHECK(toks[1].text == "crash");
}

TEST_CASE("tokenize: errors carry spans inside the input") {
    try {
        tokenize("qureg q[5];\n  @");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.span().line == 2);
        CHECK(e.span().column == 3);
    }

    CHECK_THROWS_AS(tokenize("print \"open"), ParseError);
    CHECK_THROWS_AS(tokenize("print \"nl\nx\";"), ParseError);
    CHECK_THROWS_AS(tokenize("int i=99999999999999999999;"), ParseError);
}

TEST_CASE("parse: the motivating listing") {
    Program p = parse_file(qt::fixture_path("motivating.qpl"));
    CHECK(p.name == "example");
    REQUIRE(p.body.size() == 4);

    const auto *decl = std::get_if<QuregDecl>(&p.body[0].node);
    REQUIRE(decl != nullptr);
    CHECK(decl->name == "q");
    CHECK(decl->n_qubits == 5);

    const auto *mixStmt = std::get_if<MixApply>(&p.body[1].node);
    REQUIRE(mixStmt != nullptr);
    CHECK(mixStmt->reg == "q");

    const auto *ifm = std::get_if<IfMeasure>(&p.body[2].node);
    REQUIRE(ifm != nullptr);
    CHECK(ifm->reg == "q");
    CHECK(ifm->op == CmpOp::Eq);
    CHECK(ifm->target == 5);
    CHECK_FALSE(ifm->else_body.has_value());
    REQUIRE(ifm->then_body.size() == 2);
    const auto *crash = std::get_if<Print>(&ifm->then_body[0].node);
    REQUIRE(crash != nullptr);
    CHECK(crash->text == "crash");
    const auto *bug = std::get_if<IntDecl>(&ifm->then_body[1].node);
    REQUIRE(bug != nullptr);
    CHECK(bug->name == "i");
    const auto *div = std::get_if<BinExpr>(&bug->value.node);
    REQUIRE(div != nullptr);
    CHECK(div->op == BinOp::Div);
    CHECK(std::get<IntLit>(div->lhs().node).value == 1);
    CHECK(std::get<IntLit>(div->rhs().node).value == 0);

    const auto *safe = std::get_if<Print>(&p.body[3].node);
    REQUIRE(safe != nullptr);
    CHECK(safe->text == "safe");
}

TEST_CASE("parse: empty program") {
    Program p = parse("procedure t(){}");
    CHECK(p.name == "t");
    CHECK(p.body.empty());
}

TEST_CASE("parse: gate forms and else blocks") {
    Program p = parse("procedure t(){"
                      " qureg q[3];"
                      " H(q); X(q[2]); T(q[0]);"
                      " if (measure(q)==7){ print \"a\"; } else { print \"b\"; }"
                      "}");
    REQUIRE(p.body.size() == 5);
    const auto *whole = std::get_if<GateApply>(&p.body[1].node);
    REQUIRE(whole != nullptr);
    CHECK_FALSE(whole->qubit.has_value());
    const auto *indexed = std::get_if<GateApply>(&p.body[2].node);
    REQUIRE(indexed != nullptr);
    CHECK(indexed->qubit == 2);
    const auto *ifm = std::get_if<IfMeasure>(&p.body[4].node);
    REQUIRE(ifm != nullptr);
    REQUIRE(ifm->else_body.has_value());
    CHECK(ifm->else_body->size() == 1);
}

TEST_CASE("parse: expression precedence and associativity") {
    Program p = parse("procedure t(){ int a=1+2*3; int b=8-4-2; "
                      "int c=(1+2)*3; a=a/2/2; }");
    const auto *a = std::get_if<IntDecl>(&p.body[0].node);
    REQUIRE(a != nullptr);
    const auto *sum = std::get_if<BinExpr>(&a->value.node);
    REQUIRE(sum != nullptr);
    CHECK(sum->op == BinOp::Add);
    CHECK(std::get<BinExpr>(sum->rhs().node).op == BinOp::Mul);

    const auto *b = std::get_if<IntDecl>(&p.body[1].node);
    const auto *diff = std::get_if<BinExpr>(&b->value.node);
    REQUIRE(diff != nullptr);
    CHECK(diff->op == BinOp::Sub);
    // (8-4)-2, not 8-(4-2)
    CHECK(std::get<BinExpr>(diff->lhs().node).op == BinOp::Sub);

    const auto *c = std::get_if<IntDecl>(&p.body[2].node);
    const auto *prod = std::get_if<BinExpr>(&c->value.node);
    REQUIRE(prod != nullptr);
    CHECK(prod->op == BinOp::Mul);
    CHECK(std::get<BinExpr>(prod->lhs().node).op == BinOp::Add);
}

TEST_CASE("parse: binding errors") {
    auto reject = [](const std::string &text) {
        try {
            parse(text);
            FAIL("expected ParseError for: " << text);
        } catch (const ParseError &e) {
            CHECK(e.span().line >= 1);
            CHECK(e.span().column >= 1);
        }
    };
    reject("procedure t(){ qureg q[2]; H(q[3]); }");
    reject("procedure t(){ qureg q[2]; H(q[2]); }");
    reject("procedure t(){ qureg q[2]; qureg r[2]; }");
    reject("procedure t(){ H(q); }");
    reject("procedure t(){ qureg q[2]; Q(q); }");
    reject("procedure t(){ qureg q[2]; if (measure(q)==4){} }");
    reject("procedure t(){ qureg q[2]; if (measure(r)==1){} }");
    reject("procedure t(){ int a=b+1; }");
    reject("procedure t(){ a=1; }");
    reject("procedure t(){ qureg q[0]; }");
    reject("procedure t(){ qureg q[29]; }");
    reject("procedure t(){ Mix(q); }");
}

TEST_CASE("parse: variables are block-scoped") {
    CHECK_NOTHROW(parse("procedure t(){ qureg q[1]; "
                        "if (measure(q)==0){ int a=1; a=a+1; } }"));
    CHECK_THROWS_AS(parse("procedure t(){ qureg q[1]; "
                          "if (measure(q)==0){ int a=1; } a=2; }"),
                    ParseError);
}

TEST_CASE("parse: syntax errors carry spans") {
    auto reject_at = [](const std::string &text, int line) {
        try {
            parse(text);
            FAIL("expected ParseError");
        } catch (const ParseError &e) {
            CHECK(e.span().line == line);
            CHECK(std::string(e.what()).find("line") != std::string::npos);
        }
    };
    reject_at("procedure t(){\n  qureg q[2]\n}", 3);
    reject_at("procedure t(){\n  if measure(q)==1 {}\n}", 2);
    reject_at("procedure t()", 1);
    reject_at("", 1);
}

TEST_CASE("pretty_print: canonical empty program") {
    CHECK(pretty_print(parse("procedure t() {   }")) == "procedure t(){\n}\n");
}

TEST_CASE("pretty_print: canonical statement forms") {
    Program p = parse_file(qt::fixture_path("motivating.qpl"));
    std::string canon = pretty_print(p);
    CHECK(canon == "procedure example(){\n"
                   "    qureg q[5];\n"
                   "    Mix(q);\n"
                   "    if (measure(q)==5){\n"
                   "        print \"crash\";\n"
                   "        int i=1/0;\n"
                   "    }\n"
                   "    print \"safe\";\n"
                   "}\n");
}

TEST_CASE("round-trip: parse of pretty_print is structurally identical") {
    const std::string corpus[] = {
        qt::read_file(qt::fixture_path("motivating.qpl")),
        "procedure t(){}",
        "procedure t(){ qureg q[3]; H(q); Y(q[1]); S(q[2]); Z(q[0]); }",
        "procedure t(){ qureg q[2]; if (measure(q)==3){ print \"x\"; } "
        "else { int k=2*(3+4); k=k-1; } }",
        "procedure t(){ int a=1+2*3-4/2; int b=(1+2)*(3-4); int c=a*b; "
        "c=c-(a-b); }",
        "procedure t(){ qureg q[1]; if (measure(q)==0){ "
        "if (measure(q)==1){ print \"n\"; } } }",
    };
    for (const std::string &src : corpus) {
        Program once = parse(src);
        Program again = parse(pretty_print(once));
        CHECK(again == once);
        // And printing is a fixed point from the first round on.
        CHECK(pretty_print(again) == pretty_print(once));
    }
}

TEST_CASE("round-trip: parenthesization survives reparsing") {
    // 8-(4-2) must not print as 8-4-2.
    Program p = parse("procedure t(){ int a=8-(4-2); int b=2*(3+1); "
                      "int c=(8/4)/2; int d=8/(4/2); }");
    Program q = parse(pretty_print(p));
    CHECK(p == q);
}

TEST_CASE("program equality ignores spans") {
    Program a = parse("procedure t(){ qureg q[2]; H(q); }");
    Program b = parse("procedure t(){\n\n  qureg q[2];\n      H(q);\n}");
    CHECK(a == b);
    Program c = parse("procedure t(){ qureg q[2]; X(q); }");
    CHECK_FALSE(a == c);
}
