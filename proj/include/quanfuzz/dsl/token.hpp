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

#ifndef QUANFUZZ_DSL_TOKEN_HPP
#define QUANFUZZ_DSL_TOKEN_HPP

#include <cstdint>
#include <string>

namespace quanfuzz::dsl {

/// 1-based position of a token or AST node in its source file.
struct SourceSpan {
    int line = 1;
    int column = 1;
};

enum class TokenKind {
    KwProcedure,
    KwQureg,
    KwMix,
    KwIf,
    KwElse,
    KwMeasure,
    KwPrint,
    KwInt,
    Ident,
    IntLit,
    StringLit,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Semi,
    Assign,
    EqEq,
    Plus,
    Minus,
    Star,
    Slash,
    End,
};

const char *token_kind_name(TokenKind k);

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;        // identifier name or string literal body
    std::int64_t value = 0;  // IntLit only
    SourceSpan span;
};

} // namespace quanfuzz::dsl

#endif
