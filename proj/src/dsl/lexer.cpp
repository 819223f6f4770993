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

#include "quanfuzz/dsl/lexer.hpp"

#include <cctype>
#include <unordered_map>

namespace quanfuzz::dsl {

const char *token_kind_name(TokenKind k) {
    switch (k) {
    case TokenKind::KwProcedure: return "'procedure'";
    case TokenKind::KwQureg: return "'qureg'";
    case TokenKind::KwMix: return "'Mix'";
    case TokenKind::KwIf: return "'if'";
    case TokenKind::KwElse: return "'else'";
    case TokenKind::KwMeasure: return "'measure'";
    case TokenKind::KwPrint: return "'print'";
    case TokenKind::KwInt: return "'int'";
    case TokenKind::Ident: return "identifier";
    case TokenKind::IntLit: return "integer";
    case TokenKind::StringLit: return "string";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Semi: return "';'";
    case TokenKind::Assign: return "'='";
    case TokenKind::EqEq: return "'=='";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::End: return "end of input";
    }
    return "?";
}

namespace {

const std::unordered_map<std::string, TokenKind> kKeywords = {
    {"procedure", TokenKind::KwProcedure}, {"qureg", TokenKind::KwQureg},
    {"Mix", TokenKind::KwMix},             {"if", TokenKind::KwIf},
    {"else", TokenKind::KwElse},           {"measure", TokenKind::KwMeasure},
    {"print", TokenKind::KwPrint},         {"int", TokenKind::KwInt},
};

struct Cursor {
    const std::string &text;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char peek2() const { return pos + 1 < text.size() ? text[pos + 1] : '\0'; }

    char advance() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        return c;
    }

    SourceSpan span() const { return SourceSpan{line, column}; }
};

} // namespace

std::vector<Token> tokenize(const std::string &text) {
    std::vector<Token> tokens;
    Cursor cur{text};

    auto push = [&](TokenKind kind, SourceSpan span) {
        tokens.push_back(Token{kind, "", 0, span});
    };

    while (!cur.done()) {
        char c = cur.peek();
        if (std::isspace(static_cast<unsigned char>(c))) {
            cur.advance();
            continue;
        }
        if (c == '/' && cur.peek2() == '/') {
            while (!cur.done() && cur.peek() != '\n') {
                cur.advance();
            }
            continue;
        }

        SourceSpan span = cur.span();

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (!cur.done() &&
                   (std::isalnum(static_cast<unsigned char>(cur.peek())) ||
                    cur.peek() == '_')) {
                word += cur.advance();
            }
            auto kw = kKeywords.find(word);
            Token t;
            t.kind = kw != kKeywords.end() ? kw->second : TokenKind::Ident;
            t.text = word;
            t.span = span;
            tokens.push_back(t);
            continue;
        }

        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            while (!cur.done() &&
                   std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                int d = cur.peek() - '0';
                if (v > (INT64_MAX - d) / 10) {
                    throw ParseError(span, "integer literal too large");
                }
                v = v * 10 + d;
                cur.advance();
            }
            Token t;
            t.kind = TokenKind::IntLit;
            t.value = v;
            t.span = span;
            tokens.push_back(t);
            continue;
        }

        if (c == '"') {
            cur.advance();
            std::string body;
            while (true) {
                if (cur.done() || cur.peek() == '\n') {
                    throw ParseError(span, "unterminated string literal");
                }
                char ch = cur.advance();
                if (ch == '"') {
                    break;
                }
                body += ch;
            }
            Token t;
            t.kind = TokenKind::StringLit;
            t.text = body;
            t.span = span;
            tokens.push_back(t);
            continue;
        }

        cur.advance();
        switch (c) {
        case '(': push(TokenKind::LParen, span); break;
        case ')': push(TokenKind::RParen, span); break;
        case '{': push(TokenKind::LBrace, span); break;
        case '}': push(TokenKind::RBrace, span); break;
        case '[': push(TokenKind::LBracket, span); break;
        case ']': push(TokenKind::RBracket, span); break;
        case ';': push(TokenKind::Semi, span); break;
        case '+': push(TokenKind::Plus, span); break;
        case '-': push(TokenKind::Minus, span); break;
        case '*': push(TokenKind::Star, span); break;
        case '/': push(TokenKind::Slash, span); break;
        case '=':
            if (!cur.done() && cur.peek() == '=') {
                cur.advance();
                push(TokenKind::EqEq, span);
            } else {
                push(TokenKind::Assign, span);
            }
            break;
        default:
            throw ParseError(span, std::string("illegal character '") + c +
                                       "'");
        }
    }

    Token end;
    end.kind = TokenKind::End;
    end.span = cur.span();
    tokens.push_back(end);
    return tokens;
}

} // namespace quanfuzz::dsl
