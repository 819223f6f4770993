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

#ifndef QUANFUZZ_DSL_LEXER_HPP
#define QUANFUZZ_DSL_LEXER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "quanfuzz/dsl/token.hpp"

namespace quanfuzz::dsl {

/// Lexical or syntactic failure; `span` points inside the offending input.
class ParseError : public std::runtime_error {
  public:
    ParseError(SourceSpan span, const std::string &msg)
        : std::runtime_error("line " + std::to_string(span.line) + ", col " +
                             std::to_string(span.column) + ": " + msg),
          span_(span) {}

    SourceSpan span() const { return span_; }

  private:
    SourceSpan span_;
};

/// Splits source text into tokens. Whitespace and `//` line comments are
/// skipped; the final token is always TokenKind::End.
std::vector<Token> tokenize(const std::string &text);

} // namespace quanfuzz::dsl

#endif
