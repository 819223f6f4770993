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

#ifndef QUANFUZZ_DSL_PARSER_HPP
#define QUANFUZZ_DSL_PARSER_HPP

#include <string>

#include "quanfuzz/dsl/ast.hpp"
#include "quanfuzz/dsl/lexer.hpp"

namespace quanfuzz::dsl {

/// Parses a whole program and checks bindings: a single qureg declared
/// before use, qubit indices within the register width, measurement
/// targets below 2^width, classical variables declared before use.
/// Throws ParseError on any violation.
Program parse(const std::string &text);

Program parse_file(const std::string &path);

} // namespace quanfuzz::dsl

#endif
