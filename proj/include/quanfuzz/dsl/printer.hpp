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

#ifndef QUANFUZZ_DSL_PRINTER_HPP
#define QUANFUZZ_DSL_PRINTER_HPP

#include <string>

#include "quanfuzz/dsl/ast.hpp"

namespace quanfuzz::dsl {

/// Canonical source text: 4-space indentation, one statement per line,
/// parentheses only where the AST shape requires them. Guarantees
/// parse(pretty_print(p)) == p for any bound Program.
std::string pretty_print(const Program &p);

} // namespace quanfuzz::dsl

#endif
