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

#ifndef QUANFUZZ_CORE_MATRIX_IO_HPP
#define QUANFUZZ_CORE_MATRIX_IO_HPP

#include <iosfwd>
#include <string>

#include "quanfuzz/core/state_vector.hpp"

namespace quanfuzz::core {

/// State file format, UTF-8 text:
///   line 1:             n (qubit count)
///   lines 2 .. 2^n + 1: "re im" for amplitude 0 .. 2^n - 1
/// Reals are written with 17 significant digits so read(write(s)) is exact.

StateVector read_state(std::istream &in);
StateVector read_state_file(const std::string &path);

void write_state(std::ostream &out, const StateVector &s);
void write_state_file(const std::string &path, const StateVector &s);

} // namespace quanfuzz::core

#endif
