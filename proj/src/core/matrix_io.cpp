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

#include "quanfuzz/core/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace quanfuzz::core {

namespace {

[[noreturn]] void fail(const std::string &msg) {
    throw std::runtime_error("state file: " + msg);
}

} // namespace

StateVector read_state(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        fail("empty input");
    }
    int n_qubits = 0;
    {
        std::istringstream hdr(line);
        std::string extra;
        if (!(hdr >> n_qubits) || (hdr >> extra)) {
            fail("header must be a single integer qubit count");
        }
    }
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        fail("qubit count " + std::to_string(n_qubits) + " out of range [1, " +
             std::to_string(kMaxQubits) + "]");
    }

    StateVector s;
    s.n_qubits = n_qubits;
    std::size_t dim = std::size_t{1} << n_qubits;
    s.amps.reserve(dim);

    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream row(line);
        double re = 0.0;
        double im = 0.0;
        std::string extra;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            // Allow a trailing blank line, nothing else.
            if (in.peek() != std::istream::traits_type::eof()) {
                fail("blank line " + std::to_string(lineno));
            }
            break;
        }
        if (!(row >> re >> im) || (row >> extra)) {
            fail("line " + std::to_string(lineno) +
                 ": expected two reals \"re im\"");
        }
        if (!std::isfinite(re) || !std::isfinite(im)) {
            fail("line " + std::to_string(lineno) + ": non-finite amplitude");
        }
        if (s.amps.size() == dim) {
            fail("too many amplitude lines; expected " + std::to_string(dim));
        }
        s.amps.emplace_back(re, im);
    }
    if (s.amps.size() != dim) {
        fail("expected " + std::to_string(dim) + " amplitude lines, got " +
             std::to_string(s.amps.size()));
    }

    double nrm = norm(s);
    if (std::abs(nrm - 1.0) > 1e-6) {
        std::ostringstream msg;
        msg << "norm " << nrm << " deviates from 1 by more than 1e-6";
        fail(msg.str());
    }
    return s;
}

StateVector read_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail("cannot open " + path);
    }
    return read_state(in);
}

void write_state(std::ostream &out, const StateVector &s) {
    out << s.n_qubits << '\n';
    char buf[64];
    for (const Amp &a : s.amps) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g", a.real(), a.imag());
        out << buf << '\n';
    }
}

void write_state_file(const std::string &path, const StateVector &s) {
    std::ofstream out(path);
    if (!out) {
        fail("cannot open " + path + " for writing");
    }
    write_state(out, s);
    if (!out) {
        fail("write to " + path + " failed");
    }
}

} // namespace quanfuzz::core
