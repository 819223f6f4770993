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

#ifndef QUANFUZZ_TESTS_SUPPORT_HELPERS_HPP
#define QUANFUZZ_TESTS_SUPPORT_HELPERS_HPP

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace quanfuzz::testing {

#ifndef QUANFUZZ_FIXTURE_DIR
#error "QUANFUZZ_FIXTURE_DIR must be defined by the build"
#endif

inline std::string fixture_path(const std::string &name) {
    return std::string(QUANFUZZ_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
}

/// The quanfuzz binary under test; set by the ctest environment.
inline std::string tool_path() {
    const char *p = std::getenv("QUANFUZZ_BIN");
    if (p == nullptr) {
        throw std::runtime_error("QUANFUZZ_BIN is not set");
    }
    return p;
}

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout and stderr merged
};

/// Runs `command` through the shell with stderr folded into stdout.
inline RunResult run_command(const std::string &command) {
    RunResult res;
    FILE *pipe = popen((command + " 2>&1").c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed");
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        res.output.append(buf, got);
    }
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

inline RunResult run_tool(const std::string &args) {
    return run_command("'" + tool_path() + "' " + args);
}

/// Unique scratch directory, removed on scope exit.
class TempDir {
  public:
    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        std::string prefix =
            "quanfuzz_test_" + std::to_string(::getpid()) + "_";
        for (int i = 0; i < 10000; ++i) {
            auto cand = base / (prefix + std::to_string(counter_++));
            std::error_code ec;
            if (std::filesystem::create_directory(cand, ec)) {
                path_ = cand;
                return;
            }
        }
        throw std::runtime_error("cannot create temp dir");
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir &) = delete;
    TempDir &operator=(const TempDir &) = delete;

    const std::filesystem::path &path() const { return path_; }
    std::string str(const std::string &rel = "") const {
        return rel.empty() ? path_.string() : (path_ / rel).string();
    }

  private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

} // namespace quanfuzz::testing

#endif
