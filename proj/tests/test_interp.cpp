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

#include <cmath>
#include <cstdlib>

#include <catch2/catch_amalgamated.hpp>

#include "quanfuzz/analysis/sensitivity.hpp"
#include "quanfuzz/dsl/parser.hpp"
#include "quanfuzz/interp/interpreter.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace quanfuzz;
using namespace quanfuzz::interp;
using core::StateVector;
namespace qt = quanfuzz::testing;

namespace {

struct Fixture {
    dsl::Program program;
    analysis::SensitivityReport report;
};

Fixture load(const std::string &text) {
    Fixture f;
    f.program = dsl::parse(text);
    f.report = analysis::extract_sensitive(f.program);
    return f;
}

Fixture motivating() {
    Fixture f;
    f.program = dsl::parse_file(qt::fixture_path("motivating.qpl"));
    f.report = analysis::extract_sensitive(f.program);
    return f;
}

} // namespace

TEST_CASE("run_to_measurement: uniform ket before the guarded branch") {
    Fixture f = motivating();
    REQUIRE(f.report.sites.size() == 1);

    StateVector ket = run_to_measurement(f.program, core::basis_state(5, 0),
                                         f.report.sites[0]);
    REQUIRE(ket.size() == 32);
    const double expected = 1.0 / std::sqrt(32.0);
    for (const core::Amp &a : ket.amps) {
        CHECK(std::abs(a.real() - expected) < 1e-12);
        CHECK(std::abs(a.imag()) < 1e-12);
    }
}

TEST_CASE("weight_analysis: motivating weight is 1/32") {
    Fixture f = motivating();
    double w = weight_analysis(f.program, core::basis_state(5, 0),
                               f.report.sites[0]);
    CHECK(std::abs(w - 0.03125) < 1e-12);
}

TEST_CASE("run_to_measurement: indexed gate against the dense oracle") {
    Fixture f = load("procedure t(){ qureg q[5]; X(q[4]); "
                     "if (measure(q)==5){ print \"hit\"; } }");
    // |00100> with X on the last qubit becomes |00101>, basis index 5.
    StateVector ket = run_to_measurement(f.program, core::basis_state(5, 4),
                                         f.report.sites[0]);
    CHECK(std::abs(ket.amps[5] - core::Amp(1.0, 0.0)) < 1e-12);

    StateVector expect = oracle::kron_apply(core::basis_state(5, 4),
                                            core::GateKind::X, 4);
    REQUIRE(expect.size() == ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i) {
        CHECK(std::abs(ket.amps[i] - expect.amps[i]) < 1e-12);
    }
    CHECK(std::abs(weight_analysis(f.program, core::basis_state(5, 4),
                                   f.report.sites[0]) -
                   1.0) < 1e-12);
}

TEST_CASE("weight_analysis: Mix twice undoes itself") {
    Fixture f = load("procedure t(){ qureg q[3]; Mix(q); Mix(q); "
                     "if (measure(q)==5){ print \"hit\"; } }");
    double w = weight_analysis(f.program, core::basis_state(3, 0),
                               f.report.sites[0]);
    CHECK(std::abs(w) < 1e-12); // double Mix of |000> is |000> again
    double w0 = weight_analysis(f.program, core::basis_state(3, 5),
                                f.report.sites[0]);
    CHECK(std::abs(w0 - 1.0) < 1e-12);
}

TEST_CASE("weight_analysis: no gates means the input decides") {
    Fixture f = load("procedure t(){ qureg q[5]; "
                     "if (measure(q)==5){ print \"hit\"; } }");
    CHECK(std::abs(weight_analysis(f.program, core::basis_state(5, 5),
                                   f.report.sites[0]) -
                   1.0) < 1e-12);
    CHECK(std::abs(weight_analysis(f.program, core::basis_state(5, 6),
                                   f.report.sites[0])) < 1e-12);
}

TEST_CASE("weight_analysis: agrees with the exhaustive oracle") {
    const std::string programs[] = {
        "procedure t(){ qureg q[3]; H(q[0]); T(q[1]); X(q[2]); "
        "if (measure(q)==3){ print \"x\"; } }",
        "procedure t(){ qureg q[2]; Mix(q); S(q[0]); H(q[1]); "
        "if (measure(q)==2){ print \"x\"; } }",
        "procedure t(){ qureg q[4]; Mix(q); Y(q[2]); Z(q); "
        "if (measure(q)==9){ print \"x\"; } }",
    };
    Rng rng(20260814);
    for (const std::string &text : programs) {
        Fixture f = load(text);
        int n = f.report.register_width;
        for (int rep = 0; rep < 25; ++rep) {
            StateVector init = core::random_state(n, rng);
            double fast =
                weight_analysis(f.program, init, f.report.sites[0]);
            double slow =
                oracle::exhaustive_weight(f.program, init,
                                          f.report.sites[0]);
            CHECK(std::abs(fast - slow) < 1e-12);
        }
    }
}

TEST_CASE("run_to_measurement: site behind a measurement is unsupported") {
    Fixture f = load("procedure t(){ qureg q[2]; Mix(q); "
                     "if (measure(q)==1){ print \"a\"; } "
                     "if (measure(q)==2){ print \"b\"; } }");
    REQUIRE(f.report.sites.size() == 2);
    CHECK_NOTHROW(run_to_measurement(f.program, core::basis_state(2, 0),
                                     f.report.sites[0]));
    CHECK_THROWS_AS(run_to_measurement(f.program, core::basis_state(2, 0),
                                       f.report.sites[1]),
                    UnsupportedProgram);

    Fixture nested = load("procedure t(){ qureg q[2]; "
                          "if (measure(q)==1){ "
                          "if (measure(q)==2){ print \"n\"; } } }");
    REQUIRE(nested.report.sites.size() == 2);
    CHECK_THROWS_AS(run_to_measurement(nested.program,
                                       core::basis_state(2, 0),
                                       nested.report.sites[1]),
                    UnsupportedProgram);
}

TEST_CASE("run_to_measurement: width mismatch is invalid_argument") {
    Fixture f = motivating();
    CHECK_THROWS_AS(run_to_measurement(f.program, core::basis_state(3, 0),
                                       f.report.sites[0]),
                    std::invalid_argument);
    CHECK_THROWS_AS(weight_analysis(f.program, core::basis_state(6, 0),
                                    f.report.sites[0]),
                    std::invalid_argument);
}

TEST_CASE("execute_sampled: deterministic collapse on a basis state") {
    // No superposition: the measurement must read 5 every time and take
    // the then branch into the planted division by zero.
    Fixture f = load("procedure t(){ qureg q[5]; "
                     "if (measure(q)==5){ print \"crash\"; int i=1/0; } "
                     "print \"safe\"; }");
    Rng rng(1);
    ExecutionTrace t =
        execute_sampled(f.program, core::basis_state(5, 5), rng);
    REQUIRE(t.measurement_results.size() == 1);
    CHECK(t.measurement_results[0].first == 0);
    CHECK(t.measurement_results[0].second == 5);
    REQUIRE(t.crash.has_value());
    CHECK(t.crash->kind == CrashKind::DivisionByZero);
    CHECK(t.crash->span.line >= 1);
    REQUIRE(t.log.size() == 1);
    CHECK(t.log[0] == "crash");

    // Crash halts execution: neither "safe" nor the exit branch.
    CHECK(t.branches_taken ==
          std::set<int>{f.report.sites[0].then_branch_id});
}

TEST_CASE("execute_sampled: else path reaches program exit") {
    Fixture f = load("procedure t(){ qureg q[5]; "
                     "if (measure(q)==5){ print \"crash\"; int i=1/0; } "
                     "print \"safe\"; }");
    Rng rng(1);
    ExecutionTrace t =
        execute_sampled(f.program, core::basis_state(5, 9), rng);
    CHECK_FALSE(t.crash.has_value());
    REQUIRE(t.log.size() == 1);
    CHECK(t.log[0] == "safe");
    CHECK(t.branches_taken ==
          std::set<int>{f.report.sites[0].else_branch_id,
                        f.report.exit_branch_id()});
}

TEST_CASE("execute_sampled: else block runs and logs") {
    Fixture f = load("procedure t(){ qureg q[2]; "
                     "if (measure(q)==3){ print \"a\"; } "
                     "else { print \"b\"; print \"c\"; } }");
    Rng rng(7);
    ExecutionTrace t =
        execute_sampled(f.program, core::basis_state(2, 0), rng);
    CHECK(t.log == std::vector<std::string>{"b", "c"});
    CHECK(t.branches_taken.count(f.report.sites[0].else_branch_id) == 1);
}

TEST_CASE("execute_sampled: measurement collapses the register") {
    // After measuring, a second measurement of the same register must
    // reproduce the first outcome.
    Fixture f = load("procedure t(){ qureg q[3]; Mix(q); "
                     "if (measure(q)==2){ print \"a\"; } "
                     "if (measure(q)==2){ print \"b\"; } }");
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        ExecutionTrace t =
            execute_sampled(f.program, core::basis_state(3, 0), rng);
        REQUIRE(t.measurement_results.size() == 2);
        CHECK(t.measurement_results[0].second ==
              t.measurement_results[1].second);
        // Both sites branch the same way.
        bool hit0 = t.branches_taken.count(0) == 1;
        bool hit2 = t.branches_taken.count(2) == 1;
        CHECK(hit0 == hit2);
    }
}

TEST_CASE("execute_sampled: then frequency tracks the weight") {
    Fixture f = motivating();
    const int trials = 10000;
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(99, static_cast<std::uint64_t>(t)));
        ExecutionTrace trace =
            execute_sampled(f.program, core::basis_state(5, 0), rng);
        if (trace.crash.has_value()) {
            ++hits;
        }
    }
    double freq = static_cast<double>(hits) / trials;
    // Bernoulli(1/32): three sigmas around the mean.
    double sigma = std::sqrt(0.03125 * (1 - 0.03125) / trials);
    CHECK(std::abs(freq - 0.03125) < 3 * sigma + 1e-9);
}

TEST_CASE("execute_sampled: deterministic for a fixed rng seed") {
    Fixture f = motivating();
    Rng a(42);
    Rng b(42);
    ExecutionTrace ta =
        execute_sampled(f.program, core::basis_state(5, 0), a);
    ExecutionTrace tb =
        execute_sampled(f.program, core::basis_state(5, 0), b);
    CHECK(ta.branches_taken == tb.branches_taken);
    CHECK(ta.measurement_results == tb.measurement_results);
    CHECK(ta.log == tb.log);
    CHECK(ta.crash.has_value() == tb.crash.has_value());
}

TEST_CASE("execute_sampled: width mismatch throws") {
    Fixture f = motivating();
    Rng rng(3);
    CHECK_THROWS_AS(execute_sampled(f.program, core::basis_state(2, 0), rng),
                    std::invalid_argument);
}

TEST_CASE("coverage: program without measurements covers everything") {
    Fixture f = load("procedure t(){ qureg q[2]; H(q); print \"x\"; }");
    CoverageReport r =
        coverage(f.program, core::basis_state(2, 0), 10, 123);
    CHECK(r.trials == 10);
    CHECK(r.covered == std::set<int>{f.report.exit_branch_id()});
    CHECK(r.coverage_ratio == 1.0);
    CHECK(r.crashes == 0);
    CHECK(r.sensitive_hit_frequency.empty());
}

TEST_CASE("coverage: default input rarely finds the motivating branch") {
    Fixture f = motivating();
    CoverageReport r =
        coverage(f.program, core::basis_state(5, 0), 10, 2026);
    CHECK(r.trials == 10);
    REQUIRE(r.sensitive_hit_frequency.size() == 1);
    // 10 trials at p = 1/32: then-branch hits are possible but the else
    // branch and the exit are all but certain.
    CHECK(r.covered.count(f.report.sites[0].else_branch_id) == 1);
    CHECK(r.covered.count(f.report.exit_branch_id()) == 1);
    double expected_ratio =
        static_cast<double>(r.covered.size()) / f.report.universe_size();
    CHECK(std::abs(r.coverage_ratio - expected_ratio) < 1e-12);
    CHECK(r.crashes ==
          static_cast<int>(r.sensitive_hit_frequency[0] * 10 + 0.5));
}

TEST_CASE("coverage: a deterministic hit crashes every trial") {
    // Without a Mix the basis input |00101> pins the measurement to 5.
    Fixture direct = load("procedure t(){ qureg q[5]; "
                          "if (measure(q)==5){ print \"crash\"; int i=1/0; } "
                          "print \"safe\"; }");
    CoverageReport r =
        coverage(direct.program, core::basis_state(5, 5), 10, 77);
    CHECK(r.crashes == 10);
    REQUIRE(r.sensitive_hit_frequency.size() == 1);
    CHECK(r.sensitive_hit_frequency[0] == 1.0);
    // Crash halts each trial: only the then branch is ever seen.
    CHECK(r.covered == std::set<int>{direct.report.sites[0].then_branch_id});
    CHECK(std::abs(r.coverage_ratio - 1.0 / 3.0) < 1e-12);
}

TEST_CASE("coverage: trials are independent of aggregation order") {
    Fixture f = motivating();
    CoverageReport once =
        coverage(f.program, core::basis_state(5, 0), 40, 5);
    CoverageReport again =
        coverage(f.program, core::basis_state(5, 0), 40, 5);
    CHECK(once.covered == again.covered);
    CHECK(once.crashes == again.crashes);
    CHECK(once.sensitive_hit_frequency == again.sensitive_hit_frequency);

    // Trial t is seeded with derive(seed, t), so a manual loop over
    // execute_sampled reproduces the aggregate exactly.
    int crashes = 0;
    for (int t = 0; t < 40; ++t) {
        Rng rng(Rng::derive(5, static_cast<std::uint64_t>(t)));
        ExecutionTrace trace =
            execute_sampled(f.program, core::basis_state(5, 0), rng);
        if (trace.crash.has_value()) {
            ++crashes;
        }
    }
    CHECK(crashes == once.crashes);
}

TEST_CASE("coverage: hit frequency approximates the analytic weight") {
    Fixture f = load("procedure t(){ qureg q[2]; H(q[0]); "
                     "if (measure(q)==0){ print \"z\"; } }");
    // Weight of outcome 0 is 1/2.
    CoverageReport r =
        coverage(f.program, core::basis_state(2, 0), 4000, 31);
    REQUIRE(r.sensitive_hit_frequency.size() == 1);
    double sigma = std::sqrt(0.5 * 0.5 / 4000);
    CHECK(std::abs(r.sensitive_hit_frequency[0] - 0.5) < 3 * sigma + 1e-9);
}
