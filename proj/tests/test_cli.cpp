// Copyright 2026 The meskit Authors
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "helpers.hpp"
#include "meskit/cli.hpp"
#include "meskit/json_io.hpp"
#include "meskit/sampling.hpp"
#include "meskit/three_qubit.hpp"

namespace meskit {
namespace {

using io::json;

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = cli::kOk) {
    const CliRun r = run(std::move(args));
    EXPECT_EQ(r.code, expected_code) << r.err;
    return json::parse(r.out);
}

std::string inline_json(const json& j) { return io::dump(j, 0); }

std::string sampled(const std::string& spec, std::uint64_t seed) {
    Rng rng(seed);
    return inline_json(io::to_json(sample_one(spec, rng)));
}

TEST(Cli, Classify3Examples) {
    EXPECT_EQ(run_json({"classify3", "-i", R"({"amplitudes": [1,0,0,0,0,0,0,1]})"})["class"], "GHZ");
    EXPECT_EQ(run_json({"classify3", "-i", "[0,1,1,0,1,0,0,0]"})["class"], "W");
    const json bisep = run_json({"classify3", "-i", "[1,0,0,1,0,0,0,0]"});
    EXPECT_EQ(bisep["class"], "biseparable");
    EXPECT_EQ(bisep["cut"], "1|23");
}

TEST(Cli, StandardFormRoundTripsThroughParsers) {
    const json ghz = run_json({"standard-form", "-i", sampled("3q-ghz", 1)});
    EXPECT_EQ(ghz["class"], "GHZ");
    EXPECT_NO_THROW(io::ghz_form_from(ghz));
    const json w = run_json({"standard-form", "-i", sampled("3q-w", 2)});
    EXPECT_NO_THROW(io::w_form_from(w));
    const json g4 = run_json({"standard-form", "-i", sampled("4q-generic", 3)});
    EXPECT_EQ(g4["blochs"].size(), 4u);
}

TEST(Cli, Mes3ExitCodes) {
    const json in = run_json({"mes3", "-i", sampled("3q-ghz-mes", 4)});
    EXPECT_TRUE(in["in_mes"].get<bool>());
    EXPECT_NO_THROW(io::family_from(in["family"]));
    const json out = run_json({"mes3", "-i", sampled("3q-ghz-random-z", 5)}, cli::kNo);
    EXPECT_FALSE(out["in_mes"].get<bool>());
}

TEST(Cli, FourQubitVerdicts) {
    const std::string generic = sampled("4q-generic", 6);
    EXPECT_TRUE(run_json({"isolated4", "-i", generic})["isolated"].get<bool>());
    EXPECT_TRUE(run_json({"mes4", "-i", generic})["in_mes"].get<bool>());
    run_json({"reachable4", "-i", generic}, cli::kNo);
    run_json({"convertible4", "-i", generic}, cli::kNo);
    const json r = run_json({"reachable4", "-i", sampled("4q-thm2-case2", 7)});
    EXPECT_EQ(r["case"], reach_case_name(ReachCase::AlignedAxis));
    const Protocol w = io::protocol_from(r["witness"]);
    EXPECT_TRUE(simulate(w).deterministic);
    run_json({"isolated4", "-i", sampled("4q-thm3-shape", 8)}, cli::kNo);
}

TEST(Cli, SynthThenSimulate) {
    for (const std::string& family : protocol_families()) {
        const CliRun synth = run({"synth", "--spec", family, "--seed", "9"});
        ASSERT_EQ(synth.code, cli::kOk) << synth.err;
        EXPECT_NO_THROW(io::protocol_from(json::parse(synth.out)));
        const json sim = run_json({"simulate", "-i", synth.out});
        EXPECT_TRUE(sim["deterministic"].get<bool>()) << family;
    }
}

TEST(Cli, SynthFromTargets) {
    const json ghz = run_json({"synth", "-i", R"({"family": "ghz-z", "target": {"gx": [0.1, 0.2, 0.3], "z": [1.5, 0.5]}})"});
    EXPECT_TRUE(simulate(io::protocol_from(ghz)).deterministic);
    const json w = run_json({"synth", "-i", R"({"family": "w-x0", "target": {"x": [0.5, 1, 1, 1]}})"});
    EXPECT_TRUE(simulate(io::protocol_from(w)).deterministic);
    const CliRun mes = run({"synth", "-i", R"({"family": "ghz-z", "target": {"gx": [0.1, 0.2, 0.3]}})"});
    EXPECT_EQ(mes.code, cli::kRejected);
}

TEST(Cli, SepCheck) {
    Rng rng(10);
    const Protocol pr = sample_protocol("thm2-case2", rng);
    const json both = {{"source", io::to_json(pr.source)}, {"target", io::to_json(pr.target)}};
    const json c = run_json({"sep-check", "-i", inline_json(both)});
    EXPECT_TRUE(c["feasible"].get<bool>());
    EXPECT_FALSE(c["degenerate"].get<bool>());
    const json f = run_json({"sep-check", "-i", inline_json(json{{"target", io::to_json(pr.target)}})});
    EXPECT_TRUE(f["found"].get<bool>());
    run_json({"sep-check", "-i", inline_json(json{{"target", json::parse(sampled("4q-generic", 11))}})}, cli::kNo);
}

TEST(Cli, SampleIsDeterministic) {
    const CliRun a = run({"sample", "--spec", "4q-generic", "--count", "20", "--seed", "7"});
    const CliRun b = run({"sample", "--spec", "4q-generic", "--count", "20", "--seed", "7"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const json j = json::parse(a.out);
    EXPECT_EQ(j["states"].size(), 20u);
    for (const json& s : j["states"]) EXPECT_NO_THROW(io::factored_from(s));
}

TEST(Cli, SweepExamples) {
    const json iso = run_json({"sweep", "--verb", "isolated4", "--spec", "4q-generic", "--count", "1000"});
    EXPECT_EQ(iso["fractions"]["isolated"].get<double>(), 1.0);
    const json mes = run_json({"sweep", "--verb", "mes3", "--spec", "3q-ghz-random-z", "--count", "1000"});
    EXPECT_EQ(mes["fractions"].value("in_mes", 0.0), 0.0);
    const json sim = run_json({"sweep", "--verb", "simulate", "--spec", "all", "--count", "500"});
    EXPECT_EQ(sim["fractions"]["deterministic"].get<double>(), 1.0);
    int total = 0;
    for (const auto& [k, v] : sim["histogram"].items()) total += v.get<int>();
    EXPECT_EQ(total, 500);
}

TEST(Cli, SweepIsIndependentOfThreadCount) {
    const std::vector<std::string> base = {"sweep", "--verb", "reachable4", "--spec", "4q-thm2-case2", "--count", "64"};
    auto with = [&](const char* t) {
        auto args = base;
        args.insert(args.end(), {"--threads", t});
        return run(args);
    };
    const CliRun one = with("1");
    const CliRun many = with("8");
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, many.out);
}

TEST(Cli, SweepConsistencyChecks) {
    for (const char* verb : {"standard-form", "sep-check", "convertible4"}) {
        const CliRun r = run({"sweep", "--verb", verb, "--spec", "4q-thm3-shape", "--count", "50"});
        EXPECT_EQ(r.code, cli::kOk) << verb << r.out;
    }
    const CliRun r = run({"sweep", "--verb", "mes3", "--spec", "3q-mes-family", "--count", "50"});
    EXPECT_EQ(r.code, cli::kOk) << r.out;
}

TEST(Cli, RejectedInputs) {
    EXPECT_EQ(run({"bogus"}).code, cli::kRejected);
    EXPECT_EQ(run({"classify3"}).code, cli::kRejected);
    EXPECT_EQ(run({"classify3", "-i", "{broken"}).code, cli::kRejected);
    EXPECT_EQ(run({"classify3", "-i", "/nonexistent/file.json"}).code, cli::kRejected);
    EXPECT_EQ(run({"sample", "--spec", "9q", "--count", "1"}).code, cli::kRejected);
    EXPECT_EQ(run({"sweep", "--verb", "sample", "--spec", "4q-generic"}).code, cli::kRejected);
    EXPECT_EQ(run({"mes3", "-i", "[1, 0]"}).code, cli::kRejected);
    EXPECT_EQ(run({"classify3", "--tol-eq", "-1", "-i", "[1,0,0,0,0,0,0,1]"}).code, cli::kRejected);
}

TEST(Cli, ToleranceEnvironment) {
    ::setenv("MESKIT_TOL_EQ", "junk", 1);
    EXPECT_EQ(run({"classify3", "-i", "[1,0,0,0,0,0,0,1]"}).code, cli::kRejected);
    ::setenv("MESKIT_TOL_EQ", "1e-8", 1);
    EXPECT_EQ(run({"classify3", "-i", "[1,0,0,0,0,0,0,1]"}).code, cli::kOk);
    ::unsetenv("MESKIT_TOL_EQ");
}

TEST(Cli, SummaryFormat) {
    const CliRun r = run({"classify3", "-i", "[1,0,0,0,0,0,0,1]", "--format", "summary"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("class: \"GHZ\""), std::string::npos);
}

TEST(Cli, OutputIsByteIdentical) {
    const std::string in = sampled("4q-thm2-case1", 12);
    EXPECT_EQ(run({"reachable4", "-i", in}).out, run({"reachable4", "-i", in}).out);
}

}  // namespace
}  // namespace meskit
