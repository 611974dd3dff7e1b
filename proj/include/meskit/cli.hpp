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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "meskit/json_io.hpp"
#include "meskit/tolerances.hpp"

namespace meskit::cli {

using io::json;

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kNo = 2,
    kRejected = 3,
    kInternal = 4,
};

const std::vector<std::string>& verbs();

struct Command {
    std::string verb;
    std::string input;   // path, "-" for stdin, or inline JSON
    std::string output;  // empty for stdout
    std::uint64_t seed = 1;
    int count = 100;
    int threads = 0;  // 0 picks hardware concurrency
    std::string spec;
    std::string sweep_verb;
    std::string format = "json";
    Tolerances tol;
};

struct Outcome {
    json result;
    int exit_code = kOk;
};

/// Runs one verb on already-parsed input. Throws MeskitError on rejected input.
Outcome execute(const Command& cmd, const std::optional<json>& input);

struct SweepInstanceResult {
    std::string verdict;
    double margin = 0.0;
    bool has_margin = false;
    std::string failure;  // nonempty on an internal-consistency failure
    std::string error;    // nonempty when the instance was rejected
};

/// Aggregated sweep report; the verdict histogram always sums to count.
json sweep(const std::string& verb, const std::string& spec, int count, std::uint64_t seed, const Tolerances& tol,
           int threads = 0);

/// Renders a result as indented "key: value" lines.
std::string summarize(const json& result);

/// Full command-line entry point; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace meskit::cli
