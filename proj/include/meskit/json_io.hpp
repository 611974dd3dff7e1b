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

// JSON schema for every value the CLI reads or writes. Complex numbers are
// [re, im] pairs, 2x2 matrices are row-major nested arrays, and party indices
// in JSON are 1-based. Numbers are written with 17 significant digits.

#include <string>

#include <json.hpp>

#include "meskit/four_qubit.hpp"
#include "meskit/lu3.hpp"
#include "meskit/sep.hpp"
#include "meskit/three_qubit.hpp"

namespace meskit::io {

using json = nlohmann::json;

json to_json(Complex c);
json to_json(const Mat2& m);
json to_json(const PauliForm& p);
json to_json(const StateVector& s);
json to_json(const FactoredState& fs);
json to_json(const Protocol& pr);
json to_json(const GhzStandardForm& sf);
json to_json(const WStandardForm& sf);
json to_json(const Mes3Family& fam);
json to_json(const Mes3Verdict& v);
json to_json(const Classification3& c);
json to_json(const StandardForm4& sf);
json to_json(const SimulationReport& rep, bool include_states = false);
json to_json(const MonotoneReport& rep);
json to_json(const ReachabilityVerdict& v);
json to_json(const ConvertibilityVerdict& v);
json to_json(const SepCertificate& c);
json to_json(const SymmetryReport& r);

// Parsers throw MeskitError(InvalidInput) on schema violations.
Complex complex_from(const json& j);
Mat2 mat_from(const json& j);
StateVector state_from(const json& j);
FactoredState factored_from(const json& j);
Protocol protocol_from(const json& j);
GhzStandardForm ghz_form_from(const json& j);
WStandardForm w_form_from(const json& j);
Mes3Family family_from(const json& j);
SymmetryGroup group_from(const json& j, int n_parties);

std::string axis_name(int axis);

/// Deterministic text: object keys sorted, doubles as %.17g.
std::string dump(const json& j, int indent = 2);

json parse(const std::string& text);

}  // namespace meskit::io
