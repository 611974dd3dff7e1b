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

// Three-qubit LU machinery: the 3-tangle, a generalized Schmidt canonical
// form used as an LU-equivalence oracle, and factoring a raw three-qubit
// vector back onto the GHZ or W seed.

#include <string>
#include <vector>

#include "meskit/states.hpp"

namespace meskit {

/// 4 |hyperdeterminant| of the normalized state; 1 for GHZ, 0 for W.
double three_tangle(const StateVector& state);

/// lambda_0 |000> + lambda_1 e^{i phi} |100> + lambda_2 |101> + lambda_3 |110> + lambda_4 |111>
/// for a normalized state. kappa carries lambda_1 lambda_2 lambda_3 lambda_4 e^{i phi}.
struct Lu3Canonical {
    std::array<double, 5> lambda{};
    Complex kappa{};
};

/// One candidate per root of det(x T0 + y T1) = 0 (two for GHZ class, one for W).
std::vector<Lu3Canonical> lu3_canonical_forms(const StateVector& state, const Tolerances& tol = {});

bool lu_equivalent3(const StateVector& a, const StateVector& b, double tol = 1e-8);

enum class Class3 { GHZ, W, Biseparable, Product };

struct Classification3 {
    Class3 cls = Class3::Product;
    double tangle = 0.0;
    std::array<double, 3> reduced_dets{};  // det of each single-party reduction
    std::string cut;                       // e.g. "1|23" for biseparable states
};

Classification3 classify3(const StateVector& state, const Tolerances& tol = {});

std::string class3_name(Class3 c);

/// Finds locals with realize(result) = state exactly (up to rounding).
/// Throws WrongShape unless the state is fully entangled.
FactoredState factor3(const StateVector& state, const Tolerances& tol = {});

}  // namespace meskit
