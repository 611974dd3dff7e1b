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

namespace meskit {

/// Numerical thresholds shared by all modules. Defaults are the values every
/// test and the CLI use unless overridden on the command line.
struct Tolerances {
    double eq = 1e-9;           // operator / state equality (absolute)
    double herm = 1e-10;        // ||H - H^dagger||
    double invertible = 1e-8;   // |det g| of a SLOCC operator
    double generic = 1e-6;      // seed genericity a != +-b etc.
    double zero = 1e-7;         // measure-zero classifications (g = 0, x0 = 0, aligned)
    double feas = 1e-8;         // SEP / factorization residuals
    double tangle = 1e-9;       // normalized 3-tangle threshold
};

}  // namespace meskit
