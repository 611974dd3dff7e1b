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

// LOCC protocols as ordered measurement rounds. Each round has one measuring
// party, a POVM on that party, and per-outcome unitary corrections that every
// party applies after the outcome is broadcast.

#include <vector>

#include "meskit/states.hpp"

namespace meskit {

struct Povm {
    int party = 0;  // 0-based
    std::vector<Mat2> elements;
};

struct Round {
    Povm povm;
    /// corrections[k] holds one unitary per party for outcome k. Missing
    /// outcomes, or an empty list, mean "do nothing".
    std::vector<ProductOperator> corrections;
};

struct Protocol {
    FactoredState source;
    FactoredState target;
    std::vector<Round> rounds;
};

struct PovmCheck {
    bool complete = false;
    double residual = 0.0;  // max-abs entry of sum M^dagger M - 1
};

PovmCheck validate_povm(const Povm& povm, const Tolerances& tol = {});

struct BranchReport {
    std::vector<int> outcomes;
    double probability = 0.0;
    StateVector final_state;  // normalized
    double overlap = 0.0;     // |<final|target>| / norms
    bool matches_target = false;
};

struct SimulationReport {
    std::vector<BranchReport> branches;
    double total_probability = 0.0;
    double min_overlap = 1.0;
    double max_povm_residual = 0.0;
    bool deterministic = false;
};

/// Expands the full branch tree. Branches with vanishing probability are
/// dropped. Throws IncompletePovm or NonUnitaryCorrection.
SimulationReport simulate(const Protocol& protocol, const Tolerances& tol = {});

struct MonotoneReport {
    std::vector<double> source_norms;
    std::vector<double> target_norms;
    std::vector<int> decreased_parties;
    bool passes = true;
};

/// Per-party |g| of the normalized grams may not decrease from source to target.
MonotoneReport monotone_audit(const Protocol& protocol, const Tolerances& tol = {});

/// A correction list with `u` on the given parties and identity elsewhere.
ProductOperator correction_on(int n_parties, std::initializer_list<int> parties, const Mat2& u);

}  // namespace meskit
