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

// Generic four-qubit states g |Psi_abcd>: LU standard form, LU equivalence,
// the Pauli-diagonal eta map, and the reachability / convertibility /
// isolation deciders with constructive witness protocols.

#include <array>
#include <optional>
#include <string>

#include "meskit/protocol.hpp"

namespace meskit {

/// An LU operator that maps every seed onto a seed: W |Psi(p)> = |Psi(M p)>.
struct SeedRelabeling {
    ProductOperator ops;
    Eigen::Matrix4cd action;
};

/// The group generated by seed relabelings (permutations and paired sign
/// flips of a, b, c, d), one representative per action up to a phase.
const std::vector<SeedRelabeling>& seed_relabeling_group();

/// Seed with unit norm, first coefficient real positive, coefficients in
/// descending magnitude; blochs after fixing the sigma_k^{(x)4} sign gauge.
struct StandardForm4 {
    SeedParams4 seed;
    std::array<Eigen::Vector3d, 4> blochs{};
};

StandardForm4 standard_form4(const FactoredState& fs, const Tolerances& tol = {});
FactoredState factored4(const StandardForm4& sf);

/// Largest componentwise difference between two standard forms.
double standard_form_distance(const StandardForm4& a, const StandardForm4& b);

bool lu_equivalent4(const FactoredState& a, const FactoredState& b, const Tolerances& tol = {});

/// (eta_0, eta_1, eta_2, eta_3) with eta_0 = sum p and eta_i = p0 + p_i - p_j - p_k.
std::array<double, 4> eta_values(const std::array<double, 4>& p);

/// Throws BadProbabilities unless p is a probability vector.
void validate_probabilities(const std::array<double, 4>& p, const Tolerances& tol = {});

/// sum_k p_k sigma_k H sigma_k, computed in the Pauli basis.
PauliForm eta_map(const PauliForm& H, const std::array<double, 4>& p, const Tolerances& tol = {});

/// Max-abs entry of (h1 h2^T) (Hadamard) (N1 - N2) below tol.eq.
bool hadamard_condition(const Eigen::Vector3d& h1, const Eigen::Vector3d& h2, const std::array<double, 4>& p,
                        const Tolerances& tol = {});

enum class ReachCase { None, TrivialTriple, AlignedAxis };
std::string reach_case_name(ReachCase c);

struct ReachabilityVerdict {
    bool reachable = false;
    ReachCase reach_case = ReachCase::None;
    int axis = -1;   // 0, 1, 2 for x, y, z
    int party = -1;  // distinguished party, 0-based
    double margin = 0.0;
    StandardForm4 form;
    std::optional<Protocol> witness;
};

struct ConvertibilityVerdict {
    bool convertible = false;
    int axis = -1;
    int party = -1;
    double margin = 0.0;
    double p = 0.0;  // weight of the first POVM outcome in the witness
    StandardForm4 form;
    std::optional<Protocol> witness;
};

/// Smallest classification quantity (bloch norm or off-axis norm) that was
/// judged nonzero; large values mean the verdict is far from a boundary.
double decision_margin4(const StandardForm4& sf, const Tolerances& tol = {});

ReachabilityVerdict reachable4(const FactoredState& h, const Tolerances& tol = {});
ReachabilityVerdict reachable4(const StandardForm4& h, const Tolerances& tol = {});
ConvertibilityVerdict convertible4(const FactoredState& g, const Tolerances& tol = {});
ConvertibilityVerdict convertible4(const StandardForm4& g, const Tolerances& tol = {});
bool isolated4(const FactoredState& fs, const Tolerances& tol = {});

/// Margin of the radius cap used by convertible4 witnesses.
inline constexpr double kWitnessMargin = 1e-3;

}  // namespace meskit
