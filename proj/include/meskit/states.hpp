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

// Factored states: one invertible local operator per party acting on a seed
// (GHZ or W for three qubits, the generic G_abcd family for four qubits).

#include <variant>
#include <vector>

#include "meskit/qla.hpp"

namespace meskit {

/// Three-qubit SLOCC representatives, stored unnormalized:
/// GHZ = |000> + |111>, W = |001> + |010> + |100>.
enum class Seed3 { GHZ, W };

/// Generic four-qubit seed parameters (a, b, c, d).
struct SeedParams4 {
    Complex a{1.0};
    Complex b{0.0};
    Complex c{0.0};
    Complex d{0.0};

    std::array<Complex, 4> as_array() const { return {a, b, c, d}; }
    static SeedParams4 from_array(const std::array<Complex, 4>& v) { return {v[0], v[1], v[2], v[3]}; }
};

using Seed = std::variant<Seed3, SeedParams4>;

struct FactoredState {
    Seed seed;
    ProductOperator locals;

    int n_parties() const { return std::holds_alternative<Seed3>(seed) ? 3 : 4; }
    bool is_ghz() const { return std::holds_alternative<Seed3>(seed) && std::get<Seed3>(seed) == Seed3::GHZ; }
    bool is_w() const { return std::holds_alternative<Seed3>(seed) && std::get<Seed3>(seed) == Seed3::W; }
};

/// Smallest |x -+ y| over all pairs of seed parameters; the seed is generic
/// when this exceeds tol.generic.
double seed4_genericity_margin(const SeedParams4& p);
void validate_seed4(const SeedParams4& p, const Tolerances& tol = {});

/// The literal G_abcd superposition without the genericity check. Linear in
/// (a, b, c, d).
StateVector seed4_vector_unchecked(const SeedParams4& p);

StateVector seed_vector(const Seed& seed, const Tolerances& tol = {});

/// Throws SingularLocal on a non-invertible local and InvalidInput on a
/// party-count mismatch.
void validate_locals(const FactoredState& fs, const Tolerances& tol = {});

StateVector realize(const FactoredState& fs, const Tolerances& tol = {});

/// g^dagger g normalized to unit trace, as a Pauli form with c0 = 1/2.
PauliForm normalized_gram(const Mat2& g);
std::vector<PauliForm> gram(const FactoredState& fs);

/// Hermitian square root of 1/2 + bloch . sigma; its gram is that operator.
Mat2 local_from_bloch(const Eigen::Vector3d& bloch);

/// All single-party reductions have rank two (det above tol).
bool is_fully_entangled(const StateVector& state, double tol = 1e-9);

}  // namespace meskit
