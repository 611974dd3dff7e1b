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

#include "meskit/states.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "meskit/errors.hpp"

namespace meskit {

double seed4_genericity_margin(const SeedParams4& p) {
    const auto v = p.as_array();
    double margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            margin = std::min({margin, std::abs(v[i] - v[j]), std::abs(v[i] + v[j])});
        }
    }
    return margin;
}

void validate_seed4(const SeedParams4& p, const Tolerances& tol) {
    for (const Complex& x : p.as_array()) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            throw MeskitError(ErrorCode::InvalidInput, "non-finite seed parameter");
        }
    }
    const double margin = seed4_genericity_margin(p);
    if (margin <= tol.generic) {
        throw MeskitError(ErrorCode::DegenerateSeed,
                          "seed parameters are not generic (min |x -+ y| = " + std::to_string(margin) + ")");
    }
}

StateVector seed4_vector_unchecked(const SeedParams4& p) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
    const Complex ad_p = 0.5 * (p.a + p.d), ad_m = 0.5 * (p.a - p.d);
    const Complex bc_p = 0.5 * (p.b + p.c), bc_m = 0.5 * (p.b - p.c);
    v[0b0000] = ad_p;
    v[0b1111] = ad_p;
    v[0b0011] = ad_m;
    v[0b1100] = ad_m;
    v[0b0101] = bc_p;
    v[0b1010] = bc_p;
    v[0b0110] = bc_m;
    v[0b1001] = bc_m;
    return StateVector(4, std::move(v));
}

StateVector seed_vector(const Seed& seed, const Tolerances& tol) {
    if (const auto* s3 = std::get_if<Seed3>(&seed)) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
        if (*s3 == Seed3::GHZ) {
            v[0b000] = 1.0;
            v[0b111] = 1.0;
        } else {
            v[0b001] = 1.0;
            v[0b010] = 1.0;
            v[0b100] = 1.0;
        }
        return StateVector(3, std::move(v));
    }
    const auto& p = std::get<SeedParams4>(seed);
    validate_seed4(p, tol);
    return seed4_vector_unchecked(p);
}

void validate_locals(const FactoredState& fs, const Tolerances& tol) {
    if (static_cast<int>(fs.locals.size()) != fs.n_parties()) {
        throw MeskitError(ErrorCode::InvalidInput, "expected " + std::to_string(fs.n_parties()) +
                                                       " local operators, got " + std::to_string(fs.locals.size()));
    }
    for (size_t k = 0; k < fs.locals.size(); ++k) {
        if (!fs.locals[k].allFinite()) throw MeskitError(ErrorCode::InvalidInput, "non-finite local operator");
        if (std::abs(fs.locals[k].determinant()) <= tol.invertible) {
            throw MeskitError(ErrorCode::SingularLocal, "local operator of party " + std::to_string(k + 1) +
                                                            " is not invertible");
        }
    }
}

StateVector realize(const FactoredState& fs, const Tolerances& tol) {
    validate_locals(fs, tol);
    return apply_product(fs.locals, seed_vector(fs.seed, tol));
}

PauliForm normalized_gram(const Mat2& g) {
    Mat2 G = g.adjoint() * g;
    G /= G.trace().real();
    // g^dagger g is Hermitian by construction; decompose without the check.
    PauliForm p;
    p.c0 = 0.5;
    p.g[0] = G(0, 1).real();
    p.g[1] = -G(0, 1).imag();
    p.g[2] = 0.5 * (G(0, 0).real() - G(1, 1).real());
    return p;
}

std::vector<PauliForm> gram(const FactoredState& fs) {
    std::vector<PauliForm> out;
    out.reserve(fs.locals.size());
    for (const auto& g : fs.locals) out.push_back(normalized_gram(g));
    return out;
}

Mat2 local_from_bloch(const Eigen::Vector3d& bloch) {
    PauliForm p{0.5, bloch};
    return sqrt_psd(p.matrix());
}

bool is_fully_entangled(const StateVector& state, double tol) {
    for (int k = 0; k < state.n_parties; ++k) {
        if (std::abs(reduced_density(state, k).determinant()) <= tol) return false;
    }
    return true;
}

}  // namespace meskit
