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

// Portable seeded randomness: mt19937_64 words turned into doubles by taking
// the top 53 bits, and normals by Box-Muller. Standard library distributions
// are avoided because their output differs across implementations.

#include <cstdint>
#include <random>

#include "meskit/qla.hpp"

namespace meskit {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int index(int n) { return static_cast<int>(uniform() * n); }
    double normal();
    Complex complex_normal() {
        const double re = normal();
        return {re, normal()};
    }

    /// Haar-distributed 2x2 unitary.
    Mat2 haar_unitary();
    /// Uniform in the closed ball of the given radius.
    Eigen::Vector3d ball(double radius);
    Eigen::Vector3d unit_vector();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace meskit
