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

// Random instance generators for sweeps and property tests. Every generator
// is deterministic given the seed.

#include <string>
#include <vector>

#include "meskit/protocol.hpp"
#include "meskit/rng.hpp"

namespace meskit {

/// Margin kept between sampled bloch vectors and the boundary |g| = 1/2.
inline constexpr double kSampleMargin = 0.01;

/// 3q-ghz, 3q-ghz-mes, 3q-ghz-random-z, 3q-w, 3q-w-x0zero, 3q-mes-family,
/// 4q-generic, 4q-thm3-shape, 4q-thm2-case1, 4q-thm2-case2, 4q-aligned.
const std::vector<std::string>& sampler_specs();

/// ghz-z, ghz-trivial, w-x0, nonisolation, thm2-case1, thm2-case2, thm3.
const std::vector<std::string>& protocol_families();

/// U sqrt(1/2 + g.sigma) with g uniform in the ball of radius 1/2 - margin
/// and U Haar random.
Mat2 random_local(Rng& rng, double margin = kSampleMargin);

/// Gaussian seed parameters, redrawn until generic.
SeedParams4 random_seed4(Rng& rng, const Tolerances& tol = {});

/// Throws BadSpec for unknown specs.
FactoredState sample_one(const std::string& spec, Rng& rng, const Tolerances& tol = {});
std::vector<FactoredState> sample(const std::string& spec, int count, std::uint64_t seed, const Tolerances& tol = {});

/// A synthesized protocol of the given family with a random target.
Protocol sample_protocol(const std::string& family, Rng& rng, const Tolerances& tol = {});

}  // namespace meskit
