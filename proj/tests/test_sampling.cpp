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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "meskit/errors.hpp"
#include "meskit/four_qubit.hpp"
#include "meskit/sampling.hpp"
#include "meskit/three_qubit.hpp"

namespace meskit {
namespace {

TEST(Rng, UniformUsesTop53Bits) {
    Rng rng(2026);
    std::mt19937_64 ref(2026);
    for (int k = 0; k < 1000; ++k) EXPECT_EQ(rng.uniform(), static_cast<double>(ref() >> 11) / 9007199254740992.0);
}

TEST(Rng, NormalMoments) {
    Rng rng(3);
    double s = 0.0;
    double s2 = 0.0;
    const int n = 200000;
    for (int k = 0; k < n; ++k) {
        const double x = rng.normal();
        s += x;
        s2 += x * x;
    }
    EXPECT_NEAR(s / n, 0.0, 0.01);
    EXPECT_NEAR(s2 / n, 1.0, 0.02);
}

TEST(Rng, HaarUnitaryAndBall) {
    Rng rng(4);
    for (int k = 0; k < 1000; ++k) {
        EXPECT_TRUE(is_unitary(rng.haar_unitary(), 1e-12));
        EXPECT_LE(rng.ball(0.3).norm(), 0.3);
        EXPECT_NEAR(rng.unit_vector().norm(), 1.0, 1e-12);
    }
}

TEST(Sample, ReproducibleGivenSeed) {
    const auto a = sample("4q-generic", 50, 7);
    const auto b = sample("4q-generic", 50, 7);
    const auto c = sample("4q-generic", 50, 8);
    ASSERT_EQ(a.size(), 50u);
    for (size_t i = 0; i < a.size(); ++i) {
        for (int p = 0; p < 4; ++p) EXPECT_EQ(max_abs(a[i].locals[p] - b[i].locals[p]), 0.0);
    }
    EXPECT_GT(max_abs(a[0].locals[0] - c[0].locals[0]), 0.0);
}

TEST(Sample, GenericStatesAreValid) {
    Tolerances tol;
    for (const FactoredState& fs : sample("4q-generic", 1000, 7)) {
        EXPECT_NO_THROW(validate_locals(fs));
        EXPECT_GT(seed4_genericity_margin(std::get<SeedParams4>(fs.seed)), tol.generic);
        for (const PauliForm& g : gram(fs)) EXPECT_LE(g.g.norm(), 0.5 - kSampleMargin + 1e-12);
    }
}

TEST(Sample, Thm3ShapesAreConvertible) {
    for (const FactoredState& fs : sample("4q-thm3-shape", 100, 11)) EXPECT_TRUE(convertible4(fs).convertible);
}

TEST(Sample, Wx0ZeroStatesAreInMes) {
    for (const FactoredState& fs : sample("3q-w-x0zero", 100, 12)) EXPECT_TRUE(is_in_mes3(fs).in_mes);
}

TEST(Sample, EverySpecProducesStates) {
    for (const std::string& spec : sampler_specs()) {
        const auto states = sample(spec, 5, 13);
        EXPECT_EQ(states.size(), 5u) << spec;
        for (const FactoredState& fs : states) EXPECT_TRUE(is_fully_entangled(realize(fs))) << spec;
    }
}

TEST(Sample, RejectsUnknownSpecAndCount) {
    EXPECT_THROW(sample("5q-generic", 1, 1), MeskitError);
    EXPECT_THROW(sample("4q-generic", 0, 1), MeskitError);
    Rng rng(1);
    try {
        sample_protocol("nope", rng);
        FAIL();
    } catch (const MeskitError& e) {
        EXPECT_EQ(e.code(), ErrorCode::BadSpec);
    }
}

TEST(SampleProtocol, EveryFamilySimulates) {
    Rng rng(14);
    for (const std::string& family : protocol_families()) {
        for (int k = 0; k < 20; ++k) EXPECT_TRUE(simulate(sample_protocol(family, rng)).deterministic) << family;
    }
}

}  // namespace
}  // namespace meskit
