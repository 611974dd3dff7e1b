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

#include "helpers.hpp"
#include "meskit/errors.hpp"
#include "meskit/lu3.hpp"

namespace meskit {
namespace {

// Cayley hyperdeterminant written out term by term.
double tangle_oracle(const StateVector& s) {
    const Eigen::VectorXcd v = s.amps / s.amps.norm();
    auto a = [&](int i, int j, int k) { return v[4 * i + 2 * j + k]; };
    const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) + a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                       a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) + a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
    const Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) + a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                       a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) + a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                       a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) + a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
    const Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) + a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

StateVector random_state3(Rng& rng) {
    Eigen::VectorXcd v(8);
    for (int i = 0; i < 8; ++i) v[i] = rng.complex_normal();
    return StateVector(3, v);
}

TEST(Classify3, GhzVector) {
    const Classification3 c = classify3(seed_vector(Seed3::GHZ));
    EXPECT_EQ(c.cls, Class3::GHZ);
    EXPECT_NEAR(c.tangle, 1.0, 1e-12);
    EXPECT_NEAR(c.tangle, tangle_oracle(seed_vector(Seed3::GHZ)), 1e-12);
}

TEST(Classify3, WVector) {
    const Classification3 c = classify3(seed_vector(Seed3::W));
    EXPECT_EQ(c.cls, Class3::W);
    EXPECT_NEAR(c.tangle, 0.0, 1e-15);
    for (double d : c.reduced_dets) EXPECT_GT(d, 1e-3);
}

TEST(Classify3, BiseparableCut) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
    v[0b000] = v[0b011] = 1.0;
    const Classification3 c = classify3(StateVector(3, v));
    EXPECT_EQ(c.cls, Class3::Biseparable);
    EXPECT_EQ(c.cut, "1|23");
}

TEST(Classify3, Product) { EXPECT_EQ(classify3(StateVector::basis(3, 6)).cls, Class3::Product); }

TEST(ThreeTangle, MatchesHyperdeterminantOracle) {
    Rng rng(31);
    for (int k = 0; k < 200; ++k) {
        const StateVector s = random_state3(rng);
        EXPECT_NEAR(three_tangle(s), tangle_oracle(s), 1e-12);
    }
}

TEST(ThreeTangle, LocalUnitaryInvariant) {
    Rng rng(32);
    for (int k = 0; k < 100; ++k) {
        const StateVector s = random_state3(rng);
        const Mat2 ops[] = {rng.haar_unitary(), rng.haar_unitary(), rng.haar_unitary()};
        EXPECT_NEAR(three_tangle(s), three_tangle(apply_product(ops, s)), 1e-12);
    }
}

TEST(Factor3, RoundTripsGhzClass) {
    Rng rng(33);
    for (int k = 0; k < 200; ++k) {
        const StateVector s = random_state3(rng);
        const FactoredState fs = factor3(s);
        EXPECT_TRUE(fs.is_ghz());
        EXPECT_TRUE(proportional_up_to_phase(realize(fs), s));
        EXPECT_NEAR(realize(fs).norm() / s.norm(), 1.0, 1e-9);
    }
}

TEST(Factor3, RoundTripsWClass) {
    Rng rng(34);
    for (int k = 0; k < 100; ++k) {
        const Mat2 id = identity2();
        FactoredState w{Seed3::W, {testing::random_invertible(rng), testing::random_invertible(rng), id}};
        const StateVector s = realize(w);
        const FactoredState fs = factor3(s);
        EXPECT_TRUE(fs.is_w());
        EXPECT_TRUE(proportional_up_to_phase(realize(fs), s));
    }
}

TEST(Factor3, RejectsBiseparable) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
    v[0b000] = v[0b011] = 1.0;
    try {
        factor3(StateVector(3, v));
        FAIL();
    } catch (const MeskitError& e) {
        EXPECT_EQ(e.code(), ErrorCode::WrongShape);
    }
}

TEST(LuEquivalent3, DetectsLocalUnitaries) {
    Rng rng(35);
    for (int k = 0; k < 100; ++k) {
        const StateVector s = random_state3(rng).normalized();
        const Mat2 ops[] = {rng.haar_unitary(), rng.haar_unitary(), rng.haar_unitary()};
        EXPECT_TRUE(lu_equivalent3(s, apply_product(ops, s)));
        EXPECT_FALSE(lu_equivalent3(s, random_state3(rng).normalized()));
    }
}

TEST(LuEquivalent3, WAndGhzDiffer) { EXPECT_FALSE(lu_equivalent3(seed_vector(Seed3::W).normalized(), seed_vector(Seed3::GHZ).normalized())); }

}  // namespace
}  // namespace meskit
