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
#include "meskit/four_qubit.hpp"
#include "meskit/protocol.hpp"
#include "meskit/sampling.hpp"
#include "meskit/sep.hpp"

namespace meskit {
namespace {

using testing::MatNear;

template <typename F>
void expect_code(ErrorCode code, F&& f) {
    try {
        f();
        FAIL() << "expected " << error_code_name(code);
    } catch (const MeskitError& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

// A seed that is already canonical, so bloch axes are not relabeled.
SeedParams4 canonical_seed() {
    const Mat2 id = identity2();
    return standard_form4({SeedParams4{0.9, Complex(0.1, 0.5), 0.3, Complex(-0.2, 0.1)}, {id, id, id, id}}).seed;
}

FactoredState with_blochs(const std::array<Eigen::Vector3d, 4>& b) {
    FactoredState fs{canonical_seed(), {}};
    for (const auto& v : b) fs.locals.push_back(local_from_bloch(v));
    return fs;
}

bool witness_valid(const std::optional<Protocol>& w) {
    if (!w) return false;
    const SimulationReport sim = simulate(*w);
    return sim.deterministic && monotone_audit(*w).passes;
}

TEST(RelabelingGroup, SizeAndAction) {
    const auto& group = seed_relabeling_group();
    EXPECT_EQ(group.size(), 96u);
    Rng rng(61);
    const SeedParams4 p = random_seed4(rng);
    const auto arr = p.as_array();
    const Eigen::Vector4cd q(arr[0], arr[1], arr[2], arr[3]);
    const StateVector psi = seed4_vector_unchecked(p);
    for (const SeedRelabeling& r : group) {
        const Eigen::Vector4cd m = r.action * q;
        const StateVector image = seed4_vector_unchecked(SeedParams4{m[0], m[1], m[2], m[3]});
        EXPECT_TRUE(MatNear(apply_product(r.ops, psi).amps, image.amps, 1e-12));
        for (const Mat2& u : r.ops) EXPECT_TRUE(is_unitary(u, 1e-12));
    }
}

TEST(StandardForm4, SeedIsFixedPoint) {
    Rng rng(62);
    const Mat2 h = identity2() / std::sqrt(2.0);
    for (int k = 0; k < 50; ++k) {
        const StandardForm4 sf = standard_form4({random_seed4(rng), {h, h, h, h}});
        for (const auto& b : sf.blochs) EXPECT_LT(b.norm(), 1e-12);
        const StandardForm4 again = standard_form4(factored4(sf));
        EXPECT_LT(standard_form_distance(sf, again), 1e-12);
        EXPECT_GT(sf.seed.a.real(), 0.0);
        EXPECT_NEAR(sf.seed.a.imag(), 0.0, 1e-12);
    }
}

TEST(StandardForm4, PauliConjugationInvariant) {
    Rng rng(63);
    for (int k = 0; k < 100; ++k) {
        const FactoredState fs = sample_one("4q-generic", rng);
        for (int s = 1; s <= 3; ++s) {
            FactoredState conj = fs;
            for (Mat2& g : conj.locals) g = pauli(s) * g * pauli(s);
            EXPECT_LT(standard_form_distance(standard_form4(fs), standard_form4(conj)), 1e-9);
        }
    }
}

TEST(StandardForm4, RandomLuInvariant) {
    Rng rng(64);
    for (int k = 0; k < 200; ++k) {
        const FactoredState fs = sample_one("4q-generic", rng);
        EXPECT_LT(standard_form_distance(standard_form4(fs), standard_form4(testing::random_lu(fs, rng))), 1e-9);
        EXPECT_TRUE(lu_equivalent4(factored4(standard_form4(fs)), fs));
    }
}

TEST(LuEquivalent4, Examples) {
    Rng rng(65);
    for (int k = 0; k < 100; ++k) {
        const FactoredState fs = sample_one("4q-generic", rng);
        EXPECT_TRUE(lu_equivalent4(fs, fs));
        EXPECT_TRUE(lu_equivalent4(fs, testing::random_lu(fs, rng)));
        FactoredState bumped = fs;
        const PauliForm g = normalized_gram(fs.locals[1]);
        bumped.locals[1] = local_from_bloch(g.g + 1e-3 * rng.unit_vector());
        EXPECT_FALSE(lu_equivalent4(fs, bumped));
    }
}

TEST(EtaMap, Examples) {
    const auto e1 = eta_values({1, 0, 0, 0});
    EXPECT_EQ(e1, (std::array<double, 4>{1, 1, 1, 1}));
    const auto e2 = eta_values({0.5, 0.5, 0, 0});
    EXPECT_EQ(e2, (std::array<double, 4>{1, 1, 0, 0}));
    const auto e3 = eta_values({0.25, 0.25, 0.25, 0.25});
    EXPECT_EQ(e3, (std::array<double, 4>{1, 0, 0, 0}));
    const PauliForm H{0.5, {0.1, 0.2, 0.3}};
    const PauliForm out = eta_map(H, {0.5, 0.5, 0, 0});
    EXPECT_NEAR(out.g[0], 0.1, 1e-15);
    EXPECT_NEAR(out.g[1], 0.0, 1e-15);
    EXPECT_NEAR(out.g[2], 0.0, 1e-15);
    EXPECT_LT(eta_map(H, {0.25, 0.25, 0.25, 0.25}).g.norm(), 1e-15);
}

TEST(EtaMap, MatchesDirectSum) {
    Rng rng(66);
    for (int k = 0; k < 500; ++k) {
        const PauliForm H{rng.uniform(0.1, 1.0), rng.ball(0.1)};
        std::array<double, 4> p{};
        double s = 0.0;
        for (double& x : p) s += (x = rng.uniform());
        for (double& x : p) x /= s;
        Mat2 direct = Mat2::Zero();
        for (int j = 0; j < 4; ++j) direct += p[j] * pauli(j) * H.matrix() * pauli(j);
        EXPECT_TRUE(MatNear(eta_map(H, p).matrix(), direct, 1e-12));
    }
}

TEST(EtaMap, RejectsBadProbabilities) {
    expect_code(ErrorCode::BadProbabilities, [] { validate_probabilities({0.5, 0.6, 0, 0}); });
    expect_code(ErrorCode::BadProbabilities, [] { validate_probabilities({1.2, -0.2, 0, 0}); });
}

TEST(HadamardCondition, Examples) {
    EXPECT_TRUE(hadamard_condition({0, 0, 0}, {0.1, 0.2, 0.3}, {0.4, 0.3, 0.2, 0.1}));
    EXPECT_TRUE(hadamard_condition({0, 0.2, 0.1}, {0.3, 0, 0}, {0.3, 0.3, 0.2, 0.2}));
    EXPECT_FALSE(hadamard_condition({0.1, 0.1, 0}, {0.1, 0.1, 0}, {0.5, 0.5, 0, 0}));
}

TEST(Reachable4, SeedIsNotReachable) {
    Rng rng(67);
    const Mat2 id = identity2();
    const ReachabilityVerdict v = reachable4(FactoredState{random_seed4(rng), {id, id, id, id}});
    EXPECT_FALSE(v.reachable);
    EXPECT_FALSE(v.witness.has_value());
}

TEST(Reachable4, AlignedCaseTwo) {
    const ReachabilityVerdict v = reachable4(with_blochs(
        {Eigen::Vector3d(0.1, 0.2, 0.3), Eigen::Vector3d(0.2, 0, 0), Eigen::Vector3d(0.3, 0, 0), Eigen::Vector3d(0.1, 0, 0)}));
    EXPECT_TRUE(v.reachable);
    EXPECT_EQ(v.reach_case, ReachCase::AlignedAxis);
    EXPECT_EQ(v.axis, 0);
    EXPECT_EQ(v.party, 0);
    EXPECT_TRUE(witness_valid(v.witness));
}

TEST(Reachable4, FullyAlignedIsNotReachable) {
    const ReachabilityVerdict v = reachable4(with_blochs(
        {Eigen::Vector3d(0.2, 0, 0), Eigen::Vector3d(0.2, 0, 0), Eigen::Vector3d(0.3, 0, 0), Eigen::Vector3d(0.1, 0, 0)}));
    EXPECT_FALSE(v.reachable);
}

TEST(Reachable4, TrivialTriple) {
    const Eigen::Vector3d z = Eigen::Vector3d::Zero();
    const ReachabilityVerdict v = reachable4(with_blochs({z, Eigen::Vector3d(0.1, -0.2, 0.25), z, z}));
    EXPECT_TRUE(v.reachable);
    EXPECT_EQ(v.reach_case, ReachCase::TrivialTriple);
    EXPECT_EQ(v.party, 1);
    EXPECT_TRUE(witness_valid(v.witness));
}

TEST(Reachable4, SampledShapes) {
    Rng rng(68);
    for (int k = 0; k < 100; ++k) {
        const ReachabilityVerdict a = reachable4(sample_one("4q-thm2-case1", rng));
        EXPECT_TRUE(a.reachable);
        EXPECT_TRUE(witness_valid(a.witness));
        const ReachabilityVerdict b = reachable4(sample_one("4q-thm2-case2", rng));
        EXPECT_TRUE(b.reachable);
        EXPECT_TRUE(witness_valid(b.witness));
        EXPECT_FALSE(reachable4(sample_one("4q-generic", rng)).reachable);
        EXPECT_FALSE(reachable4(sample_one("4q-aligned", rng)).reachable);
    }
}

TEST(Reachable4, RejectsNonCanonicalForm) {
    StandardForm4 sf;
    sf.seed = SeedParams4{Complex(0, 1), 0.5, 0.3, 0.1};
    expect_code(ErrorCode::NotStandardForm, [&] { reachable4(sf); });
}

TEST(Convertible4, SeedIsConvertible) {
    Rng rng(69);
    const Mat2 id = identity2();
    const ConvertibilityVerdict v = convertible4(FactoredState{random_seed4(rng), {id, id, id, id}});
    EXPECT_TRUE(v.convertible);
    EXPECT_TRUE(witness_valid(v.witness));
    EXPECT_FALSE(lu_equivalent4(v.witness->source, v.witness->target));
}

TEST(Convertible4, AlignedShape) {
    const ConvertibilityVerdict v = convertible4(with_blochs(
        {Eigen::Vector3d(0.1, 0.2, 0.1), Eigen::Vector3d(0.2, 0, 0), Eigen::Vector3d(0.1, 0, 0), Eigen::Vector3d(0.3, 0, 0)}));
    EXPECT_TRUE(v.convertible);
    EXPECT_EQ(v.axis, 0);
    EXPECT_EQ(v.party, 0);
    ASSERT_TRUE(witness_valid(v.witness));
    const auto src = gram(v.witness->source);
    const auto dst = gram(v.witness->target);
    // Off-axis components of the distinguished party grow by 1/(2p - 1); the rest is kept.
    EXPECT_NEAR(dst[0].g[1] * (2 * v.p - 1), src[0].g[1], 1e-9);
    EXPECT_NEAR(dst[0].g[2] * (2 * v.p - 1), src[0].g[2], 1e-9);
    EXPECT_NEAR(dst[0].g[0], src[0].g[0], 1e-9);
    for (int i = 1; i < 4; ++i) EXPECT_LT((dst[i].g - src[i].g).norm(), 1e-9);
}

TEST(Convertible4, SecondPartyDistinguished) {
    const ConvertibilityVerdict v = convertible4(with_blochs(
        {Eigen::Vector3d(0.1, 0, 0), Eigen::Vector3d(0, 0.2, 0), Eigen::Vector3d(0.1, 0, 0), Eigen::Vector3d(0.1, 0, 0)}));
    EXPECT_TRUE(v.convertible);
    EXPECT_EQ(v.party, 1);
    EXPECT_TRUE(witness_valid(v.witness));
}

TEST(Convertible4, NonCollinearIsNotConvertible) {
    const ConvertibilityVerdict v = convertible4(with_blochs(
        {Eigen::Vector3d(0.1, 0, 0), Eigen::Vector3d(0, 0.2, 0), Eigen::Vector3d(0, 0, 0.1), Eigen::Vector3d(0.1, 0, 0)}));
    EXPECT_FALSE(v.convertible);
    EXPECT_FALSE(v.witness.has_value());
}

TEST(Convertible4, SampledThm3Shapes) {
    Rng rng(70);
    for (int k = 0; k < 100; ++k) {
        const ConvertibilityVerdict v = convertible4(sample_one("4q-thm3-shape", rng));
        EXPECT_TRUE(v.convertible);
        EXPECT_TRUE(witness_valid(v.witness));
    }
}

TEST(Isolated4, Examples) {
    Rng rng(71);
    const Mat2 id = identity2();
    EXPECT_FALSE(isolated4(FactoredState{random_seed4(rng), {id, id, id, id}}));
    EXPECT_TRUE(isolated4(with_blochs(
        {Eigen::Vector3d(0.1, 0.05, 0), Eigen::Vector3d(0, 0.2, 0.1), Eigen::Vector3d(0.2, 0, 0.1), Eigen::Vector3d(0.1, 0.1, 0.1)})));
    EXPECT_FALSE(isolated4(sample_one("4q-thm2-case2", rng)));
}

TEST(Isolated4, ReachableImpliesConvertible) {
    Rng rng(72);
    for (int k = 0; k < 100; ++k) {
        const FactoredState fs = sample_one(k % 2 ? "4q-thm2-case1" : "4q-thm2-case2", rng);
        EXPECT_TRUE(reachable4(fs).reachable);
        EXPECT_TRUE(convertible4(fs).convertible);
    }
}

TEST(DecisionMargin, PositiveOnSamples) {
    Rng rng(73);
    for (int k = 0; k < 100; ++k) EXPECT_GT(decision_margin4(standard_form4(sample_one("4q-generic", rng))), 1e-6);
}

}  // namespace
}  // namespace meskit
