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
#include <numbers>

#include "helpers.hpp"
#include "meskit/errors.hpp"
#include "meskit/four_qubit.hpp"
#include "meskit/sampling.hpp"
#include "meskit/sep.hpp"

namespace meskit {
namespace {

using testing::MatNear;

ProductOperator gram_ops(const FactoredState& fs) {
    ProductOperator out;
    for (const PauliForm& p : gram(fs)) out.push_back(p.matrix());
    return out;
}

std::array<PauliForm, 4> gram4(const FactoredState& fs) {
    const auto g = gram(fs);
    return {g[0], g[1], g[2], g[3]};
}

// Dense check of sum_k p_k S_k^dagger H S_k = r G on the full tensor space.
double dense_residual(const ProductOperator& H, const ProductOperator& G, const SymmetryGroup& group,
                      const std::vector<double>& p, double r) {
    const Eigen::MatrixXcd h = tensor(H);
    Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(h.rows(), h.cols());
    for (size_t k = 0; k < group.elements.size(); ++k) {
        const Eigen::MatrixXcd s = tensor(group.elements[k]);
        lhs += p[k] * s.adjoint() * h * s;
    }
    return max_abs(lhs - r * tensor(G));
}

SymmetryGroup ghz_phases() {
    SymmetryGroup g;
    for (int flip = 0; flip < 2; ++flip) {
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                g.elements.push_back(ghz_symmetry(std::polar(1.0, a * std::numbers::pi / 2),
                                                  std::polar(1.0, b * std::numbers::pi / 2), flip == 1));
                g.labels.push_back("");
            }
        }
    }
    return g;
}

TEST(SepFeasible, IdentityCertificate) {
    Rng rng(81);
    const FactoredState fs = sample_one("4q-generic", rng);
    const ProductOperator H = gram_ops(fs);
    const SepCertificate c = sep_feasible(H, H, pauli_group4());
    EXPECT_TRUE(c.feasible);
    EXPECT_TRUE(c.degenerate);
    EXPECT_NEAR(c.probabilities[0], 1.0, 1e-12);
    EXPECT_LT(dense_residual(H, H, pauli_group4(), c.probabilities, 1.0), 1e-8);
}

TEST(SepFeasible, CaseTwoWitnessHasEqualWeights) {
    Rng rng(82);
    for (int k = 0; k < 50; ++k) {
        const ReachabilityVerdict v = reachable4(sample_one("4q-thm2-case2", rng));
        ASSERT_TRUE(v.witness);
        const ProductOperator H = gram_ops(v.witness->target);
        const ProductOperator G = gram_ops(v.witness->source);
        const SepCertificate c = sep_feasible(H, G, pauli_group4());
        ASSERT_TRUE(c.feasible);
        EXPECT_FALSE(c.degenerate);
        EXPECT_NEAR(c.probabilities[0], 0.5, 1e-9);
        EXPECT_NEAR(c.probabilities[1 + v.axis], 0.5, 1e-9);
        EXPECT_LT(dense_residual(H, G, pauli_group4(), c.probabilities, 1.0), 1e-8);
    }
}

TEST(SepFeasible, GenericTargetIsInfeasible) {
    Rng rng(83);
    for (int k = 0; k < 50; ++k) {
        const ProductOperator H = gram_ops(sample_one("4q-generic", rng));
        const ProductOperator G = gram_ops(sample_one("4q-generic", rng));
        EXPECT_FALSE(sep_feasible(H, G, pauli_group4()).feasible);
    }
}

TEST(SepFeasible, LargeGroupUsesLeastSquares) {
    Rng rng(84);
    const SymmetryGroup group = ghz_phases();
    ASSERT_GT(group.elements.size(), 6u);
    for (int k = 0; k < 20; ++k) {
        const Protocol pr = sample_protocol("ghz-z", rng);
        const ProductOperator H = gram_ops(pr.target);
        const ProductOperator G = gram_ops(pr.source);
        const SepCertificate c = sep_feasible(H, G, group);
        ASSERT_TRUE(c.feasible);
        double sum = 0.0;
        for (double p : c.probabilities) {
            EXPECT_GE(p, -1e-12);
            sum += p;
        }
        EXPECT_NEAR(sum, 1.0, 1e-9);
        EXPECT_LT(dense_residual(H, G, group, c.probabilities, 1.0), 1e-7);
    }
}

TEST(SepFeasible, MajorizationOnFeasibleCertificates) {
    Rng rng(85);
    for (int k = 0; k < 50; ++k) {
        const Protocol pr = sample_protocol(k % 2 ? "thm3" : "thm2-case2", rng);
        const ProductOperator H = gram_ops(pr.target);
        const ProductOperator G = gram_ops(pr.source);
        ASSERT_TRUE(sep_feasible(H, G, pauli_group4()).feasible);
        for (int i = 0; i < 4; ++i) {
            EXPECT_TRUE(majorizes(eig_pauli(pauli_decompose(H[i])), eig_pauli(pauli_decompose(G[i]))));
        }
    }
}

TEST(SepFeasible, RejectsNonUnitaryGroup) {
    const Mat2 id = identity2();
    SymmetryGroup g;
    g.elements.push_back(w_symmetry(2.0, 0.0, 0.0));
    g.labels.push_back("s");
    const ProductOperator H = {0.5 * id, 0.5 * id, 0.5 * id};
    try {
        sep_feasible(H, H, g);
        FAIL();
    } catch (const MeskitError& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonUnitaryGroup);
    }
}

TEST(CheckFactorization, TrivialCases) {
    Rng rng(86);
    const auto H = gram4(sample_one("4q-generic", rng));
    EXPECT_TRUE(check_factorization(H, {1, 0, 0, 0}).holds);
    const PauliForm mixed{0.5, Eigen::Vector3d::Zero()};
    EXPECT_TRUE(check_factorization({mixed, mixed, mixed, mixed}, {0.1, 0.2, 0.3, 0.4}).holds);
}

TEST(CheckFactorization, ShapeDependence) {
    Rng rng(87);
    for (int k = 0; k < 50; ++k) {
        const ReachabilityVerdict v = reachable4(sample_one("4q-thm2-case2", rng));
        std::array<double, 4> p{0.5, 0, 0, 0};
        p[1 + v.axis] = 0.5;
        EXPECT_TRUE(check_factorization(gram4(factored4(v.form)), p).holds);
        EXPECT_FALSE(check_factorization(gram4(sample_one("4q-generic", rng)), {0.5, 0.5, 0, 0}).holds);
    }
}

TEST(FactorizationSearch, AgreesWithClosedForm) {
    Rng rng(88);
    const char* specs[] = {"4q-generic", "4q-thm2-case1", "4q-thm2-case2", "4q-aligned"};
    for (int k = 0; k < 200; ++k) {
        const StandardForm4 sf = standard_form4(sample_one(specs[k % 4], rng));
        const FactorizationSearch s = find_nontrivial_factorization(gram4(factored4(sf)));
        EXPECT_EQ(s.found, reachable4(sf).reachable) << specs[k % 4];
        if (s.found) EXPECT_TRUE(check_factorization(gram4(factored4(sf)), s.p).holds);
    }
}

TEST(VerifySymmetry, DeclaredGenerators) {
    Rng rng(89);
    for (int k = 0; k < 20; ++k) {
        EXPECT_LT(verify_symmetry(pauli_group4(), seed_vector(random_seed4(rng))).max_exact, 1e-12);
    }
    SymmetryGroup x3;
    x3.elements.push_back(ghz_symmetry(1.0, 1.0, true));
    x3.labels.push_back("XXX");
    EXPECT_LT(verify_symmetry(x3, seed_vector(Seed3::GHZ)).max_exact, 1e-12);
    SymmetryGroup zw;
    for (int k = 0; k < 20; ++k) {
        zw.elements.push_back(w_phase_symmetry(rng.uniform(0.0, 2 * std::numbers::pi)));
        zw.labels.push_back("Z");
    }
    EXPECT_LT(verify_symmetry(zw, seed_vector(Seed3::W)).max_phase, 1e-12);
}

TEST(VerifySymmetry, WFamilyFixesRayOnly) {
    SymmetryGroup g;
    g.elements.push_back(w_symmetry(2.0, Complex(0.3, 0.1), -0.7));
    g.labels.push_back("S");
    const SymmetryReport r = verify_symmetry(g, seed_vector(Seed3::W));
    EXPECT_LT(r.max_scalar, 1e-12);
    EXPECT_NEAR(r.max_exact, 1.0, 1e-12);
}

}  // namespace
}  // namespace meskit
