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

// Separable-map feasibility over finite unitary symmetry groups, the
// four-party factorization check for Pauli-diagonal channels, and a search
// for nontrivial factorizing channels used to cross-check reachability.

#include <array>
#include <string>
#include <vector>

#include "meskit/qla.hpp"

namespace meskit {

struct SymmetryGroup {
    std::vector<ProductOperator> elements;
    std::vector<std::string> labels;
};

/// sigma_k^{(x)4}, k = 0..3.
SymmetryGroup pauli_group4();

/// X^flip P_g1 (x) X^flip P_g2 (x) X^flip P_{1/(g1 g2)}; unitary for unimodular gammas.
ProductOperator ghz_symmetry(Complex gamma1, Complex gamma2, bool flip);

/// [[x, y], [0, 1/x]] (x) [[x, z], [0, 1/x]] (x) [[x, -y-z], [0, 1/x]].
ProductOperator w_symmetry(Complex x, Complex y, Complex z);

/// Z(alpha)^{(x)3}.
ProductOperator w_phase_symmetry(double alpha);

struct SepCertificate {
    std::vector<double> probabilities;
    std::vector<double> component_residuals;  // Pauli-product components of sum_k p_k S_k^dagger H S_k - r G
    double residual = 0.0;                    // max-abs of component_residuals
    double r = 1.0;
    bool feasible = false;
    bool degenerate = false;  // all weight on a single element
};

/// Solves sum_k p_k S_k^dagger H S_k = r G for p in the simplex, with H and G
/// given party by party. Throws NonUnitaryGroup.
SepCertificate sep_feasible(const ProductOperator& H, const ProductOperator& G, const SymmetryGroup& group,
                            double r = 1.0, const Tolerances& tol = {});

struct FactorizationCheck {
    bool holds = false;
    double residual = 0.0;
};

/// Compares sum_k p_k sigma_k^{(x)4} H sigma_k^{(x)4} with the product of the
/// single-party images, component by component.
FactorizationCheck check_factorization(const std::array<PauliForm, 4>& H, const std::array<double, 4>& p,
                                       const Tolerances& tol = {});

struct FactorizationSearch {
    bool found = false;
    std::array<double, 4> p{};
    double residual = 0.0;
    int boxes = 0;
};

/// Looks for p whose channel factorizes on H while staying at least
/// trivial_radius (in eta coordinates on the active Pauli axes) away from
/// every simplex vertex, i.e. p is neither a single Pauli nor LU-trivial on H.
/// Branch-and-bound on interval bounds, then Levenberg-Marquardt polishing.
FactorizationSearch find_nontrivial_factorization(const std::array<PauliForm, 4>& H, const Tolerances& tol = {},
                                                  double trivial_radius = 0.1);

struct SymmetryReport {
    std::vector<double> exact;   // |S psi - psi| / |psi|
    std::vector<double> phase;   // best global phase
    std::vector<double> scalar;  // best complex scalar
    double max_exact = 0.0;
    double max_phase = 0.0;
    double max_scalar = 0.0;
};

SymmetryReport verify_symmetry(const SymmetryGroup& group, const StateVector& seed);

}  // namespace meskit
