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

// Three-qubit standard forms, MES membership, the (a, beta, beta') family of
// MES representatives, and explicit LOCC protocols into and out of the MES.

#include <array>
#include <string>

#include "meskit/protocol.hpp"

namespace meskit {

struct XGauge {
    Complex gamma{1.0};
    PauliForm gx;  // c0 = s, g = (t, 0, 0) with t >= 0
};

/// Writes a positive definite G as P_gamma^dagger (s 1 + t X) P_gamma.
/// Throws NotPositiveDefinite.
XGauge x_gauge(const PauliForm& G);

/// sqrt(1/2 + g X), a real symmetric local with normalized gram 1/2 + g X.
Mat2 x_local(double g);

/// g_x^1 (x) g_x^2 (x) g_x^3 P_z |GHZ>, with z = |z| e^{i alpha}, |z| >= 1 and
/// alpha in (-pi/2, pi/2]. When |z| = 1, alpha is folded into [0, pi/2).
/// A phase alpha = pi/2 is traded for a sign flip of gx[2].
struct GhzStandardForm {
    std::array<double, 3> gx{};
    Complex z{1.0};
    bool boundary = false;  // some, but not all, gx vanish
};

GhzStandardForm ghz_standard_form(const FactoredState& fs, const Tolerances& tol = {});
FactoredState ghz_factored(const GhzStandardForm& sf);

/// x0 |000> + x1 |100> + x2 |010> + x3 |001> up to local phases, unnormalized.
struct WStandardForm {
    std::array<double, 4> x{};
};

WStandardForm w_standard_form(const FactoredState& fs, const Tolerances& tol = {});
FactoredState w_factored(const WStandardForm& sf);

struct Mes3Verdict {
    bool in_mes = false;
    std::string reason;
    double margin = 0.0;  // distance of the deciding quantity from its MES value
};

Mes3Verdict is_in_mes3(const FactoredState& fs, const Tolerances& tol = {});

/// |0>|Psi_s> + |1> Y(beta') (x) Y(beta) |Psi_s>, Psi_s = a|00> + sqrt(1-a^2)|11>,
/// with Y(t) = exp(i t Y).
struct Mes3Family {
    double a = 1.0;
    double beta = 0.0;
    double beta_prime = 0.0;
};

StateVector family_vector(const Mes3Family& fam);

/// X (x) Z Y(-beta') (x) Z Y(-beta), which fixes family_vector(fam).
ProductOperator family_symmetry(const Mes3Family& fam);

/// A factorization of family_vector(fam). For GHZ-class members the seed frame
/// is chosen so that family_symmetry acts as X on every party.
FactoredState family_factored(const Mes3Family& fam, const Tolerances& tol = {});

/// Throws NotInMes.
Mes3Family mes3_family_params(const FactoredState& fs, const Tolerances& tol = {});

/// Target outside the MES with z != 1. The source keeps parties 1 and 2 and
/// replaces party 3 by 1/2 + b' X; party 3 measures. Throws TargetInMes.
Protocol synth_ghz_zprotocol(const GhzStandardForm& target, const Tolerances& tol = {});

/// Target with at least one vanishing x-part and |z| = 1. The source is GHZ up
/// to a unitary on the trivial party; the other parties measure {h_x, h_x Z}
/// in turn and the trivial party undoes each Z. Throws WrongShape.
Protocol synth_ghz_trivialparty_protocol(const GhzStandardForm& target, const Tolerances& tol = {});

/// Target with x0 > 0; the source has x0 = 0 and party 2 measures.
/// Throws TargetInMes.
Protocol synth_w_protocol(const WStandardForm& target, const Tolerances& tol = {});

/// A = u sqrt(1/2 + a_y Y + a_z Z), so tr(A^dagger A) = 1 and tr(A^dagger A X) = 0.
Mat2 nonisolation_operator(double a_y, double a_z, const Mat2& u);

/// Psi(a, beta, beta') -> (A (x) 1 (x) 1) Psi with POVM {A, A X} on party 1.
/// Throws BadConstraint unless tr(A^dagger A) = 1 and tr(A^dagger A X) = 0.
Protocol synth_nonisolation_povm(const Mes3Family& fam, const Mat2& A, const Tolerances& tol = {});

}  // namespace meskit
