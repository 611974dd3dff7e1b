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

// Small dense complex linear algebra for 2-4 qubits: single-qubit operators,
// Kronecker products, Pauli-basis forms, and the two-level majorization test.
//
// Bit ordering: party 1 (index 0) is the most significant bit of a basis
// index, so |q1 q2 ... qn> sits at sum_k q_k 2^(n-1-k).

#include <array>
#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "meskit/tolerances.hpp"

namespace meskit {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using ProductOperator = std::vector<Mat2>;

inline constexpr int kMaxParties = 4;

/// c0 * 1 + g . (X, Y, Z)
struct PauliForm {
    double c0 = 0.5;
    Eigen::Vector3d g = Eigen::Vector3d::Zero();

    double bloch_norm() const { return g.norm(); }
    Mat2 matrix() const;
};

/// 2^n amplitudes, n in {1..4}. Party 1 is the most significant bit.
struct StateVector {
    int n_parties = 0;
    Eigen::VectorXcd amps;

    StateVector() = default;
    StateVector(int n, Eigen::VectorXcd a);

    static StateVector basis(int n, unsigned index);
    double norm() const { return amps.norm(); }
    StateVector normalized() const;
};

// Fixed operators. pauli(0..3) = 1, X, Y, Z.
Mat2 pauli(int k);
Mat2 identity2();
Mat2 hadamard();
Mat2 phase_s();

/// exp(i angle W) for W = Y, Z.
Mat2 y_rotation(double angle);
Mat2 z_rotation(double angle);

/// diag(gamma, 1/gamma)
Mat2 p_gamma(Complex gamma);

PauliForm pauli_decompose(const Mat2& h, const Tolerances& tol = {});

Eigen::MatrixXcd tensor(std::span<const Mat2> ops);

void apply_local(StateVector& state, int party, const Mat2& op);
StateVector apply_product(std::span<const Mat2> ops, StateVector state);

/// Two-level majorization: lam_g is majorized by lam_h.
bool majorizes(std::array<double, 2> lam_h, std::array<double, 2> lam_g, const Tolerances& tol = {});

/// Eigenvalues (c0 + |g|, c0 - |g|).
std::array<double, 2> eig_pauli(const PauliForm& p);

/// |<v|w>| = ||v|| ||w|| within tol.eq, relative to the norms.
bool proportional_up_to_phase(const StateVector& v, const StateVector& w, const Tolerances& tol = {});

/// |<v|w>| / (||v|| ||w||).
double overlap_ratio(const StateVector& v, const StateVector& w);

double max_abs(const Eigen::MatrixXcd& m);
bool is_unitary(const Mat2& u, double tol);
bool is_hermitian(const Mat2& h, double tol);

/// Principal square root of a positive semidefinite Hermitian matrix.
Mat2 sqrt_psd(const Mat2& h);

/// Single-party reduced density matrix of the normalized state.
Mat2 reduced_density(const StateVector& state, int party);

}  // namespace meskit
