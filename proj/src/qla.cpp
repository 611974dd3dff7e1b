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

#include "meskit/qla.hpp"

#include <cmath>
#include <string>

#include "meskit/errors.hpp"

namespace meskit {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHermitian: return "NonHermitian";
        case ErrorCode::MismatchedTrace: return "MismatchedTrace";
        case ErrorCode::DegenerateSeed: return "DegenerateSeed";
        case ErrorCode::SingularLocal: return "SingularLocal";
        case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorCode::NotInMes: return "NotInMes";
        case ErrorCode::TargetInMes: return "TargetInMes";
        case ErrorCode::WrongShape: return "WrongShape";
        case ErrorCode::BadConstraint: return "BadConstraint";
        case ErrorCode::BadProbabilities: return "BadProbabilities";
        case ErrorCode::NotStandardForm: return "NotStandardForm";
        case ErrorCode::NonUnitaryGroup: return "NonUnitaryGroup";
        case ErrorCode::IncompletePovm: return "IncompletePovm";
        case ErrorCode::NonUnitaryCorrection: return "NonUnitaryCorrection";
        case ErrorCode::BadSpec: return "BadSpec";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

Mat2 PauliForm::matrix() const {
    Mat2 m = c0 * identity2();
    for (int k = 0; k < 3; ++k) m += g[k] * pauli(k + 1);
    return m;
}

StateVector::StateVector(int n, Eigen::VectorXcd a) : n_parties(n), amps(std::move(a)) {
    if (n < 1 || n > kMaxParties) {
        throw MeskitError(ErrorCode::InvalidInput, "party count must be in 1..4, got " + std::to_string(n));
    }
    if (amps.size() != (Eigen::Index{1} << n)) {
        throw MeskitError(ErrorCode::InvalidInput, "amplitude count does not match 2^n");
    }
    if (!amps.allFinite()) throw MeskitError(ErrorCode::InvalidInput, "non-finite amplitude");
}

StateVector StateVector::basis(int n, unsigned index) {
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    a[index] = 1.0;
    return StateVector(n, std::move(a));
}

StateVector StateVector::normalized() const {
    const double nrm = norm();
    if (nrm == 0.0) throw MeskitError(ErrorCode::InvalidInput, "zero state vector");
    return StateVector(n_parties, amps / nrm);
}

Mat2 identity2() { return Mat2::Identity(); }

Mat2 pauli(int k) {
    Mat2 m;
    switch (k) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case 3: m << 1, 0, 0, -1; break;
        default: throw MeskitError(ErrorCode::InvalidInput, "pauli index out of range");
    }
    return m;
}

Mat2 hadamard() {
    Mat2 m;
    m << 1, 1, 1, -1;
    return m / std::sqrt(2.0);
}

Mat2 phase_s() {
    Mat2 m;
    m << 1, 0, 0, Complex(0, 1);
    return m;
}

Mat2 y_rotation(double angle) {
    // exp(i a Y) = cos a 1 + i sin a Y, which is real.
    Mat2 m;
    m << std::cos(angle), std::sin(angle), -std::sin(angle), std::cos(angle);
    return m;
}

Mat2 z_rotation(double angle) {
    Mat2 m;
    m << std::polar(1.0, angle), 0, 0, std::polar(1.0, -angle);
    return m;
}

Mat2 p_gamma(Complex gamma) {
    Mat2 m;
    m << gamma, 0, 0, 1.0 / gamma;
    return m;
}

PauliForm pauli_decompose(const Mat2& h, const Tolerances& tol) {
    if (!is_hermitian(h, tol.herm)) {
        throw MeskitError(ErrorCode::NonHermitian, "operator is not Hermitian within tolerance");
    }
    PauliForm p;
    p.c0 = 0.5 * (h(0, 0).real() + h(1, 1).real());
    p.g[0] = h(0, 1).real();
    p.g[1] = -h(0, 1).imag();
    p.g[2] = 0.5 * (h(0, 0).real() - h(1, 1).real());
    return p;
}

Eigen::MatrixXcd tensor(std::span<const Mat2> ops) {
    if (ops.empty() || ops.size() > static_cast<size_t>(kMaxParties)) {
        throw MeskitError(ErrorCode::InvalidInput, "tensor: need 1..4 operators");
    }
    Eigen::MatrixXcd out = ops[0];
    for (size_t k = 1; k < ops.size(); ++k) {
        const Eigen::Index n = out.rows();
        Eigen::MatrixXcd next(2 * n, 2 * n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                next.block<2, 2>(2 * i, 2 * j) = out(i, j) * ops[k];
            }
        }
        out = std::move(next);
    }
    return out;
}

void apply_local(StateVector& state, int party, const Mat2& op) {
    const int n = state.n_parties;
    const Eigen::Index stride = Eigen::Index{1} << (n - 1 - party);
    const Eigen::Index dim = state.amps.size();
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (i & stride) continue;
        const Complex a0 = state.amps[i];
        const Complex a1 = state.amps[i | stride];
        state.amps[i] = op(0, 0) * a0 + op(0, 1) * a1;
        state.amps[i | stride] = op(1, 0) * a0 + op(1, 1) * a1;
    }
}

StateVector apply_product(std::span<const Mat2> ops, StateVector state) {
    if (static_cast<int>(ops.size()) != state.n_parties) {
        throw MeskitError(ErrorCode::InvalidInput, "product operator length does not match party count");
    }
    for (int k = 0; k < state.n_parties; ++k) apply_local(state, k, ops[k]);
    return state;
}

bool majorizes(std::array<double, 2> lam_h, std::array<double, 2> lam_g, const Tolerances& tol) {
    const double sh = lam_h[0] + lam_h[1];
    const double sg = lam_g[0] + lam_g[1];
    if (std::abs(sh - sg) > tol.eq) {
        throw MeskitError(ErrorCode::MismatchedTrace, "majorization needs equal sums");
    }
    return std::max(lam_g[0], lam_g[1]) <= std::max(lam_h[0], lam_h[1]) + tol.eq;
}

std::array<double, 2> eig_pauli(const PauliForm& p) {
    const double r = p.g.norm();
    return {p.c0 + r, p.c0 - r};
}

double overlap_ratio(const StateVector& v, const StateVector& w) {
    const double nv = v.norm();
    const double nw = w.norm();
    if (nv == 0.0 || nw == 0.0) return 0.0;
    return std::abs(v.amps.dot(w.amps)) / (nv * nw);
}

bool proportional_up_to_phase(const StateVector& v, const StateVector& w, const Tolerances& tol) {
    if (v.n_parties != w.n_parties) return false;
    return std::abs(1.0 - overlap_ratio(v, w)) <= tol.eq;
}

double max_abs(const Eigen::MatrixXcd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_unitary(const Mat2& u, double tol) {
    return max_abs(u.adjoint() * u - Mat2::Identity()) <= tol;
}

bool is_hermitian(const Mat2& h, double tol) {
    return max_abs(h - h.adjoint()) <= tol;
}

Mat2 sqrt_psd(const Mat2& h) {
    Eigen::SelfAdjointEigenSolver<Mat2> es(0.5 * (h + h.adjoint()));
    Eigen::Vector2d ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

Mat2 reduced_density(const StateVector& state, int party) {
    const StateVector s = state.normalized();
    const int n = s.n_parties;
    const Eigen::Index stride = Eigen::Index{1} << (n - 1 - party);
    Mat2 rho = Mat2::Zero();
    for (Eigen::Index i = 0; i < s.amps.size(); ++i) {
        if (i & stride) continue;
        const Complex a0 = s.amps[i];
        const Complex a1 = s.amps[i | stride];
        rho(0, 0) += a0 * std::conj(a0);
        rho(0, 1) += a0 * std::conj(a1);
        rho(1, 0) += a1 * std::conj(a0);
        rho(1, 1) += a1 * std::conj(a1);
    }
    return rho;
}

}  // namespace meskit
