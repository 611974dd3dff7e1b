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

#include "meskit/three_qubit.hpp"

#include <cmath>
#include <numbers>

#include "meskit/errors.hpp"
#include "meskit/lu3.hpp"

namespace meskit {
namespace {

constexpr double kPi = std::numbers::pi;

Mat2 hermitian_part(const Mat2& m) { return 0.5 * (m + m.adjoint()); }

double fold_half_turn(double angle) {
    while (angle > kPi / 2) angle -= kPi;
    while (angle <= -kPi / 2) angle += kPi;
    return angle;
}

void require_seed(const FactoredState& fs, Seed3 seed, const char* what) {
    if (!std::holds_alternative<Seed3>(fs.seed) || std::get<Seed3>(fs.seed) != seed) {
        throw MeskitError(ErrorCode::WrongShape, what);
    }
}

}  // namespace

XGauge x_gauge(const PauliForm& G) {
    if (!(G.c0 > G.bloch_norm())) {
        throw MeskitError(ErrorCode::NotPositiveDefinite, "operator is not positive definite");
    }
    const double alpha = G.c0 + G.g.z();
    const double delta = G.c0 - G.g.z();
    const Complex beta(G.g.x(), -G.g.y());
    XGauge out;
    const double s = std::sqrt(alpha * delta);
    const double t = std::abs(beta);
    const double mag = std::sqrt(std::sqrt(alpha / delta));
    const double phase = t > 0.0 ? -std::arg(beta) / 2.0 : 0.0;
    out.gamma = std::polar(mag, phase);
    out.gx.c0 = s;
    out.gx.g = Eigen::Vector3d(t, 0.0, 0.0);
    return out;
}

Mat2 x_local(double g) { return local_from_bloch(Eigen::Vector3d(g, 0.0, 0.0)); }

GhzStandardForm ghz_standard_form(const FactoredState& fs, const Tolerances& tol) {
    require_seed(fs, Seed3::GHZ, "GHZ standard form needs a GHZ-seeded state");
    validate_locals(fs, tol);
    GhzStandardForm sf;
    Complex z = 1.0;
    for (int i = 0; i < 3; ++i) {
        const Mat2& g = fs.locals[i];
        const XGauge xg = x_gauge(pauli_decompose(hermitian_part(g.adjoint() * g), tol));
        sf.gx[i] = xg.gx.g.x() / (2.0 * xg.gx.c0);
        z *= xg.gamma;
    }
    double mag = std::abs(z);
    double alpha = std::arg(z);
    if (mag < 1.0) {
        // X on every party commutes with each g_x and maps P_z to P_{1/z}.
        mag = 1.0 / mag;
        alpha = -alpha;
    }
    // P_{-z} = -P_z.
    alpha = fold_half_turn(alpha);
    if (std::abs(alpha) > kPi / 2 - tol.zero) {
        // P_{iz} = i P_z Z, and Z on party 3 of GHZ moves to a unitary outside
        // while flipping the sign of party 3's x-part.
        alpha -= std::copysign(kPi / 2, alpha);
        sf.gx[2] = -sf.gx[2];
    }
    if (std::abs(mag - 1.0) <= tol.eq) alpha = std::abs(alpha);
    sf.z = std::polar(mag, alpha);
    int zeros = 0;
    for (double g : sf.gx) zeros += std::abs(g) <= tol.zero ? 1 : 0;
    sf.boundary = zeros > 0 && zeros < 3;
    return sf;
}

FactoredState ghz_factored(const GhzStandardForm& sf) {
    return FactoredState{Seed3::GHZ, {x_local(sf.gx[0]), x_local(sf.gx[1]), x_local(sf.gx[2]) * p_gamma(sf.z)}};
}

WStandardForm w_standard_form(const FactoredState& fs, const Tolerances& tol) {
    require_seed(fs, Seed3::W, "W standard form needs a W-seeded state");
    validate_locals(fs, tol);
    std::array<Complex, 3> a, b, d;
    for (int i = 0; i < 3; ++i) {
        Eigen::HouseholderQR<Mat2> qr(fs.locals[i]);
        const Mat2 r = qr.matrixQR().triangularView<Eigen::Upper>();
        a[i] = r(0, 0);
        b[i] = r(0, 1);
        d[i] = r(1, 1);
    }
    WStandardForm sf;
    sf.x[0] = std::abs(a[1] * a[2] * b[0] + a[0] * a[2] * b[1] + a[0] * a[1] * b[2]);
    sf.x[1] = std::abs(d[0] * a[1] * a[2]);
    sf.x[2] = std::abs(a[0] * d[1] * a[2]);
    sf.x[3] = std::abs(a[0] * a[1] * d[2]);
    return sf;
}

FactoredState w_factored(const WStandardForm& sf) {
    const auto& x = sf.x;
    Mat2 g1, g2;
    g1 << 1.0, 0.0, 0.0, x[1] / x[3];
    g2 << x[3], x[0], 0.0, x[2];
    return FactoredState{Seed3::W, {g1, g2, identity2()}};
}

Mes3Verdict is_in_mes3(const FactoredState& fs, const Tolerances& tol) {
    Mes3Verdict v;
    if (fs.is_w()) {
        const WStandardForm sf = w_standard_form(fs, tol);
        const double norm = std::sqrt(sf.x[0] * sf.x[0] + sf.x[1] * sf.x[1] + sf.x[2] * sf.x[2] + sf.x[3] * sf.x[3]);
        v.margin = sf.x[0] / norm;
        v.in_mes = v.margin <= tol.zero;
        v.reason = v.in_mes ? "W class with x0 = 0" : "W class with x0 > 0";
        return v;
    }
    if (!fs.is_ghz()) throw MeskitError(ErrorCode::WrongShape, "three-qubit MES test needs a GHZ or W seed");
    const GhzStandardForm sf = ghz_standard_form(fs, tol);
    int zeros = 0;
    for (double g : sf.gx) zeros += std::abs(g) <= tol.zero ? 1 : 0;
    if (zeros == 0) {
        v.margin = std::abs(sf.z - 1.0);
        v.in_mes = v.margin <= tol.zero;
        v.reason = v.in_mes ? "GHZ class with z = 1 and no trivial x-part" : "GHZ class with z != +-1";
    } else if (zeros == 3) {
        v.margin = std::abs(std::abs(sf.z) - 1.0);
        v.in_mes = v.margin <= tol.zero;
        v.reason = v.in_mes ? "the GHZ state" : "GHZ class with trivial x-parts and |z| != 1";
    } else {
        v.margin = 0.0;
        for (double g : sf.gx) {
            if (std::abs(g) <= tol.zero) v.margin = std::max(v.margin, std::abs(g));
        }
        v.in_mes = false;
        v.reason = "GHZ class with some but not all x-parts trivial";
    }
    return v;
}

StateVector family_vector(const Mes3Family& fam) {
    Eigen::Matrix2d s = Eigen::Matrix2d::Zero();
    s(0, 0) = fam.a;
    s(1, 1) = std::sqrt(std::max(0.0, 1.0 - fam.a * fam.a));
    const Eigen::Matrix2d y2 = y_rotation(fam.beta_prime).real();
    const Eigen::Matrix2d y3 = y_rotation(fam.beta).real();
    const Eigen::Matrix2d t1 = y2 * s * y3.transpose();
    Eigen::VectorXcd amps(8);
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
            amps[2 * j + k] = s(j, k);
            amps[4 + 2 * j + k] = t1(j, k);
        }
    }
    return StateVector(3, amps);
}

ProductOperator family_symmetry(const Mes3Family& fam) {
    return {pauli(1), pauli(3) * y_rotation(-fam.beta_prime), pauli(3) * y_rotation(-fam.beta)};
}

FactoredState family_factored(const Mes3Family& fam, const Tolerances& tol) {
    const StateVector psi = family_vector(fam);
    FactoredState generic = factor3(psi, tol);
    if (!generic.is_ghz()) return generic;
    const ProductOperator sym = family_symmetry(fam);
    const double scale = psi.norm();
    for (int base = 0; base < 2; ++base) {
        FactoredState fs{Seed3::GHZ, {}};
        for (int i = 0; i < 3; ++i) {
            const Eigen::Vector2cd v = generic.locals[i].col(base);
            Mat2 g;
            g.col(0) = v;
            g.col(1) = sym[i] * v;
            fs.locals.push_back(g);
        }
        bool invertible = true;
        for (const Mat2& g : fs.locals) invertible = invertible && std::abs(g.determinant()) > tol.invertible;
        if (!invertible) continue;
        if (max_abs(realize(fs, tol).amps - psi.amps) <= tol.eq * scale) return fs;
    }
    return generic;
}

Mes3Family mes3_family_params(const FactoredState& fs, const Tolerances& tol) {
    const Mes3Verdict verdict = is_in_mes3(fs, tol);
    if (!verdict.in_mes) throw MeskitError(ErrorCode::NotInMes, "state is not in MES_3: " + verdict.reason);
    FactoredState real_form;
    if (fs.is_ghz()) {
        const GhzStandardForm sf = ghz_standard_form(fs, tol);
        real_form = FactoredState{Seed3::GHZ, {x_local(sf.gx[0]), x_local(sf.gx[1]), x_local(sf.gx[2])}};
    } else {
        WStandardForm sf = w_standard_form(fs, tol);
        sf.x[0] = 0.0;
        real_form = w_factored(sf);
    }
    StateVector psi = realize(real_form, tol);
    psi.amps *= std::sqrt(2.0) / psi.norm();
    Eigen::Matrix2d m0, m1;
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
            m0(j, k) = psi.amps[2 * j + k].real();
            m1(j, k) = psi.amps[4 + 2 * j + k].real();
        }
    }
    // A real rotation on party 1 balances the slice norms and determinants;
    // each condition reads A cos 2t + B sin 2t = 0.
    const double d0 = m0.determinant(), d1 = m1.determinant();
    const double a_norm = m0.squaredNorm() - m1.squaredNorm();
    const double b_norm = 2.0 * (m0.array() * m1.array()).sum();
    const double a_det = d0 - d1;
    const double b_det = (m0 + m1).determinant() - d0 - d1;
    double two_theta = 0.0;
    if (std::hypot(a_norm, b_norm) >= std::hypot(a_det, b_det)) {
        if (std::hypot(a_norm, b_norm) > 1e-14) two_theta = std::atan2(-a_norm, b_norm);
    } else {
        two_theta = std::atan2(-a_det, b_det);
    }
    const double c = std::cos(two_theta / 2), s = std::sin(two_theta / 2);
    const Eigen::Matrix2d r0 = c * m0 + s * m1;
    const Eigen::Matrix2d r1 = -s * m0 + c * m1;

    Eigen::JacobiSVD<Eigen::Matrix2d> svd0(r0, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Vector2d sigma = svd0.singularValues();
    const Eigen::Matrix2d n = svd0.matrixU().transpose() * r1 * svd0.matrixV();
    Eigen::JacobiSVD<Eigen::Matrix2d> svd1(n, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix2d p = svd1.matrixU(), q = svd1.matrixV();
    if (p.determinant() < 0) {
        p.col(1) *= -1.0;
        q.col(1) *= -1.0;
    }
    if (q.determinant() < 0) {
        // det n and det sigma differ in sign only if the balancing failed.
        throw MeskitError(ErrorCode::InternalInvariant, "could not balance the party-1 slices");
    }
    Mes3Family fam;
    fam.a = sigma[0] / sigma.norm();
    fam.beta_prime = fold_half_turn(std::atan2(p(0, 1), p(0, 0)));
    fam.beta = fold_half_turn(std::atan2(q(0, 1), q(0, 0)));
    return fam;
}

Protocol synth_ghz_zprotocol(const GhzStandardForm& target, const Tolerances& tol) {
    if (std::abs(target.z - 1.0) <= tol.zero) {
        throw MeskitError(ErrorCode::TargetInMes, "target has z = +-1 and cannot be reached this way");
    }
    const double mag2 = std::norm(target.z);
    const double p = 1.0 / (mag2 + 1.0 / mag2);
    const double b = target.gx[2];
    const double b_src = 2.0 * p * b * std::cos(2.0 * std::arg(target.z));
    const Mat2 h1 = x_local(target.gx[0]);
    const Mat2 h2 = x_local(target.gx[1]);
    const Mat2 h3 = x_local(b) * p_gamma(target.z);
    const Mat2 g3 = x_local(b_src);
    const Mat2 g3_inv = g3.inverse();

    Protocol pr;
    pr.source = FactoredState{Seed3::GHZ, {h1, h2, g3}};
    pr.target = FactoredState{Seed3::GHZ, {h1, h2, h3}};
    Round r;
    r.povm.party = 2;
    r.povm.elements = {std::sqrt(p) * h3 * g3_inv, std::sqrt(p) * h3 * pauli(1) * g3_inv};
    r.corrections = {{}, correction_on(3, {0, 1}, pauli(1))};
    pr.rounds.push_back(std::move(r));
    return pr;
}

Protocol synth_ghz_trivialparty_protocol(const GhzStandardForm& target, const Tolerances& tol) {
    if (std::abs(std::abs(target.z) - 1.0) > tol.zero) {
        throw MeskitError(ErrorCode::WrongShape, "trivial-party protocol needs |z| = 1");
    }
    int trivial = -1;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(target.gx[i]) <= tol.zero) {
            trivial = i;
            break;
        }
    }
    if (trivial < 0) throw MeskitError(ErrorCode::WrongShape, "no party has a trivial x-part");

    Protocol pr;
    pr.target = ghz_factored(target);
    // The trivial party's target local is a unitary times 1/sqrt(2).
    const Mat2 v = std::sqrt(2.0) * pr.target.locals[trivial];
    pr.source = FactoredState{Seed3::GHZ, {identity2(), identity2(), identity2()}};
    pr.source.locals[trivial] = v;
    for (int party = 0; party < 3; ++party) {
        if (party == trivial) continue;
        const Mat2& h = pr.target.locals[party];
        Round r;
        r.povm.party = party;
        r.povm.elements = {h, h * pauli(3)};
        r.corrections = {{}, correction_on(3, {trivial}, pauli(3))};
        pr.rounds.push_back(std::move(r));
    }
    return pr;
}

Protocol synth_w_protocol(const WStandardForm& target, const Tolerances& tol) {
    const auto& x = target.x;
    const double norm = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
    if (x[0] / norm <= tol.zero) throw MeskitError(ErrorCode::TargetInMes, "target has x0 = 0");
    Protocol pr;
    pr.target = w_factored(target);
    Mat2 g2 = Mat2::Zero();
    g2(0, 0) = std::sqrt(2.0) * x[3];
    g2(1, 1) = std::sqrt(2.0) * std::sqrt(x[0] * x[0] + x[2] * x[2]);
    pr.source = FactoredState{Seed3::W, {pr.target.locals[0], g2, identity2()}};
    const Mat2& h2 = pr.target.locals[1];
    const Mat2 g2_inv = g2.inverse();
    Round r;
    r.povm.party = 1;
    r.povm.elements = {h2 * g2_inv, h2 * pauli(3) * g2_inv};
    r.corrections = {{}, correction_on(3, {0, 2}, pauli(3))};
    pr.rounds.push_back(std::move(r));
    return pr;
}

Mat2 nonisolation_operator(double a_y, double a_z, const Mat2& u) {
    return u * local_from_bloch(Eigen::Vector3d(0.0, a_y, a_z));
}

Protocol synth_nonisolation_povm(const Mes3Family& fam, const Mat2& A, const Tolerances& tol) {
    const Mat2 k = A.adjoint() * A;
    const Complex trace = k.trace();
    const Complex trace_x = (k * pauli(1)).trace();
    if (std::abs(trace - 1.0) > tol.eq || std::abs(trace_x) > tol.eq) {
        throw MeskitError(ErrorCode::BadConstraint, "A must satisfy tr(A^dagger A) = 1 and tr(A^dagger A X) = 0");
    }
    Protocol pr;
    pr.source = family_factored(fam, tol);
    pr.target = pr.source;
    pr.target.locals[0] = A * pr.source.locals[0];
    const ProductOperator sym = family_symmetry(fam);
    Round r;
    r.povm.party = 0;
    r.povm.elements = {A, A * pauli(1)};
    r.corrections = {{}, {identity2(), sym[1], sym[2]}};
    pr.rounds.push_back(std::move(r));
    return pr;
}

}  // namespace meskit
