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

#include "meskit/lu3.hpp"

#include <cmath>

#include "meskit/errors.hpp"

namespace meskit {
namespace {

using Slices = std::array<Mat2, 2>;

Slices party1_slices(const StateVector& s) {
    Slices t;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) t[i](j, k) = s.amps[4 * i + 2 * j + k];
        }
    }
    return t;
}

struct Root {
    Complex x;
    Complex y;
};

// Roots of det(x T0 + y T1) = C x^2 + B x y + A y^2 on the projective line.
std::vector<Root> singular_combinations(const Slices& t, bool double_root) {
    const Complex C = t[0].determinant();
    const Complex A = t[1].determinant();
    const Complex B = t[0](0, 0) * t[1](1, 1) + t[1](0, 0) * t[0](1, 1) - t[0](0, 1) * t[1](1, 0) -
                      t[1](0, 1) * t[0](1, 0);
    constexpr double kTiny = 1e-14;
    std::vector<Root> roots;
    if (std::abs(C) >= std::abs(A)) {
        if (std::abs(C) <= kTiny) {
            roots.push_back({1.0, 0.0});
            if (!double_root) roots.push_back({0.0, 1.0});
            return roots;
        }
        if (double_root) {
            roots.push_back({-B / (2.0 * C), 1.0});
        } else {
            const Complex disc = std::sqrt(B * B - 4.0 * A * C);
            roots.push_back({(-B + disc) / (2.0 * C), 1.0});
            roots.push_back({(-B - disc) / (2.0 * C), 1.0});
        }
    } else {
        if (double_root) {
            roots.push_back({1.0, -B / (2.0 * A)});
        } else {
            const Complex disc = std::sqrt(B * B - 4.0 * A * C);
            roots.push_back({1.0, (-B + disc) / (2.0 * A)});
            roots.push_back({1.0, (-B - disc) / (2.0 * A)});
        }
    }
    return roots;
}

// Local unitaries (rows act on the computational basis) that bring the state
// into the canonical frame for one root, plus the resulting coefficients.
struct CanonicalFrame {
    Mat2 u1, u2, u3;
    Slices coeffs;
};

CanonicalFrame canonical_frame(const Slices& t, const Root& r) {
    const double n = std::sqrt(std::norm(r.x) + std::norm(r.y));
    const Complex x = r.x / n, y = r.y / n;
    CanonicalFrame f;
    // Row i of u1 is conj(e_i): e0 = conj(x, y), e1 = (-y, x).
    f.u1 << x, y, -std::conj(y), std::conj(x);
    const Mat2 t0 = x * t[0] + y * t[1];
    const Mat2 t1 = -std::conj(y) * t[0] + std::conj(x) * t[1];
    Eigen::JacobiSVD<Mat2> svd(t0, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Mat2& U = svd.matrixU();
    const Mat2& V = svd.matrixV();
    f.u2 = U.adjoint();
    f.u3 = V.transpose();
    f.coeffs[0] = U.adjoint() * t0 * V;
    f.coeffs[1] = U.adjoint() * t1 * V;
    return f;
}

}  // namespace

double three_tangle(const StateVector& state) {
    const StateVector s = state.normalized();
    auto a = [&](int i, int j, int k) { return s.amps[4 * i + 2 * j + k]; };
    const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                       a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                       a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                       a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
    const Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                       a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                       a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                       a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                       a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                       a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
    const Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                       a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

std::vector<Lu3Canonical> lu3_canonical_forms(const StateVector& state, const Tolerances& tol) {
    if (state.n_parties != 3) throw MeskitError(ErrorCode::InvalidInput, "three-qubit state required");
    const StateVector s = state.normalized();
    const Slices t = party1_slices(s);
    const bool w_like = three_tangle(s) <= tol.tangle;
    std::vector<Lu3Canonical> out;
    for (const Root& r : singular_combinations(t, w_like)) {
        const CanonicalFrame f = canonical_frame(t, r);
        Lu3Canonical c;
        const Complex c000 = f.coeffs[0](0, 0);
        const Complex c100 = f.coeffs[1](0, 0), c101 = f.coeffs[1](0, 1);
        const Complex c110 = f.coeffs[1](1, 0), c111 = f.coeffs[1](1, 1);
        c.lambda = {std::abs(c000), std::abs(c100), std::abs(c101), std::abs(c110), std::abs(c111)};
        c.kappa = c100 * c111 * std::conj(c101) * std::conj(c110);
        out.push_back(c);
    }
    return out;
}

bool lu_equivalent3(const StateVector& a, const StateVector& b, double tol) {
    const auto fa = lu3_canonical_forms(a);
    const auto fb = lu3_canonical_forms(b);
    for (const auto& x : fa) {
        for (const auto& y : fb) {
            double diff = std::abs(x.kappa - y.kappa);
            for (int k = 0; k < 5; ++k) diff = std::max(diff, std::abs(x.lambda[k] - y.lambda[k]));
            if (diff <= tol) return true;
        }
    }
    return false;
}

std::string class3_name(Class3 c) {
    switch (c) {
        case Class3::GHZ: return "GHZ";
        case Class3::W: return "W";
        case Class3::Biseparable: return "biseparable";
        case Class3::Product: return "product";
    }
    return "unknown";
}

Classification3 classify3(const StateVector& state, const Tolerances& tol) {
    if (state.n_parties != 3) throw MeskitError(ErrorCode::InvalidInput, "classify3 needs a three-qubit state");
    if (state.norm() == 0.0) throw MeskitError(ErrorCode::InvalidInput, "zero state vector");
    Classification3 out;
    out.tangle = three_tangle(state);
    int rank_one = 0;
    int separated = -1;
    for (int k = 0; k < 3; ++k) {
        out.reduced_dets[k] = std::abs(reduced_density(state, k).determinant());
        if (out.reduced_dets[k] <= tol.tangle) {
            ++rank_one;
            separated = k;
        }
    }
    if (out.tangle > tol.tangle) {
        out.cls = Class3::GHZ;
    } else if (rank_one == 0) {
        out.cls = Class3::W;
    } else if (rank_one == 1) {
        out.cls = Class3::Biseparable;
        static const char* cuts[] = {"1|23", "2|13", "3|12"};
        out.cut = cuts[separated];
    } else {
        out.cls = Class3::Product;
        out.cut = "1|2|3";
    }
    return out;
}

FactoredState factor3(const StateVector& state, const Tolerances& tol) {
    const Classification3 cls = classify3(state, tol);
    if (cls.cls != Class3::GHZ && cls.cls != Class3::W) {
        throw MeskitError(ErrorCode::WrongShape, "state is not fully entangled (" + class3_name(cls.cls) + ")");
    }
    const Slices t = party1_slices(state);
    if (cls.cls == Class3::GHZ) {
        const auto roots = singular_combinations(t, false);
        const Root& w1 = roots[0];
        const Root& w2 = roots[1];
        // w1 annihilates a', w2 annihilates a under the bilinear pairing.
        const Eigen::Vector2cd a(-w2.y, w2.x);
        const Eigen::Vector2cd ap(-w1.y, w1.x);
        const Mat2 B = (w1.x * t[0] + w1.y * t[1]) / (w1.x * a[0] + w1.y * a[1]);
        const Mat2 Bp = (w2.x * t[0] + w2.y * t[1]) / (w2.x * ap[0] + w2.y * ap[1]);
        auto rank_one_factors = [](const Mat2& m) {
            Eigen::JacobiSVD<Mat2> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
            const double sigma = svd.singularValues()[0];
            Eigen::Vector2cd b = sigma * svd.matrixU().col(0);
            Eigen::Vector2cd c = svd.matrixV().col(0).conjugate();
            return std::pair{b, c};
        };
        const auto [b, c] = rank_one_factors(B);
        const auto [bp, cp] = rank_one_factors(Bp);
        FactoredState fs{Seed3::GHZ, {}};
        Mat2 g1, g2, g3;
        g1 << a[0], ap[0], a[1], ap[1];
        g2 << b[0], bp[0], b[1], bp[1];
        g3 << c[0], cp[0], c[1], cp[1];
        fs.locals = {g1, g2, g3};
        return fs;
    }
    const auto roots = singular_combinations(t, true);
    const CanonicalFrame f = canonical_frame(t, roots[0]);
    const Complex x0 = f.coeffs[1](0, 0);
    const Complex x1 = f.coeffs[0](0, 0);
    const Complex x2 = f.coeffs[1](1, 0);
    const Complex x3 = f.coeffs[1](0, 1);
    if (std::abs(x3) <= tol.zero || std::abs(x1) <= tol.zero || std::abs(x2) <= tol.zero) {
        throw MeskitError(ErrorCode::WrongShape, "W-class factorization hit a vanishing coefficient");
    }
    Mat2 g1, g2;
    g1 << 1.0, 0.0, 0.0, x1 / x3;
    g2 << x3, x0, 0.0, x2;
    FactoredState fs{Seed3::W, {}};
    fs.locals = {f.u1.adjoint() * pauli(1) * g1, f.u2.adjoint() * g2, f.u3.adjoint()};
    return fs;
}

}  // namespace meskit
