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

#include "meskit/sep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>

#include <unsupported/Eigen/NonLinearOptimization>

#include "meskit/errors.hpp"

namespace meskit {
namespace {

// (tr A, tr XA, tr YA, tr ZA) / 2 for Hermitian A.
Eigen::Vector4d pauli_components(const Mat2& a) {
    Eigen::Vector4d c;
    for (int k = 0; k < 4; ++k) c[k] = 0.5 * (pauli(k) * a).trace().real();
    return c;
}

Eigen::VectorXd kron_components(const std::vector<Eigen::Vector4d>& parts) {
    Eigen::VectorXd out = Eigen::VectorXd::Ones(1);
    for (const auto& p : parts) {
        Eigen::VectorXd next(out.size() * 4);
        for (Eigen::Index i = 0; i < out.size(); ++i) {
            for (int k = 0; k < 4; ++k) next[4 * i + k] = out[i] * p[k];
        }
        out = std::move(next);
    }
    return out;
}

constexpr int kExhaustiveLimit = 6;

// min |A q - b| over the affine hull sum q = 1, restricted to `support`.
Eigen::VectorXd affine_least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                                     const std::vector<int>& support) {
    const int m = static_cast<int>(support.size());
    Eigen::VectorXd q(m);
    if (m == 1) {
        q[0] = 1.0;
        return q;
    }
    const Eigen::VectorXd last = A.col(support.back());
    Eigen::MatrixXd reduced(A.rows(), m - 1);
    for (int j = 0; j < m - 1; ++j) reduced.col(j) = A.col(support[j]) - last;
    const Eigen::VectorXd y = reduced.completeOrthogonalDecomposition().solve(b - last);
    q.head(m - 1) = y;
    q[m - 1] = 1.0 - y.sum();
    return q;
}

// Lawson-Hanson active set method for min |C x - d| subject to x >= 0.
Eigen::VectorXd nnls(const Eigen::MatrixXd& C, const Eigen::VectorXd& d) {
    const int n = static_cast<int>(C.cols());
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    std::vector<bool> passive(n, false);
    const double eps = 1e-12 * std::max(1.0, C.norm());
    for (int outer = 0; outer < 3 * n + 10; ++outer) {
        const Eigen::VectorXd w = C.transpose() * (d - C * x);
        int t = -1;
        double best = eps;
        for (int j = 0; j < n; ++j) {
            if (!passive[j] && w[j] > best) {
                best = w[j];
                t = j;
            }
        }
        if (t < 0) break;
        passive[t] = true;
        for (int inner = 0; inner < 3 * n + 10; ++inner) {
            std::vector<int> idx;
            for (int j = 0; j < n; ++j) {
                if (passive[j]) idx.push_back(j);
            }
            Eigen::MatrixXd cp(C.rows(), idx.size());
            for (size_t j = 0; j < idx.size(); ++j) cp.col(j) = C.col(idx[j]);
            const Eigen::VectorXd zp = cp.completeOrthogonalDecomposition().solve(d);
            Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
            for (size_t j = 0; j < idx.size(); ++j) z[idx[j]] = zp[j];
            bool positive = true;
            for (int j : idx) positive = positive && z[j] > 0.0;
            if (positive) {
                x = z;
                break;
            }
            double alpha = 1.0;
            for (int j : idx) {
                if (z[j] <= 0.0) alpha = std::min(alpha, x[j] / (x[j] - z[j]));
            }
            x += alpha * (z - x);
            for (int j : idx) {
                if (x[j] <= eps) {
                    passive[j] = false;
                    x[j] = 0.0;
                }
            }
        }
    }
    return x;
}

}  // namespace

SymmetryGroup pauli_group4() {
    SymmetryGroup g;
    static const char* names[] = {"I", "X", "Y", "Z"};
    for (int k = 0; k < 4; ++k) {
        g.elements.push_back(ProductOperator(4, pauli(k)));
        g.labels.push_back(std::string(names[k]) + "^4");
    }
    return g;
}

ProductOperator ghz_symmetry(Complex gamma1, Complex gamma2, bool flip) {
    const Mat2 x = flip ? pauli(1) : identity2();
    return {x * p_gamma(gamma1), x * p_gamma(gamma2), x * p_gamma(1.0 / (gamma1 * gamma2))};
}

ProductOperator w_symmetry(Complex x, Complex y, Complex z) {
    Mat2 s1, s2, s3;
    s1 << x, y, 0.0, 1.0 / x;
    s2 << x, z, 0.0, 1.0 / x;
    s3 << x, -y - z, 0.0, 1.0 / x;
    return {s1, s2, s3};
}

ProductOperator w_phase_symmetry(double alpha) { return ProductOperator(3, z_rotation(alpha)); }

SepCertificate sep_feasible(const ProductOperator& H, const ProductOperator& G, const SymmetryGroup& group, double r,
                            const Tolerances& tol) {
    const size_t n = H.size();
    if (G.size() != n || n == 0) throw MeskitError(ErrorCode::WrongShape, "H and G need one operator per party");
    if (group.elements.empty()) throw MeskitError(ErrorCode::NonUnitaryGroup, "symmetry group is empty");
    for (const auto& el : group.elements) {
        if (el.size() != n) throw MeskitError(ErrorCode::WrongShape, "group element has the wrong party count");
        for (const Mat2& u : el) {
            if (!is_unitary(u, tol.eq)) throw MeskitError(ErrorCode::NonUnitaryGroup, "group element is not unitary");
        }
    }
    for (size_t i = 0; i < n; ++i) {
        if (!is_hermitian(H[i], tol.herm) || !is_hermitian(G[i], tol.herm)) {
            throw MeskitError(ErrorCode::NonHermitian, "grams must be Hermitian");
        }
    }
    const int K = static_cast<int>(group.elements.size());
    std::vector<Eigen::Vector4d> parts(n);
    for (size_t i = 0; i < n; ++i) parts[i] = pauli_components(G[i]);
    const Eigen::VectorXd b = r * kron_components(parts);
    Eigen::MatrixXd A(b.size(), K);
    for (int k = 0; k < K; ++k) {
        for (size_t i = 0; i < n; ++i) {
            const Mat2& s = group.elements[k][i];
            parts[i] = pauli_components(s.adjoint() * H[i] * s);
        }
        A.col(k) = kron_components(parts);
    }

    SepCertificate best;
    best.r = r;
    best.residual = std::numeric_limits<double>::infinity();
    auto consider = [&](const Eigen::VectorXd& full) {
        const Eigen::VectorXd diff = A * full - b;
        const double res = diff.cwiseAbs().maxCoeff();
        if (res < best.residual) {
            best.residual = res;
            best.probabilities.assign(full.data(), full.data() + K);
            best.component_residuals.assign(diff.data(), diff.data() + diff.size());
        }
    };

    if (K <= kExhaustiveLimit) {
        // Faces of the simplex by increasing support, so the sparsest
        // certificate wins.
        for (int size = 1; size <= K && best.residual > tol.feas; ++size) {
            for (unsigned mask = 1; mask < (1u << K); ++mask) {
                if (std::popcount(mask) != size) continue;
                std::vector<int> support;
                for (int k = 0; k < K; ++k) {
                    if (mask & (1u << k)) support.push_back(k);
                }
                const Eigen::VectorXd q = affine_least_squares(A, b, support);
                if (q.minCoeff() < -1e-12) continue;
                Eigen::VectorXd full = Eigen::VectorXd::Zero(K);
                for (int j = 0; j < size; ++j) full[support[j]] = std::max(0.0, q[j]);
                full /= full.sum();
                consider(full);
                if (best.residual <= tol.feas) break;
            }
        }
    } else {
        const double weight = 1e4 * std::max(1.0, A.cwiseAbs().maxCoeff());
        Eigen::MatrixXd C(A.rows() + 1, K);
        C.topRows(A.rows()) = A;
        C.row(A.rows()).setConstant(weight);
        Eigen::VectorXd d(b.size() + 1);
        d.head(b.size()) = b;
        d[b.size()] = weight;
        Eigen::VectorXd x = nnls(C, d);
        if (x.sum() > 0.0) {
            x /= x.sum();
            consider(x);
        }
    }
    best.feasible = best.residual <= tol.feas;
    int support = 0;
    for (double p : best.probabilities) support += p > tol.feas ? 1 : 0;
    best.degenerate = support <= 1;
    return best;
}

FactorizationCheck check_factorization(const std::array<PauliForm, 4>& H, const std::array<double, 4>& p,
                                       const Tolerances& tol) {
    // s(k, j) = +1 when sigma_k commutes with sigma_j.
    auto sign = [](int k, int j) { return (j == 0 || k == 0 || j == k) ? 1.0 : -1.0; };
    std::array<std::array<double, 4>, 4> h{};
    for (int i = 0; i < 4; ++i) {
        h[i][0] = H[i].c0;
        for (int j = 0; j < 3; ++j) h[i][j + 1] = H[i].g[j];
    }
    std::array<double, 4> eta{};
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) eta[j] += p[k] * sign(k, j);
    }
    FactorizationCheck out;
    for (int idx = 0; idx < 256; ++idx) {
        const int j[4] = {(idx >> 6) & 3, (idx >> 4) & 3, (idx >> 2) & 3, idx & 3};
        double coeff = 1.0;
        double rhs = 1.0;
        for (int i = 0; i < 4; ++i) {
            coeff *= h[i][j[i]];
            rhs *= eta[j[i]];
        }
        double lhs = 0.0;
        for (int k = 0; k < 4; ++k) {
            double s = p[k];
            for (int i = 0; i < 4; ++i) s *= sign(k, j[i]);
            lhs += s;
        }
        out.residual = std::max(out.residual, std::abs((lhs - rhs) * coeff));
    }
    out.holds = out.residual < tol.feas;
    return out;
}

namespace {

struct Interval {
    double lo, hi;
};

Interval mul(Interval a, Interval b) {
    const double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval ipow(Interval a, int n) {
    if (n == 0) return {1.0, 1.0};
    const double l = std::pow(a.lo, n), h = std::pow(a.hi, n);
    if (n % 2 == 1) return {l, h};
    if (a.lo >= 0.0) return {l, h};
    if (a.hi <= 0.0) return {h, l};
    return {0.0, std::max(l, h)};
}

// eta_target = prod_j eta_j^count_j, with eta_0 = 1.
struct Equation {
    int target;
    std::array<int, 4> count;
};

// Klein-group product of Pauli labels 1 = X, 2 = Y, 3 = Z.
int klein(int a, int b) { return a ^ b; }

constexpr std::array<std::array<double, 3>, 4> kVertex = {{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};

std::array<double, 4> probabilities_from_eta(const double* eta) {
    return {(1 + eta[0] + eta[1] + eta[2]) / 4, (1 + eta[0] - eta[1] - eta[2]) / 4,
            (1 - eta[0] + eta[1] - eta[2]) / 4, (1 - eta[0] - eta[1] + eta[2]) / 4};
}

struct Residuals {
    const std::vector<Equation>* eqs;
    using Scalar = double;
    using InputType = Eigen::VectorXd;
    using ValueType = Eigen::VectorXd;
    using JacobianType = Eigen::MatrixXd;
    enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

    int inputs() const { return 3; }
    int values() const { return std::max<int>(3, static_cast<int>(eqs->size())); }

    static double eta_of(const Eigen::VectorXd& x, int j) { return j == 0 ? 1.0 : x[j - 1]; }

    int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
        f.setZero(values());
        for (size_t e = 0; e < eqs->size(); ++e) {
            const Equation& q = (*eqs)[e];
            double prod = 1.0;
            for (int j = 1; j < 4; ++j) prod *= std::pow(x[j - 1], q.count[j]);
            f[e] = eta_of(x, q.target) - prod;
        }
        return 0;
    }

    int df(const Eigen::VectorXd& x, Eigen::MatrixXd& J) const {
        J.setZero(values(), 3);
        for (size_t e = 0; e < eqs->size(); ++e) {
            const Equation& q = (*eqs)[e];
            if (q.target != 0) J(e, q.target - 1) += 1.0;
            for (int m = 1; m < 4; ++m) {
                if (q.count[m] == 0) continue;
                double d = q.count[m] * std::pow(x[m - 1], q.count[m] - 1);
                for (int j = 1; j < 4; ++j) {
                    if (j != m) d *= std::pow(x[j - 1], q.count[j]);
                }
                J(e, m - 1) -= d;
            }
        }
        return 0;
    }
};

}  // namespace

FactorizationSearch find_nontrivial_factorization(const std::array<PauliForm, 4>& H, const Tolerances& tol,
                                                  double trivial_radius) {
    std::array<std::vector<int>, 4> support;
    std::array<bool, 4> active{};
    for (int i = 0; i < 4; ++i) {
        support[i].push_back(0);
        for (int j = 1; j < 4; ++j) {
            if (std::abs(H[i].g[j - 1]) > tol.zero) {
                support[i].push_back(j);
                active[j] = true;
            }
        }
    }
    std::map<std::array<int, 4>, Equation> unique;
    for (int a : support[0]) {
        for (int b : support[1]) {
            for (int c : support[2]) {
                for (int d : support[3]) {
                    Equation e{klein(klein(a, b), klein(c, d)), {0, 0, 0, 0}};
                    for (int j : {a, b, c, d}) e.count[j] += j == 0 ? 0 : 1;
                    if (e.count[1] + e.count[2] + e.count[3] <= 1) continue;
                    unique.emplace(e.count, e);
                }
            }
        }
    }
    std::vector<Equation> eqs;
    for (const auto& [key, e] : unique) eqs.push_back(e);

    auto distance_from_vertices = [&](const double* eta) {
        double dmin = std::numeric_limits<double>::infinity();
        for (const auto& v : kVertex) {
            double d = 0.0;
            for (int i = 0; i < 3; ++i) {
                if (active[i + 1]) d = std::max(d, std::abs(eta[i] - v[i]));
            }
            dmin = std::min(dmin, d);
        }
        return dmin;
    };

    FactorizationSearch out;
    struct Box {
        std::array<double, 3> lo, hi;
    };
    std::vector<Box> stack{{{-1, -1, -1}, {1, 1, 1}}};
    const double leaf_width = 1.0 / 32.0;
    const Residuals functor{&eqs};
    while (!stack.empty()) {
        const Box box = stack.back();
        stack.pop_back();
        ++out.boxes;
        bool pruned = false;
        for (int k = 0; k < 4 && !pruned; ++k) {
            double top = 1.0;
            for (int i = 0; i < 3; ++i) {
                const double s = (k == 0 || i == k - 1) ? 1.0 : -1.0;
                top += std::max(s * box.lo[i], s * box.hi[i]);
            }
            pruned = top < -1e-12;
        }
        for (int k = 0; k < 4 && !pruned; ++k) {
            bool inside = true;
            for (int i = 0; i < 3 && inside; ++i) {
                if (!active[i + 1]) continue;
                inside = box.lo[i] > kVertex[k][i] - trivial_radius && box.hi[i] < kVertex[k][i] + trivial_radius;
            }
            pruned = inside;
        }
        for (size_t e = 0; e < eqs.size() && !pruned; ++e) {
            Interval prod{1.0, 1.0};
            for (int j = 1; j < 4; ++j) prod = mul(prod, ipow({box.lo[j - 1], box.hi[j - 1]}, eqs[e].count[j]));
            const Interval t = eqs[e].target == 0 ? Interval{1.0, 1.0}
                                                  : Interval{box.lo[eqs[e].target - 1], box.hi[eqs[e].target - 1]};
            pruned = t.hi - prod.lo < -1e-12 || t.lo - prod.hi > 1e-12;
        }
        if (pruned) continue;

        int widest = 0;
        for (int i = 1; i < 3; ++i) {
            if (box.hi[i] - box.lo[i] > box.hi[widest] - box.lo[widest]) widest = i;
        }
        if (box.hi[widest] - box.lo[widest] > leaf_width) {
            const double mid = 0.5 * (box.lo[widest] + box.hi[widest]);
            Box left = box, right = box;
            left.hi[widest] = mid;
            right.lo[widest] = mid;
            stack.push_back(right);
            stack.push_back(left);
            continue;
        }
        Eigen::VectorXd x(3);
        for (int i = 0; i < 3; ++i) x[i] = 0.5 * (box.lo[i] + box.hi[i]);
        Residuals f = functor;
        Eigen::LevenbergMarquardt<Residuals> lm(f);
        lm.parameters.xtol = 1e-15;
        lm.parameters.ftol = 1e-15;
        lm.parameters.maxfev = 200;
        lm.minimize(x);
        auto p = probabilities_from_eta(x.data());
        bool in_simplex = true;
        for (double& v : p) {
            in_simplex = in_simplex && v >= -1e-9;
            v = std::max(0.0, v);
        }
        if (!in_simplex) continue;
        const double sum = p[0] + p[1] + p[2] + p[3];
        for (double& v : p) v /= sum;
        const std::array<double, 3> eta = {p[0] + p[1] - p[2] - p[3], p[0] + p[2] - p[1] - p[3],
                                           p[0] + p[3] - p[1] - p[2]};
        if (distance_from_vertices(eta.data()) < 0.5 * trivial_radius) continue;
        const FactorizationCheck check = check_factorization(H, p, tol);
        if (check.holds) {
            out.found = true;
            out.p = p;
            out.residual = check.residual;
            return out;
        }
    }
    return out;
}

SymmetryReport verify_symmetry(const SymmetryGroup& group, const StateVector& seed) {
    SymmetryReport rep;
    const double n2 = seed.amps.squaredNorm();
    for (const auto& el : group.elements) {
        const StateVector image = apply_product(el, seed);
        const Complex ip = seed.amps.dot(image.amps);
        const double exact = (image.amps - seed.amps).norm() / std::sqrt(n2);
        const Complex unit = std::abs(ip) > 0.0 ? ip / std::abs(ip) : Complex(1.0);
        const double phase = (image.amps - unit * seed.amps).norm() / std::sqrt(n2);
        const double scalar = (image.amps - (ip / n2) * seed.amps).norm() / std::sqrt(n2);
        rep.exact.push_back(exact);
        rep.phase.push_back(phase);
        rep.scalar.push_back(scalar);
        rep.max_exact = std::max(rep.max_exact, exact);
        rep.max_phase = std::max(rep.max_phase, phase);
        rep.max_scalar = std::max(rep.max_scalar, scalar);
    }
    return rep;
}

}  // namespace meskit
