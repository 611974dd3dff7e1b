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

#include "meskit/four_qubit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "meskit/errors.hpp"

namespace meskit {
namespace {

constexpr double kOrderTol = 1e-9;
constexpr double kGaugeTol = 1e-10;

Mat2 axis_pauli(int axis) { return pauli(axis + 1); }

StateVector apply_ops(const ProductOperator& ops, const StateVector& v) { return apply_product(ops, v); }

Eigen::Matrix4cd relabeling_action(const ProductOperator& ops) {
    std::array<StateVector, 4> basis;
    for (int k = 0; k < 4; ++k) {
        std::array<Complex, 4> e{};
        e[k] = 1.0;
        basis[k] = seed4_vector_unchecked(SeedParams4::from_array(e));
    }
    Eigen::Matrix4cd m;
    for (int k = 0; k < 4; ++k) {
        const StateVector image = apply_ops(ops, basis[k]);
        Eigen::VectorXcd rest = image.amps;
        for (int j = 0; j < 4; ++j) {
            m(j, k) = basis[j].amps.dot(image.amps);
            rest -= m(j, k) * basis[j].amps;
        }
        if (rest.norm() > 1e-12) throw MeskitError(ErrorCode::InternalInvariant, "generator does not preserve the seed family");
    }
    return m;
}

// Action matrix up to a global phase, rounded for use as a map key.
std::vector<long long> action_key(const Eigen::Matrix4cd& m) {
    Complex phase = 1.0;
    for (int i = 0; i < 16; ++i) {
        if (std::abs(m.data()[i]) > 1e-6) {
            phase = std::conj(m.data()[i]) / std::abs(m.data()[i]);
            break;
        }
    }
    std::vector<long long> key;
    for (int i = 0; i < 16; ++i) {
        const Complex v = m.data()[i] * phase;
        key.push_back(std::llround(v.real() * 1e6));
        key.push_back(std::llround(v.imag() * 1e6));
    }
    return key;
}

// Lexicographic comparison treating differences below tol as ties.
template <typename Vec>
int tolerant_compare(const Vec& a, const Vec& b, double tol) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i] - tol) return -1;
        if (a[i] > b[i] + tol) return 1;
    }
    return 0;
}

double off_axis(const Eigen::Vector3d& b, int axis) {
    Eigen::Vector3d v = b;
    v[axis] = 0.0;
    return v.norm();
}

void require_four(const FactoredState& fs) {
    if (!std::holds_alternative<SeedParams4>(fs.seed) || fs.locals.size() != 4) {
        throw MeskitError(ErrorCode::WrongShape, "four-qubit operation needs a four-qubit factored state");
    }
}

void require_standard(const StandardForm4& sf) {
    for (const auto& b : sf.blochs) {
        if (!(b.norm() < 0.5)) throw MeskitError(ErrorCode::NotStandardForm, "bloch vector norm must be below 1/2");
    }
    const auto p = sf.seed.as_array();
    double norm2 = 0.0;
    for (const Complex& c : p) norm2 += std::norm(c);
    if (std::abs(norm2 - 1.0) > 1e-6) throw MeskitError(ErrorCode::NotStandardForm, "seed must have unit norm");
}

// Party d's local and the axis unitary for a two-outcome witness round.
Round two_outcome_round(int party, const Mat2& h, const Mat2& g, int axis, double p) {
    const Mat2 g_inv = g.inverse();
    const Mat2 w = axis_pauli(axis);
    Round r;
    r.povm.party = party;
    r.povm.elements = {std::sqrt(p) * h * g_inv, std::sqrt(1.0 - p) * h * w * g_inv};
    ProductOperator corr(4, w);
    corr[party] = identity2();
    r.corrections = {{}, corr};
    return r;
}

Round four_outcome_round(int party, const Mat2& h, const Mat2& g) {
    const Mat2 g_inv = g.inverse();
    Round r;
    r.povm.party = party;
    for (int k = 0; k < 4; ++k) {
        r.povm.elements.push_back(0.5 * h * pauli(k) * g_inv);
        ProductOperator corr(4, pauli(k));
        corr[party] = identity2();
        r.corrections.push_back(corr);
    }
    return r;
}

}  // namespace

const std::vector<SeedRelabeling>& seed_relabeling_group() {
    static const std::vector<SeedRelabeling> group = [] {
        const Mat2 I = identity2(), X = pauli(1), Z = pauli(3), H = hadamard(), S = phase_s();
        const std::vector<ProductOperator> generators = {
            {I, X, I, X},                                  // (b, a, d, c)
            {H, H, H, H},                                  // b <-> d
            {I, Z, I, Z},                                  // (d, c, b, a)
            {Z * S, Z * S.adjoint(), S, S.adjoint()},      // b <-> c
            {Z, Z, I, I},                                  // (a, -b, -c, d)
            {X, X, I, I},                                  // (a, b, -c, -d)
        };
        std::vector<SeedRelabeling> gens;
        for (const auto& ops : generators) gens.push_back({ops, relabeling_action(ops)});
        std::vector<SeedRelabeling> elems{{ProductOperator(4, I), Eigen::Matrix4cd::Identity()}};
        std::map<std::vector<long long>, int> seen{{action_key(elems[0].action), 0}};
        for (size_t head = 0; head < elems.size(); ++head) {
            for (const auto& gen : gens) {
                SeedRelabeling next;
                for (int i = 0; i < 4; ++i) next.ops.push_back(gen.ops[i] * elems[head].ops[i]);
                next.action = gen.action * elems[head].action;
                auto key = action_key(next.action);
                if (seen.count(key)) continue;
                seen.emplace(std::move(key), static_cast<int>(elems.size()));
                elems.push_back(std::move(next));
                if (elems.size() > 4096) throw MeskitError(ErrorCode::InternalInvariant, "seed relabeling group did not close");
            }
        }
        return elems;
    }();
    return group;
}

StandardForm4 standard_form4(const FactoredState& fs, const Tolerances& tol) {
    require_four(fs);
    const SeedParams4 seed = std::get<SeedParams4>(fs.seed);
    validate_seed4(seed, tol);
    validate_locals(fs, tol);
    const auto p_arr = seed.as_array();
    const Eigen::Vector4cd p(p_arr[0], p_arr[1], p_arr[2], p_arr[3]);

    // Choose the relabeling whose normalized image sorts first.
    const SeedRelabeling* best = nullptr;
    Eigen::Vector4cd best_q;
    std::array<double, 7> best_key{};
    for (const SeedRelabeling& el : seed_relabeling_group()) {
        Eigen::Vector4cd q = el.action * p;
        if (std::abs(q[0]) < 1e-12) continue;
        q *= std::conj(q[0]) / std::abs(q[0]) / q.norm();
        const std::array<double, 7> key = {-std::abs(q[0]), -std::abs(q[1]), -std::abs(q[2]), -std::abs(q[3]),
                                           std::arg(q[1]),  std::arg(q[2]),  std::arg(q[3])};
        if (best == nullptr || tolerant_compare(key, best_key, kOrderTol) < 0) {
            best = &el;
            best_q = q;
            best_key = key;
        }
    }

    StandardForm4 sf;
    sf.seed = SeedParams4{Complex(best_q[0].real(), 0.0), best_q[1], best_q[2], best_q[3]};
    for (int i = 0; i < 4; ++i) {
        sf.blochs[i] = normalized_gram(fs.locals[i] * best->ops[i].adjoint()).g;
    }
    // sigma_k^{(x)4} fixes every seed and flips two of the three components on
    // every party at once.
    std::array<double, 12> best_gauge{};
    std::array<Eigen::Vector3d, 4> best_blochs{};
    for (int k = 0; k < 4; ++k) {
        std::array<Eigen::Vector3d, 4> flipped = sf.blochs;
        std::array<double, 12> v{};
        for (int i = 0; i < 4; ++i) {
            for (int c = 0; c < 3; ++c) {
                if (k != 0 && c != k - 1) flipped[i][c] = -flipped[i][c];
                v[3 * i + c] = flipped[i][c];
            }
        }
        if (k == 0 || tolerant_compare(v, best_gauge, kGaugeTol) > 0) {
            best_gauge = v;
            best_blochs = flipped;
        }
    }
    sf.blochs = best_blochs;
    return sf;
}

FactoredState factored4(const StandardForm4& sf) {
    FactoredState fs{sf.seed, {}};
    for (const auto& b : sf.blochs) fs.locals.push_back(local_from_bloch(b));
    return fs;
}

double standard_form_distance(const StandardForm4& a, const StandardForm4& b) {
    double d = 0.0;
    const auto pa = a.seed.as_array(), pb = b.seed.as_array();
    for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(pa[k] - pb[k]));
    for (int i = 0; i < 4; ++i) d = std::max(d, (a.blochs[i] - b.blochs[i]).cwiseAbs().maxCoeff());
    return d;
}

bool lu_equivalent4(const FactoredState& a, const FactoredState& b, const Tolerances& tol) {
    return standard_form_distance(standard_form4(a, tol), standard_form4(b, tol)) <= tol.eq;
}

std::array<double, 4> eta_values(const std::array<double, 4>& p) {
    return {p[0] + p[1] + p[2] + p[3], p[0] + p[1] - p[2] - p[3], p[0] + p[2] - p[1] - p[3],
            p[0] + p[3] - p[1] - p[2]};
}

void validate_probabilities(const std::array<double, 4>& p, const Tolerances& tol) {
    double sum = 0.0;
    for (double v : p) {
        if (!std::isfinite(v) || v < -tol.eq) throw MeskitError(ErrorCode::BadProbabilities, "negative probability");
        sum += v;
    }
    if (std::abs(sum - 1.0) > tol.eq) throw MeskitError(ErrorCode::BadProbabilities, "probabilities must sum to 1");
}

PauliForm eta_map(const PauliForm& H, const std::array<double, 4>& p, const Tolerances& tol) {
    validate_probabilities(p, tol);
    const auto eta = eta_values(p);
    PauliForm out;
    out.c0 = H.c0 * eta[0];
    for (int i = 0; i < 3; ++i) out.g[i] = H.g[i] * eta[i + 1];
    return out;
}

bool hadamard_condition(const Eigen::Vector3d& h1, const Eigen::Vector3d& h2, const std::array<double, 4>& p,
                        const Tolerances& tol) {
    validate_probabilities(p, tol);
    const auto e = eta_values(p);
    const Eigen::Vector3d eta(e[1], e[2], e[3]);
    Eigen::Matrix3d n2;
    n2 << e[0], e[3], e[2], e[3], e[0], e[1], e[2], e[1], e[0];
    const Eigen::Matrix3d m = (h1 * h2.transpose()).cwiseProduct(eta * eta.transpose() - n2);
    return m.cwiseAbs().maxCoeff() < tol.eq;
}

std::string reach_case_name(ReachCase c) {
    switch (c) {
        case ReachCase::None: return "none";
        case ReachCase::TrivialTriple: return "trivial-triple";
        case ReachCase::AlignedAxis: return "aligned-axis";
    }
    return "unknown";
}

double decision_margin4(const StandardForm4& sf, const Tolerances& tol) {
    double margin = 0.5;
    auto consider = [&](double q) {
        if (q > tol.zero) margin = std::min(margin, q);
    };
    for (const auto& b : sf.blochs) {
        consider(b.norm());
        for (int w = 0; w < 3; ++w) consider(off_axis(b, w));
    }
    return margin;
}

namespace {

bool others_aligned(const StandardForm4& sf, int axis, int skip, double tol_zero) {
    for (int i = 0; i < 4; ++i) {
        if (i != skip && off_axis(sf.blochs[i], axis) > tol_zero) return false;
    }
    return true;
}

}  // namespace

ReachabilityVerdict reachable4(const StandardForm4& sf, const Tolerances& tol) {
    require_standard(sf);
    ReachabilityVerdict v;
    v.form = sf;
    v.margin = decision_margin4(sf, tol);
    int nonzero = 0, last = -1;
    for (int i = 0; i < 4; ++i) {
        if (sf.blochs[i].norm() > tol.zero) {
            ++nonzero;
            last = i;
        }
    }
    const FactoredState target = factored4(sf);
    if (nonzero == 1) {
        v.reachable = true;
        v.reach_case = ReachCase::TrivialTriple;
        v.party = last;
        Protocol pr;
        pr.target = target;
        pr.source = FactoredState{sf.seed, ProductOperator(4, local_from_bloch(Eigen::Vector3d::Zero()))};
        pr.rounds.push_back(four_outcome_round(last, target.locals[last], pr.source.locals[last]));
        v.witness = std::move(pr);
        return v;
    }
    if (nonzero == 0) return v;
    for (int w = 0; w < 3; ++w) {
        for (int d = 0; d < 4; ++d) {
            if (!others_aligned(sf, w, d, tol.zero) || off_axis(sf.blochs[d], w) <= tol.zero) continue;
            v.reachable = true;
            v.reach_case = ReachCase::AlignedAxis;
            v.axis = w;
            v.party = d;
            Protocol pr;
            pr.target = target;
            pr.source = target;
            Eigen::Vector3d src = Eigen::Vector3d::Zero();
            src[w] = sf.blochs[d][w];
            pr.source.locals[d] = local_from_bloch(src);
            pr.rounds.push_back(two_outcome_round(d, target.locals[d], pr.source.locals[d], w, 0.5));
            v.witness = std::move(pr);
            return v;
        }
    }
    return v;
}

ReachabilityVerdict reachable4(const FactoredState& h, const Tolerances& tol) {
    return reachable4(standard_form4(h, tol), tol);
}

ConvertibilityVerdict convertible4(const StandardForm4& sf, const Tolerances& tol) {
    require_standard(sf);
    ConvertibilityVerdict v;
    v.form = sf;
    v.margin = decision_margin4(sf, tol);
    const FactoredState source = factored4(sf);

    bool all_zero = true;
    for (const auto& b : sf.blochs) all_zero = all_zero && b.norm() == 0.0;
    if (all_zero) {
        v.convertible = true;
        v.party = 0;
        v.p = 0.25;
        Protocol pr;
        pr.source = source;
        pr.target = source;
        pr.target.locals[0] = local_from_bloch(Eigen::Vector3d(0.5 - kWitnessMargin, 0.0, 0.0));
        pr.rounds.push_back(four_outcome_round(0, pr.target.locals[0], source.locals[0]));
        v.witness = std::move(pr);
        return v;
    }

    int axis = -1, party = -1;
    for (int w = 0; w < 3 && party < 0; ++w) {
        for (int d = 0; d < 4; ++d) {
            if (others_aligned(sf, w, d, tol.zero) && off_axis(sf.blochs[d], w) > tol.zero) {
                axis = w;
                party = d;
                break;
            }
        }
    }
    for (int w = 0; w < 3 && party < 0; ++w) {
        if (others_aligned(sf, w, -1, tol.zero)) {
            axis = w;
            party = 0;
        }
    }
    if (party < 0) return v;
    v.convertible = true;
    v.axis = axis;
    v.party = party;

    const Eigen::Vector3d& g = sf.blochs[party];
    const double gw = g[axis];
    Eigen::Vector3d perp = g;
    perp[axis] = 0.0;
    const double radius = g.norm() < 0.5 - kWitnessMargin ? 0.5 - kWitnessMargin : 0.5 * (g.norm() + 0.5);
    const double room = std::sqrt(std::max(0.0, radius * radius - gw * gw));
    Eigen::Vector3d h = Eigen::Vector3d::Zero();
    h[axis] = gw;
    if (perp.norm() > 0.0) {
        const double shrink = perp.norm() / room;  // 2p - 1
        v.p = 0.5 * (1.0 + shrink);
        h += perp / shrink;
    } else {
        v.p = 0.5;
        h[(axis + 1) % 3] = room;
    }
    Protocol pr;
    pr.source = source;
    pr.target = source;
    pr.target.locals[party] = local_from_bloch(h);
    pr.rounds.push_back(two_outcome_round(party, pr.target.locals[party], source.locals[party], axis, v.p));
    v.witness = std::move(pr);
    return v;
}

ConvertibilityVerdict convertible4(const FactoredState& g, const Tolerances& tol) {
    return convertible4(standard_form4(g, tol), tol);
}

bool isolated4(const FactoredState& fs, const Tolerances& tol) {
    const StandardForm4 sf = standard_form4(fs, tol);
    return !reachable4(sf, tol).reachable && !convertible4(sf, tol).convertible;
}

}  // namespace meskit
