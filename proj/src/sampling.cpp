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

#include "meskit/sampling.hpp"

#include <cmath>
#include <numbers>

#include "meskit/errors.hpp"
#include "meskit/four_qubit.hpp"
#include "meskit/three_qubit.hpp"

namespace meskit {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

Mat2 Rng::haar_unitary() {
    Mat2 z;
    for (int i = 0; i < 4; ++i) z.data()[i] = complex_normal();
    Eigen::HouseholderQR<Mat2> qr(z);
    Mat2 q = qr.householderQ();
    const Mat2 r = qr.matrixQR();
    for (int k = 0; k < 2; ++k) {
        const double m = std::abs(r(k, k));
        if (m > 0.0) q.col(k) *= r(k, k) / m;
    }
    return q;
}

Eigen::Vector3d Rng::unit_vector() {
    Eigen::Vector3d v;
    do {
        v = Eigen::Vector3d(normal(), normal(), normal());
    } while (v.norm() < 1e-12);
    return v.normalized();
}

Eigen::Vector3d Rng::ball(double radius) {
    const double scale = radius * std::cbrt(uniform());
    return scale * unit_vector();
}

const std::vector<std::string>& sampler_specs() {
    static const std::vector<std::string> specs = {
        "3q-ghz", "3q-ghz-mes", "3q-ghz-random-z", "3q-w", "3q-w-x0zero", "3q-mes-family",
        "4q-generic", "4q-thm3-shape", "4q-thm2-case1", "4q-thm2-case2", "4q-aligned"};
    return specs;
}

const std::vector<std::string>& protocol_families() {
    static const std::vector<std::string> families = {"ghz-z",      "ghz-trivial", "w-x0", "nonisolation",
                                                      "thm2-case1", "thm2-case2",  "thm3"};
    return families;
}

Mat2 random_local(Rng& rng, double margin) {
    const Eigen::Vector3d g = rng.ball(0.5 - margin);
    return rng.haar_unitary() * local_from_bloch(g);
}

SeedParams4 random_seed4(Rng& rng, const Tolerances& tol) {
    for (;;) {
        SeedParams4 p{rng.complex_normal(), rng.complex_normal(), rng.complex_normal(), rng.complex_normal()};
        if (seed4_genericity_margin(p) > tol.generic) return p;
    }
}

namespace {

constexpr double kMinComponent = 0.02;

// Nonzero x-part with a random sign, bounded away from 0 and 1/2.
double signed_x_part(Rng& rng) {
    const double mag = rng.uniform(kMinComponent, 0.5 - kSampleMargin);
    return rng.uniform() < 0.5 ? -mag : mag;
}

Eigen::Vector3d on_axis(int axis, double value) {
    Eigen::Vector3d v = Eigen::Vector3d::Zero();
    v[axis] = value;
    return v;
}

GhzStandardForm random_ghz_form(Rng& rng, bool unimodular) {
    GhzStandardForm sf;
    for (double& g : sf.gx) g = signed_x_part(rng);
    const double mag = unimodular ? 1.0 : rng.uniform(1.05, 3.0);
    const double alpha_mag = rng.uniform(0.05, std::numbers::pi / 2 - 0.05);
    const double alpha = rng.uniform() < 0.5 ? -alpha_mag : alpha_mag;
    sf.z = std::polar(mag, alpha);
    return sf;
}

Mes3Family random_family(Rng& rng) {
    Mes3Family fam;
    fam.a = rng.uniform(0.05, 0.95);
    fam.beta = rng.uniform(-std::numbers::pi / 2, std::numbers::pi / 2);
    fam.beta_prime = rng.uniform(-std::numbers::pi / 2, std::numbers::pi / 2);
    return fam;
}

FactoredState with_random_lu(FactoredState fs, Rng& rng) {
    for (Mat2& g : fs.locals) g = rng.haar_unitary() * g;
    return fs;
}

// One distinguished party with an arbitrary bloch vector, the other three on
// a common axis.
FactoredState aligned_shape(Rng& rng, const Tolerances& tol, bool zero_others, double min_off_axis,
                            bool distinguished_on_axis) {
    const int axis = rng.index(3);
    const int d = rng.index(4);
    FactoredState fs{random_seed4(rng, tol), {}};
    for (int i = 0; i < 4; ++i) {
        Eigen::Vector3d b;
        if (i == d && !distinguished_on_axis) {
            do {
                b = rng.ball(0.5 - kSampleMargin);
                Eigen::Vector3d off = b;
                off[axis] = 0.0;
                if (off.norm() >= min_off_axis) break;
            } while (true);
        } else if (zero_others && i != d) {
            b = Eigen::Vector3d::Zero();
        } else {
            b = on_axis(axis, signed_x_part(rng));
        }
        fs.locals.push_back(rng.haar_unitary() * local_from_bloch(b));
    }
    return fs;
}

}  // namespace

FactoredState sample_one(const std::string& spec, Rng& rng, const Tolerances& tol) {
    if (spec == "3q-ghz") {
        return FactoredState{Seed3::GHZ, {random_local(rng), random_local(rng), random_local(rng)}};
    }
    if (spec == "3q-ghz-mes") {
        GhzStandardForm sf;
        for (double& g : sf.gx) g = signed_x_part(rng);
        return with_random_lu(ghz_factored(sf), rng);
    }
    if (spec == "3q-ghz-random-z") return with_random_lu(ghz_factored(random_ghz_form(rng, false)), rng);
    if (spec == "3q-w") return FactoredState{Seed3::W, {random_local(rng), random_local(rng), random_local(rng)}};
    if (spec == "3q-w-x0zero") {
        WStandardForm sf{{0.0, rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0)}};
        return with_random_lu(w_factored(sf), rng);
    }
    if (spec == "3q-mes-family") return with_random_lu(family_factored(random_family(rng), tol), rng);
    if (spec == "4q-generic") {
        FactoredState fs{random_seed4(rng, tol), {}};
        for (int i = 0; i < 4; ++i) fs.locals.push_back(random_local(rng));
        return fs;
    }
    if (spec == "4q-thm3-shape") return aligned_shape(rng, tol, false, 0.0, false);
    if (spec == "4q-thm2-case1") return aligned_shape(rng, tol, true, 0.0, false);
    if (spec == "4q-thm2-case2") return aligned_shape(rng, tol, false, 0.05, false);
    if (spec == "4q-aligned") return aligned_shape(rng, tol, false, 0.0, true);
    throw MeskitError(ErrorCode::BadSpec, "unknown sampler spec '" + spec + "'");
}

std::vector<FactoredState> sample(const std::string& spec, int count, std::uint64_t seed, const Tolerances& tol) {
    if (count < 1) throw MeskitError(ErrorCode::BadSpec, "count must be at least 1");
    Rng rng(seed);
    std::vector<FactoredState> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(sample_one(spec, rng, tol));
    return out;
}

Protocol sample_protocol(const std::string& family, Rng& rng, const Tolerances& tol) {
    if (family == "ghz-z") {
        const GhzStandardForm raw = random_ghz_form(rng, rng.uniform() < 0.25);
        return synth_ghz_zprotocol(ghz_standard_form(ghz_factored(raw), tol), tol);
    }
    if (family == "ghz-trivial") {
        GhzStandardForm sf = random_ghz_form(rng, true);
        sf.gx[rng.index(3)] = 0.0;
        return synth_ghz_trivialparty_protocol(sf, tol);
    }
    if (family == "w-x0") {
        WStandardForm sf{{rng.uniform(0.05, 1.0), rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0)}};
        return synth_w_protocol(sf, tol);
    }
    if (family == "nonisolation") {
        const Eigen::Vector3d v = rng.ball(0.5 - kSampleMargin);
        const Mes3Family fam = random_family(rng);
        const Mat2 u = rng.haar_unitary();
        return synth_nonisolation_povm(fam, nonisolation_operator(v[1], v[2], u), tol);
    }
    auto require = [&](const auto& verdict) {
        if (!verdict.witness) throw MeskitError(ErrorCode::InternalInvariant, "sampled shape produced no witness");
        return *verdict.witness;
    };
    if (family == "thm2-case1") return require(reachable4(sample_one("4q-thm2-case1", rng, tol), tol));
    if (family == "thm2-case2") return require(reachable4(sample_one("4q-thm2-case2", rng, tol), tol));
    if (family == "thm3") return require(convertible4(sample_one("4q-thm3-shape", rng, tol), tol));
    throw MeskitError(ErrorCode::BadSpec, "unknown protocol family '" + family + "'");
}

}  // namespace meskit
