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

#include "meskit/protocol.hpp"

#include <cmath>
#include <string>

#include "meskit/errors.hpp"

namespace meskit {

PovmCheck validate_povm(const Povm& povm, const Tolerances& tol) {
    Mat2 sum = Mat2::Zero();
    for (const Mat2& m : povm.elements) sum += m.adjoint() * m;
    PovmCheck out;
    out.residual = max_abs(sum - identity2());
    out.complete = !povm.elements.empty() && out.residual < tol.eq;
    return out;
}

ProductOperator correction_on(int n_parties, std::initializer_list<int> parties, const Mat2& u) {
    ProductOperator ops(n_parties, identity2());
    for (int p : parties) ops[p] = u;
    return ops;
}

namespace {

constexpr double kNegligibleProbability = 1e-14;

struct Partial {
    std::vector<int> outcomes;
    double probability;
    StateVector state;  // normalized
};

}  // namespace

SimulationReport simulate(const Protocol& protocol, const Tolerances& tol) {
    const int n = protocol.source.n_parties();
    if (protocol.target.n_parties() != n) {
        throw MeskitError(ErrorCode::WrongShape, "source and target have different party counts");
    }
    SimulationReport report;
    for (size_t r = 0; r < protocol.rounds.size(); ++r) {
        const Round& round = protocol.rounds[r];
        if (round.povm.party < 0 || round.povm.party >= n) {
            throw MeskitError(ErrorCode::WrongShape, "round " + std::to_string(r) + " names an invalid party");
        }
        const PovmCheck check = validate_povm(round.povm, tol);
        report.max_povm_residual = std::max(report.max_povm_residual, check.residual);
        if (!check.complete) {
            throw MeskitError(ErrorCode::IncompletePovm,
                              "round " + std::to_string(r) + " POVM residual " + std::to_string(check.residual));
        }
        for (const ProductOperator& corr : round.corrections) {
            if (!corr.empty() && static_cast<int>(corr.size()) != n) {
                throw MeskitError(ErrorCode::WrongShape, "correction list length differs from party count");
            }
            for (const Mat2& u : corr) {
                if (!is_unitary(u, tol.eq)) {
                    throw MeskitError(ErrorCode::NonUnitaryCorrection,
                                      "round " + std::to_string(r) + " has a non-unitary correction");
                }
            }
        }
    }

    std::vector<Partial> frontier{{{}, 1.0, realize(protocol.source, tol).normalized()}};
    for (const Round& round : protocol.rounds) {
        std::vector<Partial> next;
        for (const Partial& branch : frontier) {
            for (size_t k = 0; k < round.povm.elements.size(); ++k) {
                StateVector s = branch.state;
                apply_local(s, round.povm.party, round.povm.elements[k]);
                const double p = s.amps.squaredNorm();
                if (branch.probability * p <= kNegligibleProbability) continue;
                s.amps /= std::sqrt(p);
                if (k < round.corrections.size() && !round.corrections[k].empty()) {
                    s = apply_product(round.corrections[k], std::move(s));
                }
                Partial child{branch.outcomes, branch.probability * p, std::move(s)};
                child.outcomes.push_back(static_cast<int>(k));
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }

    const StateVector target = realize(protocol.target, tol);
    report.deterministic = true;
    for (Partial& branch : frontier) {
        BranchReport br;
        br.outcomes = std::move(branch.outcomes);
        br.probability = branch.probability;
        br.overlap = overlap_ratio(branch.state, target);
        br.matches_target = proportional_up_to_phase(branch.state, target, tol);
        br.final_state = std::move(branch.state);
        report.total_probability += br.probability;
        report.min_overlap = std::min(report.min_overlap, br.overlap);
        report.deterministic = report.deterministic && br.matches_target;
        report.branches.push_back(std::move(br));
    }
    if (std::abs(report.total_probability - 1.0) > tol.eq) report.deterministic = false;
    return report;
}

MonotoneReport monotone_audit(const Protocol& protocol, const Tolerances& tol) {
    MonotoneReport out;
    const auto gs = gram(protocol.source);
    const auto gt = gram(protocol.target);
    for (size_t i = 0; i < gs.size() && i < gt.size(); ++i) {
        out.source_norms.push_back(gs[i].bloch_norm());
        out.target_norms.push_back(gt[i].bloch_norm());
        if (out.target_norms.back() < out.source_norms.back() - tol.eq) {
            out.decreased_parties.push_back(static_cast<int>(i));
        }
    }
    out.passes = out.decreased_parties.empty() && gs.size() == gt.size();
    return out;
}

}  // namespace meskit
