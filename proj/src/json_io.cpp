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

#include "meskit/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <string_view>

#include "meskit/errors.hpp"

namespace meskit::io {
namespace {

[[noreturn]] void bad(const std::string& what) { throw MeskitError(ErrorCode::InvalidInput, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

double number(const json& j, const char* what) {
    if (!j.is_number()) bad(std::string(what) + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) bad(std::string(what) + " must be finite");
    return v;
}

json ops_to_json(const ProductOperator& ops) {
    json arr = json::array();
    for (const Mat2& m : ops) arr.push_back(to_json(m));
    return arr;
}

ProductOperator ops_from(const json& j) {
    if (!j.is_array()) bad("operator list must be an array");
    ProductOperator ops;
    for (const json& m : j) ops.push_back(mat_from(m));
    return ops;
}

json vec3(const Eigen::Vector3d& v) { return json::array({v[0], v[1], v[2]}); }

void dump_into(const json& j, int indent, int depth, std::string& out) {
    const std::string pad = indent > 0 ? std::string(static_cast<size_t>(indent) * (depth + 1), ' ') : "";
    const std::string close_pad = indent > 0 ? std::string(static_cast<size_t>(indent) * depth, ' ') : "";
    const char* nl = indent > 0 ? "\n" : "";
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{";
            out += nl;
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ",";
                    out += nl;
                }
                first = false;
                out += pad + json(it.key()).dump() + (indent > 0 ? ": " : ":");
                dump_into(it.value(), indent, depth + 1, out);
            }
            out += nl + close_pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Short numeric arrays stay on one line.
            bool flat = j.size() <= 4;
            for (const json& e : j) flat = flat && (e.is_number() || e.is_boolean() || e.is_null());
            out += "[";
            if (!flat) out += nl;
            bool first = true;
            for (const json& e : j) {
                if (!first) {
                    out += ",";
                    out += flat ? (indent > 0 ? " " : "") : nl;
                }
                first = false;
                if (!flat) out += pad;
                dump_into(e, indent, depth + 1, out);
            }
            if (!flat) out += nl + close_pad;
            out += "]";
            return;
        }
        case json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
            // Keep floats floats on reparse, including -0.
            if (std::string_view(buf).find_first_of(".e") == std::string_view::npos) out += ".0";
            return;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

std::string axis_name(int axis) {
    static const char* names[] = {"x", "y", "z"};
    return axis >= 0 && axis < 3 ? names[axis] : "none";
}

json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json to_json(const Mat2& m) {
    return json::array({json::array({to_json(m(0, 0)), to_json(m(0, 1))}), json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

json to_json(const PauliForm& p) { return {{"c0", p.c0}, {"g", vec3(p.g)}}; }

json to_json(const StateVector& s) {
    json amps = json::array();
    for (Eigen::Index i = 0; i < s.amps.size(); ++i) amps.push_back(to_json(s.amps[i]));
    return {{"n_parties", s.n_parties}, {"amplitudes", amps}};
}

json to_json(const FactoredState& fs) {
    json seed;
    if (std::holds_alternative<Seed3>(fs.seed)) {
        seed = std::get<Seed3>(fs.seed) == Seed3::GHZ ? "GHZ" : "W";
    } else {
        const SeedParams4& p = std::get<SeedParams4>(fs.seed);
        seed = {{"a", to_json(p.a)}, {"b", to_json(p.b)}, {"c", to_json(p.c)}, {"d", to_json(p.d)}};
    }
    return {{"seed", seed}, {"locals", ops_to_json(fs.locals)}};
}

json to_json(const Protocol& pr) {
    json rounds = json::array();
    for (const Round& r : pr.rounds) {
        json elements = json::array();
        for (const Mat2& m : r.povm.elements) elements.push_back(to_json(m));
        json corrections = json::object();
        for (size_t k = 0; k < r.corrections.size(); ++k) {
            if (!r.corrections[k].empty()) corrections[std::to_string(k + 1)] = ops_to_json(r.corrections[k]);
        }
        rounds.push_back({{"party", r.povm.party + 1}, {"elements", elements}, {"corrections", corrections}});
    }
    return {{"source", to_json(pr.source)}, {"target", to_json(pr.target)}, {"rounds", rounds}};
}

json to_json(const GhzStandardForm& sf) {
    return {{"class", "GHZ"},
            {"gx", json::array({sf.gx[0], sf.gx[1], sf.gx[2]})},
            {"z", to_json(sf.z)},
            {"z_abs", std::abs(sf.z)},
            {"alpha", std::arg(sf.z)},
            {"boundary", sf.boundary}};
}

json to_json(const WStandardForm& sf) {
    return {{"class", "W"}, {"x", json::array({sf.x[0], sf.x[1], sf.x[2], sf.x[3]})}};
}

json to_json(const Mes3Family& fam) { return {{"a", fam.a}, {"beta", fam.beta}, {"beta_prime", fam.beta_prime}}; }

json to_json(const Mes3Verdict& v) { return {{"in_mes", v.in_mes}, {"reason", v.reason}, {"margin", v.margin}}; }

json to_json(const Classification3& c) {
    json out = {{"class", class3_name(c.cls)},
                {"tangle", c.tangle},
                {"reduced_dets", json::array({c.reduced_dets[0], c.reduced_dets[1], c.reduced_dets[2]})}};
    if (!c.cut.empty()) out["cut"] = c.cut;
    return out;
}

json to_json(const StandardForm4& sf) {
    json blochs = json::array();
    for (const auto& b : sf.blochs) blochs.push_back(vec3(b));
    const SeedParams4& p = sf.seed;
    return {{"seed", {{"a", to_json(p.a)}, {"b", to_json(p.b)}, {"c", to_json(p.c)}, {"d", to_json(p.d)}}},
            {"blochs", blochs}};
}

json to_json(const SimulationReport& rep, bool include_states) {
    json branches = json::array();
    for (const BranchReport& b : rep.branches) {
        json outcomes = json::array();
        for (int o : b.outcomes) outcomes.push_back(o + 1);
        json br = {{"outcomes", outcomes},
                   {"probability", b.probability},
                   {"overlap", b.overlap},
                   {"matches_target", b.matches_target}};
        if (include_states) br["final_state"] = to_json(b.final_state);
        branches.push_back(br);
    }
    return {{"deterministic", rep.deterministic},
            {"total_probability", rep.total_probability},
            {"min_overlap", rep.min_overlap},
            {"max_povm_residual", rep.max_povm_residual},
            {"branches", branches}};
}

json to_json(const MonotoneReport& rep) {
    json dec = json::array();
    for (int p : rep.decreased_parties) dec.push_back(p + 1);
    return {{"passes", rep.passes},
            {"source_norms", rep.source_norms},
            {"target_norms", rep.target_norms},
            {"decreased_parties", dec}};
}

json to_json(const ReachabilityVerdict& v) {
    json out = {{"reachable", v.reachable},
                {"case", reach_case_name(v.reach_case)},
                {"axis", axis_name(v.axis)},
                {"party", v.party >= 0 ? json(v.party + 1) : json(nullptr)},
                {"margin", v.margin},
                {"standard_form", to_json(v.form)}};
    if (v.witness) out["witness"] = to_json(*v.witness);
    return out;
}

json to_json(const ConvertibilityVerdict& v) {
    json out = {{"convertible", v.convertible},
                {"axis", axis_name(v.axis)},
                {"party", v.party >= 0 ? json(v.party + 1) : json(nullptr)},
                {"margin", v.margin},
                {"standard_form", to_json(v.form)}};
    if (v.witness) {
        out["witness"] = to_json(*v.witness);
        out["p"] = v.p;
    }
    return out;
}

json to_json(const SepCertificate& c) {
    return {{"feasible", c.feasible},
            {"degenerate", c.degenerate},
            {"residual", c.residual},
            {"r", c.r},
            {"probabilities", c.probabilities},
            {"component_residuals", c.component_residuals}};
}

json to_json(const SymmetryReport& r) {
    return {{"exact", r.exact},         {"phase", r.phase},         {"scalar", r.scalar},
            {"max_exact", r.max_exact}, {"max_phase", r.max_phase}, {"max_scalar", r.max_scalar}};
}

Complex complex_from(const json& j) {
    if (j.is_number()) return {number(j, "complex"), 0.0};
    if (!j.is_array() || j.size() != 2) bad("complex numbers are [re, im] pairs");
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Mat2 mat_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
        j[1].size() != 2) {
        bad("matrices are 2x2 nested arrays");
    }
    Mat2 m;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) m(r, c) = complex_from(j[r][c]);
    }
    return m;
}

StateVector state_from(const json& j) {
    const json& amps = j.is_array() ? j : field(j, "amplitudes");
    if (!amps.is_array()) bad("amplitudes must be an array");
    Eigen::VectorXcd v(amps.size());
    for (size_t i = 0; i < amps.size(); ++i) v[i] = complex_from(amps[i]);
    int n = 0;
    while ((1u << n) < amps.size()) ++n;
    if ((1u << n) != amps.size()) bad("amplitude count must be a power of two");
    if (j.is_object() && j.contains("n_parties") && j.at("n_parties") != n) bad("n_parties does not match amplitudes");
    try {
        return StateVector(n, v);
    } catch (const MeskitError& e) {
        bad(e.what());
    }
}

FactoredState factored_from(const json& j) {
    const json& seed = field(j, "seed");
    FactoredState fs;
    if (seed.is_string()) {
        const std::string s = seed.get<std::string>();
        if (s == "GHZ") {
            fs.seed = Seed3::GHZ;
        } else if (s == "W") {
            fs.seed = Seed3::W;
        } else {
            bad("seed must be \"GHZ\", \"W\" or an {a, b, c, d} object");
        }
    } else if (seed.is_object()) {
        fs.seed = SeedParams4{complex_from(field(seed, "a")), complex_from(field(seed, "b")),
                              complex_from(field(seed, "c")), complex_from(field(seed, "d"))};
    } else {
        bad("seed must be a string or an object");
    }
    fs.locals = ops_from(field(j, "locals"));
    if (static_cast<int>(fs.locals.size()) != fs.n_parties()) bad("need one local operator per party");
    return fs;
}

Protocol protocol_from(const json& j) {
    Protocol pr;
    pr.source = factored_from(field(j, "source"));
    pr.target = factored_from(field(j, "target"));
    const int n = pr.source.n_parties();
    const json& rounds = j.contains("rounds") ? j.at("rounds") : json::array();
    if (!rounds.is_array()) bad("rounds must be an array");
    for (const json& rj : rounds) {
        Round r;
        const json& party = field(rj, "party");
        if (!party.is_number_integer() || party.get<int>() < 1 || party.get<int>() > n) bad("round party out of range");
        r.povm.party = party.get<int>() - 1;
        r.povm.elements = ops_from(field(rj, "elements"));
        r.corrections.assign(r.povm.elements.size(), {});
        if (rj.contains("corrections")) {
            const json& corr = rj.at("corrections");
            if (!corr.is_object()) bad("corrections must map outcome numbers to operator lists");
            for (auto it = corr.begin(); it != corr.end(); ++it) {
                size_t k = 0;
                try {
                    k = std::stoul(it.key());
                } catch (const std::exception&) {
                    bad("correction keys are 1-based outcome numbers");
                }
                if (k < 1 || k > r.povm.elements.size()) bad("correction outcome out of range");
                r.corrections[k - 1] = ops_from(it.value());
                if (static_cast<int>(r.corrections[k - 1].size()) != n) bad("corrections need one operator per party");
            }
        }
        pr.rounds.push_back(std::move(r));
    }
    return pr;
}

GhzStandardForm ghz_form_from(const json& j) {
    const json& gx = field(j, "gx");
    if (!gx.is_array() || gx.size() != 3) bad("gx must have three entries");
    GhzStandardForm sf;
    for (int i = 0; i < 3; ++i) {
        sf.gx[i] = number(gx[i], "gx");
        if (std::abs(sf.gx[i]) >= 0.5) bad("gx entries must lie in (-1/2, 1/2)");
    }
    sf.z = j.contains("z") ? complex_from(j.at("z")) : Complex(1.0);
    if (std::abs(sf.z) == 0.0) bad("z must be nonzero");
    return sf;
}

WStandardForm w_form_from(const json& j) {
    const json& x = field(j, "x");
    if (!x.is_array() || x.size() != 4) bad("x must have four entries");
    WStandardForm sf;
    for (int i = 0; i < 4; ++i) {
        sf.x[i] = number(x[i], "x");
        if (sf.x[i] < 0.0) bad("x entries must be nonnegative");
    }
    if (sf.x[1] <= 0.0 || sf.x[2] <= 0.0 || sf.x[3] <= 0.0) bad("x1, x2, x3 must be positive");
    return sf;
}

Mes3Family family_from(const json& j) {
    Mes3Family fam;
    fam.a = number(field(j, "a"), "a");
    fam.beta = number(field(j, "beta"), "beta");
    fam.beta_prime = number(field(j, "beta_prime"), "beta_prime");
    if (fam.a < 0.0 || fam.a > 1.0) bad("a must lie in [0, 1]");
    return fam;
}

SymmetryGroup group_from(const json& j, int n_parties) {
    if (j.is_string()) {
        if (j.get<std::string>() == "pauli4" && n_parties == 4) return pauli_group4();
        bad("named groups: \"pauli4\" (four parties)");
    }
    if (!j.is_array()) bad("group must be a name or a list of elements");
    SymmetryGroup g;
    for (size_t k = 0; k < j.size(); ++k) {
        const json& el = j[k];
        const json& ops = el.is_object() ? field(el, "ops") : el;
        g.elements.push_back(ops_from(ops));
        if (static_cast<int>(g.elements.back().size()) != n_parties) bad("group element has the wrong party count");
        g.labels.push_back(el.is_object() && el.contains("label") ? el.at("label").get<std::string>()
                                                                 : "S" + std::to_string(k + 1));
    }
    return g;
}

std::string dump(const json& j, int indent) {
    std::string out;
    dump_into(j, indent, 0, out);
    return out;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace meskit::io
