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

#include "meskit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <map>
#include <sstream>
#include <thread>
#include <variant>

#include "meskit/errors.hpp"
#include "meskit/four_qubit.hpp"
#include "meskit/lu3.hpp"
#include "meskit/protocol.hpp"
#include "meskit/sampling.hpp"
#include "meskit/sep.hpp"
#include "meskit/states.hpp"
#include "meskit/three_qubit.hpp"

namespace meskit::cli {
namespace {

[[noreturn]] void reject(const std::string& what) { throw MeskitError(ErrorCode::InvalidInput, what); }

const json& require_input(const std::optional<json>& input, const std::string& verb) {
    if (!input) reject(verb + " needs --input");
    return *input;
}

FactoredState factored_input(const json& j, const Tolerances& tol) {
    if (j.is_object() && j.contains("seed")) {
        FactoredState fs = io::factored_from(j);
        validate_locals(fs, tol);
        return fs;
    }
    const StateVector v = io::state_from(j);
    if (v.n_parties == 4) reject("four-qubit input must be given as {seed, locals}");
    if (v.n_parties != 3) reject("expected a three- or four-qubit state");
    return factor3(v, tol);
}

StateVector vector_input(const json& j, const Tolerances& tol) {
    if (j.is_object() && j.contains("seed")) return realize(io::factored_from(j), tol);
    return io::state_from(j);
}

json standard_form_json(const FactoredState& fs, const Tolerances& tol) {
    if (fs.is_ghz()) return io::to_json(ghz_standard_form(fs, tol));
    if (fs.is_w()) return io::to_json(w_standard_form(fs, tol));
    json out = io::to_json(standard_form4(fs, tol));
    out["class"] = "generic4";
    return out;
}

FactoredState four_party(const json& j, const Tolerances& tol, const std::string& verb) {
    FactoredState fs = factored_input(j, tol);
    if (fs.n_parties() != 4) reject(verb + " needs a four-qubit state");
    return fs;
}

json audit_json(const Protocol& pr, const Tolerances& tol, bool& ok) {
    const SimulationReport sim = simulate(pr, tol);
    const MonotoneReport mono = monotone_audit(pr, tol);
    ok = sim.deterministic && mono.passes;
    return {{"simulation", io::to_json(sim)}, {"monotone", io::to_json(mono)}};
}

Protocol synth_protocol(const json& j, const Tolerances& tol) {
    if (!j.is_object()) reject("synth input must be an object");
    const std::string family = j.value("family", "");
    const json& target = j.contains("target") ? j.at("target") : j;
    auto target_state = [&]() { return factored_input(target, tol); };
    if (family == "ghz-z" || family == "ghz-trivial") {
        const GhzStandardForm sf = target.contains("gx") ? io::ghz_form_from(target) : ghz_standard_form(target_state(), tol);
        return family == "ghz-z" ? synth_ghz_zprotocol(sf, tol) : synth_ghz_trivialparty_protocol(sf, tol);
    }
    if (family == "w-x0") {
        const WStandardForm sf = target.contains("x") ? io::w_form_from(target) : w_standard_form(target_state(), tol);
        return synth_w_protocol(sf, tol);
    }
    if (family == "nonisolation") {
        const Mes3Family fam = io::family_from(j.contains("source") ? j.at("source") : j);
        const Mat2 a = j.contains("A") ? io::mat_from(j.at("A"))
                                       : nonisolation_operator(j.value("a_y", 0.1), j.value("a_z", 0.1), identity2());
        return synth_nonisolation_povm(fam, a, tol);
    }
    if (family == "thm2" || family == "thm3") {
        const FactoredState fs = target_state();
        if (fs.n_parties() != 4) reject(family + " needs a four-qubit target");
        if (family == "thm2") {
            ReachabilityVerdict v = reachable4(fs, tol);
            if (!v.witness) throw MeskitError(ErrorCode::TargetInMes, "target is not reachable");
            return *v.witness;
        }
        ConvertibilityVerdict v = convertible4(fs, tol);
        if (!v.witness) throw MeskitError(ErrorCode::BadConstraint, "state is not convertible");
        return *v.witness;
    }
    reject("synth family must be one of ghz-z, ghz-trivial, w-x0, nonisolation, thm2, thm3");
}

std::array<PauliForm, 4> gram_array(const FactoredState& fs) {
    const std::vector<PauliForm> g = gram(fs);
    return {g[0], g[1], g[2], g[3]};
}

ProductOperator gram_ops(const FactoredState& fs) {
    ProductOperator out;
    for (const PauliForm& p : gram(fs)) out.push_back(p.matrix());
    return out;
}

Outcome sep_check(const json& j, const Tolerances& tol) {
    if (!j.is_object()) reject("sep-check input must be an object");
    if (j.contains("target") && !j.contains("source")) {
        const FactoredState h = four_party(j.at("target"), tol, "factorization search");
        const StandardForm4 sf = standard_form4(h, tol);
        const FactorizationSearch s = find_nontrivial_factorization(gram_array(factored4(sf)), tol);
        json out = {{"found", s.found}, {"residual", s.residual}, {"boxes", s.boxes}};
        if (s.found) out["p"] = s.p;
        return {out, s.found ? kOk : kNo};
    }
    ProductOperator H;
    ProductOperator G;
    if (j.contains("source")) {
        const FactoredState g = factored_input(j.at("source"), tol);
        const FactoredState h = factored_input(j.at("target"), tol);
        if (g.n_parties() != h.n_parties()) reject("source and target differ in party count");
        H = gram_ops(h);
        G = gram_ops(g);
    } else {
        auto ops = [](const json& arr) {
            if (!arr.is_array()) reject("H and G must be operator lists");
            ProductOperator o;
            for (const json& m : arr) o.push_back(io::mat_from(m));
            return o;
        };
        if (!j.contains("H") || !j.contains("G")) reject("sep-check needs source/target or H/G");
        H = ops(j.at("H"));
        G = ops(j.at("G"));
    }
    const int n = static_cast<int>(H.size());
    SymmetryGroup group;
    if (j.contains("group")) {
        group = io::group_from(j.at("group"), n);
    } else if (n == 4) {
        group = pauli_group4();
    } else {
        reject("a symmetry group is required for this party count");
    }
    const double r = j.contains("r") ? j.at("r").get<double>() : 1.0;
    const SepCertificate c = sep_feasible(H, G, group, r, tol);
    return {io::to_json(c), c.feasible && !c.degenerate ? kOk : kNo};
}

// Sweep instances: a state, or a protocol for simulate and synth.
using Instance = std::variant<FactoredState, Protocol>;

Instance draw(const std::string& verb, const std::string& spec, int index, Rng& rng, const Tolerances& tol) {
    if (verb == "simulate" || verb == "synth") {
        const auto& fams = protocol_families();
        const std::string family = spec == "all" ? fams[static_cast<size_t>(index) % fams.size()] : spec;
        return sample_protocol(family, rng, tol);
    }
    return sample_one(spec, rng, tol);
}

bool witness_ok(const std::optional<Protocol>& w, const Tolerances& tol) {
    if (!w) return false;
    return simulate(*w, tol).deterministic && monotone_audit(*w, tol).passes;
}

SweepInstanceResult evaluate(const std::string& verb, const Instance& inst, const Tolerances& tol) {
    SweepInstanceResult r;
    if (const Protocol* pr = std::get_if<Protocol>(&inst)) {
        const SimulationReport sim = simulate(*pr, tol);
        const MonotoneReport mono = monotone_audit(*pr, tol);
        r.verdict = sim.deterministic ? "deterministic" : "nondeterministic";
        r.margin = sim.min_overlap;
        r.has_margin = true;
        if (!sim.deterministic) r.failure = "synthesized protocol is not deterministic";
        if (!mono.passes) r.failure = "monotone audit failed";
        return r;
    }
    const FactoredState& fs = std::get<FactoredState>(inst);
    if (verb == "classify3") {
        const Classification3 c = classify3(realize(fs, tol), tol);
        r.verdict = class3_name(c.cls);
        r.margin = c.tangle;
        r.has_margin = true;
    } else if (verb == "standard-form") {
        r.verdict = "ok";
        bool same = false;
        if (fs.is_ghz()) {
            same = lu_equivalent3(realize(ghz_factored(ghz_standard_form(fs, tol))), realize(fs));
        } else if (fs.is_w()) {
            same = lu_equivalent3(realize(w_factored(w_standard_form(fs, tol))), realize(fs));
        } else {
            same = lu_equivalent4(factored4(standard_form4(fs, tol)), fs, tol);
        }
        if (!same) r.failure = "standard form is not LU-equivalent to the input";
    } else if (verb == "mes3") {
        const Mes3Verdict v = is_in_mes3(fs, tol);
        r.verdict = v.in_mes ? "in_mes" : "not_in_mes";
        r.margin = v.margin;
        r.has_margin = true;
        if (v.in_mes) {
            const FactoredState fam = family_factored(mes3_family_params(fs, tol), tol);
            if (!lu_equivalent3(realize(fam), realize(fs))) r.failure = "family parameters do not reproduce the state";
        }
    } else if (verb == "mes4" || verb == "reachable4") {
        const ReachabilityVerdict v = reachable4(fs, tol);
        r.verdict = verb == "mes4" ? (v.reachable ? "not_in_mes" : "in_mes") : (v.reachable ? "reachable" : "unreachable");
        r.margin = v.margin;
        r.has_margin = true;
        if (v.reachable && !witness_ok(v.witness, tol)) r.failure = "reachability witness failed simulation";
    } else if (verb == "convertible4") {
        const ConvertibilityVerdict v = convertible4(fs, tol);
        r.verdict = v.convertible ? "convertible" : "not_convertible";
        r.margin = v.margin;
        r.has_margin = true;
        if (v.convertible && !witness_ok(v.witness, tol)) r.failure = "convertibility witness failed simulation";
    } else if (verb == "isolated4") {
        const bool iso = isolated4(fs, tol);
        r.verdict = iso ? "isolated" : "not_isolated";
        r.margin = decision_margin4(standard_form4(fs, tol), tol);
        r.has_margin = true;
    } else if (verb == "sep-check") {
        const StandardForm4 sf = standard_form4(fs, tol);
        const ReachabilityVerdict v = reachable4(sf, tol);
        const FactorizationSearch s = find_nontrivial_factorization(gram_array(factored4(sf)), tol);
        r.verdict = s.found ? "feasible" : "infeasible";
        r.margin = v.margin;
        r.has_margin = true;
        if (s.found != v.reachable) r.failure = "closed-form decision disagrees with the factorization search";
    } else {
        reject("verb " + verb + " cannot be swept");
    }
    return r;
}

double env_tol_eq(double fallback) {
    const char* v = std::getenv("MESKIT_TOL_EQ");
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    const double d = std::strtod(v, &end);
    if (end == v || *end != '\0' || !(d > 0.0)) reject("MESKIT_TOL_EQ must be a positive number");
    return d;
}

std::string read_input(const std::string& source) {
    if (source == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) return source;
    std::ifstream f(source);
    if (!f) reject("cannot read input file " + source);
    return {std::istreambuf_iterator<char>(f), {}};
}

void summarize_into(const json& j, const std::string& prefix, std::ostringstream& os) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        const json& v = it.value();
        if (v.is_object()) {
            summarize_into(v, key, os);
        } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); })) {
            os << key << ": [" << v.size() << " entries]\n";
        } else {
            os << key << ": " << io::dump(v, 0) << "\n";
        }
    }
}

}  // namespace

const std::vector<std::string>& verbs() {
    static const std::vector<std::string> v = {"classify3",  "standard-form", "mes3",     "mes4",
                                               "reachable4", "convertible4",  "isolated4", "synth",
                                               "simulate",   "sep-check",     "sweep",    "sample"};
    return v;
}

Outcome execute(const Command& cmd, const std::optional<json>& input) {
    const Tolerances& tol = cmd.tol;
    const std::string& verb = cmd.verb;
    if (verb == "classify3") {
        const StateVector v = vector_input(require_input(input, verb), tol);
        if (v.n_parties != 3) reject("classify3 needs a three-qubit state");
        return {io::to_json(classify3(v, tol)), kOk};
    }
    if (verb == "standard-form") return {standard_form_json(factored_input(require_input(input, verb), tol), tol), kOk};
    if (verb == "mes3") {
        const FactoredState fs = factored_input(require_input(input, verb), tol);
        if (fs.n_parties() != 3) reject("mes3 needs a three-qubit state");
        const Mes3Verdict v = is_in_mes3(fs, tol);
        json out = io::to_json(v);
        out["standard_form"] = standard_form_json(fs, tol);
        if (v.in_mes) out["family"] = io::to_json(mes3_family_params(fs, tol));
        return {out, v.in_mes ? kOk : kNo};
    }
    if (verb == "mes4") {
        const ReachabilityVerdict v = reachable4(four_party(require_input(input, verb), tol, verb), tol);
        json out = io::to_json(v);
        out["in_mes"] = !v.reachable;
        return {out, v.reachable ? kNo : kOk};
    }
    if (verb == "reachable4") {
        const ReachabilityVerdict v = reachable4(four_party(require_input(input, verb), tol, verb), tol);
        return {io::to_json(v), v.reachable ? kOk : kNo};
    }
    if (verb == "convertible4") {
        const ConvertibilityVerdict v = convertible4(four_party(require_input(input, verb), tol, verb), tol);
        return {io::to_json(v), v.convertible ? kOk : kNo};
    }
    if (verb == "isolated4") {
        const FactoredState fs = four_party(require_input(input, verb), tol, verb);
        const StandardForm4 sf = standard_form4(fs, tol);
        const bool iso = !reachable4(sf, tol).reachable && !convertible4(sf, tol).convertible;
        json out = {{"isolated", iso}, {"margin", decision_margin4(sf, tol)}, {"standard_form", io::to_json(sf)}};
        return {out, iso ? kOk : kNo};
    }
    if (verb == "synth") {
        Protocol pr;
        if (input) {
            pr = synth_protocol(*input, tol);
        } else {
            if (cmd.spec.empty()) reject("synth needs --input or --spec <protocol family>");
            Rng rng(cmd.seed);
            pr = sample_protocol(cmd.spec, rng, tol);
        }
        return {io::to_json(pr), kOk};
    }
    if (verb == "simulate") {
        const Protocol pr = io::protocol_from(require_input(input, verb));
        bool ok = false;
        json out = audit_json(pr, tol, ok);
        out["deterministic"] = ok;
        return {out, ok ? kOk : kNo};
    }
    if (verb == "sep-check") return sep_check(require_input(input, verb), tol);
    if (verb == "sample") {
        if (cmd.spec.empty()) reject("sample needs --spec");
        if (cmd.count < 1) reject("--count must be at least 1");
        json states = json::array();
        for (const FactoredState& fs : sample(cmd.spec, cmd.count, cmd.seed, tol)) states.push_back(io::to_json(fs));
        return {{{"spec", cmd.spec}, {"seed", cmd.seed}, {"count", cmd.count}, {"states", states}}, kOk};
    }
    if (verb == "sweep") {
        if (cmd.sweep_verb.empty() || cmd.spec.empty()) reject("sweep needs --verb and --spec");
        json rep = sweep(cmd.sweep_verb, cmd.spec, cmd.count, cmd.seed, tol, cmd.threads);
        const bool clean = rep.at("failures").empty() && rep.at("errors").empty();
        return {rep, clean ? kOk : kInternal};
    }
    reject("unknown verb " + verb);
}

json sweep(const std::string& verb, const std::string& spec, int count, std::uint64_t seed, const Tolerances& tol,
           int threads) {
    static const std::vector<std::string> sweepable = {"classify3",    "standard-form", "mes3",      "mes4",
                                                       "reachable4",   "convertible4",  "isolated4", "synth",
                                                       "simulate",     "sep-check"};
    if (std::find(sweepable.begin(), sweepable.end(), verb) == sweepable.end()) reject("verb " + verb + " cannot be swept");
    if (count < 1) reject("--count must be at least 1");
    const bool protocols = verb == "simulate" || verb == "synth";
    if (protocols) {
        const auto& fams = protocol_families();
        if (spec != "all" && std::find(fams.begin(), fams.end(), spec) == fams.end()) {
            throw MeskitError(ErrorCode::BadSpec, "unknown protocol family " + spec);
        }
    } else {
        const auto& specs = sampler_specs();
        if (std::find(specs.begin(), specs.end(), spec) == specs.end()) {
            throw MeskitError(ErrorCode::BadSpec, "unknown sampler spec " + spec);
        }
    }

    const size_t n = static_cast<size_t>(count);
    std::vector<std::optional<Instance>> instances(n);
    std::vector<SweepInstanceResult> results(n);
    Rng rng(seed);
    for (size_t i = 0; i < n; ++i) {
        try {
            instances[i] = draw(verb, spec, static_cast<int>(i), rng, tol);
        } catch (const std::exception& e) {
            results[i].error = e.what();
        }
    }

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next++; i < n; i = next++) {
            if (!instances[i]) continue;
            try {
                results[i] = evaluate(verb, *instances[i], tol);
            } catch (const std::exception& e) {
                results[i] = {};
                results[i].error = e.what();
            }
        }
    };
    unsigned hw = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
    hw = std::min<unsigned>(hw, static_cast<unsigned>(n));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < hw; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    std::map<std::string, int> histogram;
    json failures = json::array();
    json errors = json::array();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double sum = 0.0;
    int with_margin = 0;
    for (size_t i = 0; i < n; ++i) {
        const SweepInstanceResult& r = results[i];
        if (!r.error.empty()) {
            ++histogram["error"];
            errors.push_back({{"index", i}, {"message", r.error}});
            continue;
        }
        ++histogram[r.verdict];
        if (!r.failure.empty()) failures.push_back({{"index", i}, {"message", r.failure}});
        if (r.has_margin) {
            lo = std::min(lo, r.margin);
            hi = std::max(hi, r.margin);
            sum += r.margin;
            ++with_margin;
        }
    }
    json hist = json::object();
    json fractions = json::object();
    for (const auto& [k, v] : histogram) {
        hist[k] = v;
        fractions[k] = static_cast<double>(v) / static_cast<double>(n);
    }
    json margin = json::object();
    if (with_margin > 0) margin = {{"min", lo}, {"max", hi}, {"mean", sum / with_margin}};
    return {{"verb", verb},          {"spec", spec},     {"count", count},       {"seed", seed},
            {"histogram", hist},     {"fractions", fractions}, {"margin", margin}, {"failures", failures},
            {"errors", errors}};
}

std::string summarize(const json& result) {
    std::ostringstream os;
    if (result.is_object()) {
        summarize_into(result, "", os);
    } else {
        os << io::dump(result, 0) << "\n";
    }
    return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Command cmd;
    CLI::App app{"meskit: deterministic LOCC transformations of three- and four-qubit pure states"};
    app.add_option("command", cmd.verb, "Operation to run")->required()->check(CLI::IsMember(verbs()));
    app.add_option("-i,--input", cmd.input, "Input JSON: a path, - for stdin, or inline JSON");
    app.add_option("-o,--output", cmd.output, "Write the result here instead of stdout");
    app.add_option("--seed", cmd.seed, "RNG seed for sample, sweep and synth");
    app.add_option("--count", cmd.count, "Number of instances for sample and sweep");
    app.add_option("--threads", cmd.threads, "Sweep worker threads, 0 for all cores");
    app.add_option("--spec", cmd.spec, "Sampler spec or protocol family");
    app.add_option("--verb", cmd.sweep_verb, "Verb evaluated by sweep");
    app.add_option("--format", cmd.format, "Output format")->check(CLI::IsMember({"json", "summary"}));
    std::optional<double> tol_eq;
    std::optional<double> tol_zero;
    app.add_option("--tol-eq", tol_eq, "Equality tolerance")->check(CLI::PositiveNumber);
    app.add_option("--tol-zero", tol_zero, "Tolerance for measure-zero classifications")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kRejected;
    }

    try {
        cmd.tol.eq = tol_eq ? *tol_eq : env_tol_eq(cmd.tol.eq);
        if (tol_zero) cmd.tol.zero = *tol_zero;
        std::optional<json> input;
        if (!cmd.input.empty()) input = io::parse(read_input(cmd.input));
        const Outcome res = execute(cmd, input);
        const std::string text = cmd.format == "summary" ? summarize(res.result) : io::dump(res.result) + "\n";
        if (cmd.output.empty()) {
            out << text;
        } else {
            std::ofstream f(cmd.output);
            if (!f) reject("cannot write " + cmd.output);
            f << text;
        }
        return res.exit_code;
    } catch (const MeskitError& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::InternalInvariant ? kInternal : kRejected;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace meskit::cli
