// Copyright 2026 The pauli-dfs Authors
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

#include "pauli_dfs/report.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include "pauli_dfs/errors.h"
#include "pauli_dfs/state_spec.h"

namespace pdfs {

namespace {

using nlohmann::json;

json complex_to_json(Complex c) {
    return json::array({c.real(), c.imag()});
}

Complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("expected an [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json amplitudes_to_json(const std::vector<Complex> &v) {
    json out = json::array();
    for (const auto &c : v) {
        out.push_back(complex_to_json(c));
    }
    return out;
}

std::vector<Complex> amplitudes_from_json(const json &j) {
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto &c : j) {
        out.push_back(complex_from_json(c));
    }
    return out;
}

std::vector<Complex> to_std(const StateVector &v) {
    return std::vector<Complex>(v.data(), v.data() + v.size());
}

json summary_to_json(const SubgroupSummary &s) {
    return json{{"n_qubits", s.n_qubits},
                {"generators", s.generators},
                {"elements", s.elements},
                {"order", s.order},
                {"is_abelian", s.is_abelian},
                {"contains_minus_identity", s.contains_minus_identity},
                {"contains_imaginary_identity", s.contains_imaginary_identity}};
}

SubgroupSummary summary_from_json(const json &j) {
    SubgroupSummary s;
    s.n_qubits = j.at("n_qubits").get<std::size_t>();
    s.generators = j.at("generators").get<std::vector<std::string>>();
    s.elements = j.at("elements").get<std::vector<std::string>>();
    s.order = j.at("order").get<std::size_t>();
    s.is_abelian = j.at("is_abelian").get<bool>();
    s.contains_minus_identity = j.at("contains_minus_identity").get<bool>();
    s.contains_imaginary_identity = j.at("contains_imaginary_identity").get<bool>();
    return s;
}

json verification_to_json(const VerificationSummary &v) {
    return json{{"trials", v.trials},
                {"seed", v.seed},
                {"max_residual", v.max_residual},
                {"failing_trials", v.failing_trials},
                {"passed", v.passed}};
}

VerificationSummary verification_from_json(const json &j) {
    VerificationSummary v;
    v.trials = j.at("trials").get<std::size_t>();
    v.seed = j.at("seed").get<std::uint64_t>();
    v.max_residual = j.at("max_residual").get<double>();
    v.failing_trials = j.at("failing_trials").get<std::size_t>();
    v.passed = j.at("passed").get<bool>();
    return v;
}

json basis_summary_to_json(const BasisSummary &b) {
    json vectors = json::array();
    for (const auto &v : b.vectors) {
        vectors.push_back(amplitudes_to_json(v));
    }
    return json{{"character_label", b.character_label}, {"multiplicity", b.multiplicity}, {"vectors", vectors}};
}

BasisSummary basis_summary_from_json(const json &j) {
    BasisSummary b;
    b.character_label = j.at("character_label").get<std::size_t>();
    b.multiplicity = j.at("multiplicity").get<std::size_t>();
    for (const auto &v : j.at("vectors")) {
        b.vectors.push_back(amplitudes_from_json(v));
    }
    return b;
}

BasisSummary summarize_basis(const DfsBasis &basis) {
    BasisSummary b;
    b.character_label = basis.character.label();
    b.multiplicity = basis.multiplicity();
    for (const auto &v : basis.vectors) {
        b.vectors.push_back(to_std(v));
    }
    return b;
}

const char *phase_class_name(std::optional<PhaseClass> c) {
    if (!c) {
        return "minus_identity_only";
    }
    return *c == PhaseClass::all_scalar_phases ? "all_scalar_phases" : "no_phase_factors";
}

std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_amplitude(Complex c) {
    constexpr double kZero = 1e-12;
    bool has_re = std::abs(c.real()) > kZero;
    bool has_im = std::abs(c.imag()) > kZero;
    if (has_re && !has_im) {
        return format_number(c.real());
    }
    if (has_im && !has_re) {
        return format_number(c.imag()) + "i";
    }
    std::string im = format_number(std::abs(c.imag()));
    return "(" + format_number(c.real()) + (c.imag() < 0 ? "-" : "+") + im + "i)";
}

std::string ket(std::size_t index, std::size_t n_qubits) {
    std::string bits(n_qubits, '0');
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if ((index >> (n_qubits - 1 - q)) & 1) {
            bits[q] = '1';
        }
    }
    return "|" + bits + ">";
}

std::string format_state(const std::vector<Complex> &v, std::size_t n_qubits) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) <= 1e-12) {
            continue;
        }
        std::string amp = format_amplitude(v[i]);
        if (!out.empty()) {
            bool negative = amp.front() == '-';
            out += negative ? " - " : " + ";
            if (negative) {
                amp.erase(0, 1);
            }
        }
        out += amp + ket(i, n_qubits);
    }
    return out.empty() ? "0" : out;
}

std::string format_values(const std::vector<unsigned> &exponents) {
    static const char *kNames[] = {"1", "i", "-1", "-i"};
    std::string out;
    for (unsigned e : exponents) {
        if (!out.empty()) {
            out += ' ';
        }
        out += kNames[e & 3];
    }
    return out;
}

void write_subgroup(std::ostream &out, const SubgroupSummary &s) {
    out << "subgroup on " << s.n_qubits << " qubits, order " << s.order << "\n";
    out << "  generators:";
    for (const auto &g : s.generators) {
        out << ' ' << g;
    }
    out << "\n  elements:  ";
    for (const auto &e : s.elements) {
        out << ' ' << e;
    }
    out << "\n  abelian: " << (s.is_abelian ? "yes" : "no")
        << "  -I: " << (s.contains_minus_identity ? "yes" : "no")
        << "  iI: " << (s.contains_imaginary_identity ? "yes" : "no") << "\n";
}

double q8_invariance_residual() {
    PauliSubgroup group = q8_group();
    double worst = 0;
    for (const auto &v : q8_invariant_subspaces()) {
        Eigen::MatrixXcd outside = Eigen::MatrixXcd::Identity(v.rows(), v.rows()) - v * v.adjoint();
        for (const auto &g : group.elements()) {
            double r = (outside * to_matrix(g) * v).norm();
            worst = std::max(worst, r);
        }
    }
    return worst;
}

}  // namespace

SubgroupSummary summarize(const PauliSubgroup &group) {
    SubgroupSummary s;
    s.n_qubits = group.n_qubits();
    for (const auto &g : group.generators()) {
        s.generators.push_back(format_pauli(g));
    }
    for (const auto &e : group.elements()) {
        s.elements.push_back(format_pauli(e));
    }
    s.order = group.order();
    s.is_abelian = group.is_abelian();
    s.contains_minus_identity = group.contains_minus_identity();
    s.contains_imaginary_identity = group.contains_imaginary_identity();
    return s;
}

nlohmann::json subgroup_to_json(const PauliSubgroup &group) {
    return summary_to_json(summarize(group));
}

PauliSubgroup subgroup_from_json(const nlohmann::json &j) {
    SubgroupSummary s = summary_from_json(j);
    std::vector<PauliElement> gens;
    for (const auto &g : s.generators) {
        gens.push_back(parse_pauli(g, s.n_qubits));
    }
    PauliSubgroup group = closure(gens, s.n_qubits);
    if (summarize(group).elements != s.elements) {
        throw std::invalid_argument("serialized elements do not match the closure of the generators");
    }
    return group;
}

nlohmann::json basis_to_json(const DfsBasis &basis) {
    return basis_summary_to_json(summarize_basis(basis));
}

std::vector<PauliElement> parse_generator_list(const std::vector<std::string> &args) {
    std::vector<std::string> tokens;
    for (const auto &arg : args) {
        std::size_t start = 0;
        while (start <= arg.size()) {
            std::size_t comma = arg.find(',', start);
            std::string token = arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (token.empty()) {
                throw ParseError("empty generator in '" + arg + "'", start);
            }
            tokens.push_back(token);
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
    }
    std::vector<PauliElement> out;
    std::optional<std::size_t> n;
    for (const auto &t : tokens) {
        try {
            out.push_back(parse_pauli(t, n));
        } catch (const ParseError &e) {
            throw ParseError("generator '" + t + "': " + e.what(), e.position());
        }
        n = out.back().n_qubits();
    }
    return out;
}

AnalysisReport cmd_analyze(const std::vector<std::string> &generators, const AnalyzeOptions &options) {
    auto started = std::chrono::steady_clock::now();
    std::vector<PauliElement> gens = parse_generator_list(generators);
    if (gens.empty()) {
        throw std::invalid_argument("at least one generator is required");
    }
    check_dense_limit(gens.front().n_qubits(), options.dense_limit);
    PauliSubgroup group = closure(gens);

    AnalysisReport report;
    report.subgroup = summarize(group);
    ReducibilityResult red = reducibility_sum(group, options.dense_limit);
    report.reducibility_sum = red.sum;
    report.reducibility = red.verdict == Reducibility::irreducible ? "irreducible" : "reducible";

    if (group.is_abelian()) {
        std::optional<PhaseClass> phase_class = phase_class_of(group);
        DimensionCheck check;
        check.phase_class = phase_class_name(phase_class);
        if (phase_class) {
            check.closed_form = dimension_formula(group.n_qubits(), group.order(), *phase_class);
        }
        std::optional<std::uint64_t> common;
        for (const Character &chi : characters(group)) {
            CharacterEntry entry;
            entry.label = chi.label();
            entry.values.assign(chi.exponents().begin(), chi.exponents().end());
            entry.multiplicity = multiplicity(group, chi);
            entry.supported = supports_dfs(group, chi);
            DfsBasis basis = dfs_basis(group, chi, options.dense_limit);
            entry.basis = summarize_basis(basis);
            if (entry.supported) {
                VerificationReport v = verify_dfs(group, basis, options.trials, options.seed);
                entry.verification =
                    VerificationSummary{options.trials, options.seed, v.max_residual, v.failing_trials, v.passed};
                if (!common) {
                    common = entry.multiplicity;
                } else if (*common != entry.multiplicity) {
                    check.uniform = false;
                }
                if (check.closed_form && *check.closed_form != entry.multiplicity) {
                    check.agrees = false;
                }
            }
            report.characters.push_back(std::move(entry));
        }
        check.agrees = check.agrees && check.uniform;
        report.dimension_check = check;
    }

    if (group.n_qubits() <= options.search_limit) {
        std::vector<JointSpaceSummary> spaces;
        for (const auto &s : nonabelian_one_dim_search(group, options.dense_limit).spaces) {
            spaces.push_back({s.dimension(), std::vector<unsigned>(s.exponents.begin(), s.exponents.end())});
        }
        report.one_dim_search = std::move(spaces);
    }

    if (options.timing) {
        report.timing_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    }
    return report;
}

const std::vector<std::string> &preset_generators(const std::string &name) {
    static const std::map<std::string, std::vector<std::string>> kPresets = {
        {"qz", {"ZI", "IZ"}},
        {"qx", {"XXII", "IIXX"}},
        {"q4", {"XXXX", "YYYY"}},
        {"q2z", {"ZZII", "ZIZI", "ZIIZ", "IZZI", "IZIZ", "IIZZ"}},
        {"q8", {"XXI", "IZZ", "-III", "+iXYZ"}},
    };
    auto it = kPresets.find(name);
    if (it == kPresets.end()) {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return it->second;
}

std::vector<std::string> preset_names() {
    return {"qz", "qx", "q4", "q2z", "q8"};
}

AnalysisReport cmd_preset(const std::string &name, const AnalyzeOptions &options) {
    AnalysisReport report = cmd_analyze(preset_generators(name), options);
    report.preset = name;
    if (name == "q8") {
        NonGenericSummary ng;
        ng.subspace_invariance_residual = q8_invariance_residual();
        ConspiringParameters p = random_conspiring_parameters(options.seed);
        KrausSet kraus = conspiring_q8_kraus(p.c1, p.c2, p.d1, p.d2, p.e1, p.e2);
        ng.constrained_normalization_error = kraus.normalization_error();
        ng.constrained_code_residual = code_dfs_residual(kraus, q8_code_states());
        GenericityProbe probe = q8_genericity_probe(options.seed, 64);
        ng.probe_draws = probe.draws;
        ng.probe_unconstrained_failures = probe.unconstrained_failures;
        ng.probe_constrained_failures = probe.constrained_failures;
        report.non_generic = ng;
    }
    return report;
}

bool verifications_passed(const AnalysisReport &report) {
    for (const auto &c : report.characters) {
        if (c.verification && !c.verification->passed) {
            return false;
        }
    }
    if (report.non_generic) {
        const auto &ng = *report.non_generic;
        if (ng.constrained_normalization_error > kKrausNormalizationTolerance ||
            ng.constrained_code_residual > 1e-10 || ng.probe_constrained_failures != 0) {
            return false;
        }
    }
    return true;
}

nlohmann::json to_json(const AnalysisReport &report) {
    json j;
    j["schema_version"] = report.schema_version;
    if (report.preset) {
        j["preset"] = *report.preset;
    }
    j["subgroup"] = summary_to_json(report.subgroup);
    if (report.reducibility_sum) {
        j["reducibility"] = {{"sum", *report.reducibility_sum}, {"verdict", report.reducibility.value_or("")}};
    }
    json chars = json::array();
    for (const auto &c : report.characters) {
        json e{{"label", c.label},
               {"value_exponents", c.values},
               {"multiplicity", c.multiplicity},
               {"supported", c.supported}};
        if (c.basis) {
            e["basis"] = basis_summary_to_json(*c.basis);
        }
        if (c.verification) {
            e["verification"] = verification_to_json(*c.verification);
        }
        chars.push_back(std::move(e));
    }
    j["characters"] = std::move(chars);
    if (report.dimension_check) {
        const auto &d = *report.dimension_check;
        json dj{{"phase_class", d.phase_class}, {"uniform", d.uniform}, {"agrees", d.agrees}};
        dj["closed_form"] = d.closed_form ? json(*d.closed_form) : json(nullptr);
        j["dimension_check"] = std::move(dj);
    }
    if (report.one_dim_search) {
        json spaces = json::array();
        for (const auto &s : *report.one_dim_search) {
            spaces.push_back({{"dimension", s.dimension}, {"value_exponents", s.values}});
        }
        j["one_dim_search"] = std::move(spaces);
    }
    if (report.non_generic) {
        const auto &ng = *report.non_generic;
        j["non_generic"] = {{"subspace_invariance_residual", ng.subspace_invariance_residual},
                            {"constrained_normalization_error", ng.constrained_normalization_error},
                            {"constrained_code_residual", ng.constrained_code_residual},
                            {"probe_draws", ng.probe_draws},
                            {"probe_unconstrained_failures", ng.probe_unconstrained_failures},
                            {"probe_constrained_failures", ng.probe_constrained_failures}};
    }
    if (report.timing_ms) {
        j["timing_ms"] = *report.timing_ms;
    }
    return j;
}

AnalysisReport analysis_report_from_json(const nlohmann::json &j) {
    AnalysisReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion) {
        throw std::invalid_argument("unsupported schema_version " + std::to_string(r.schema_version));
    }
    if (j.contains("preset")) {
        r.preset = j["preset"].get<std::string>();
    }
    r.subgroup = summary_from_json(j.at("subgroup"));
    if (j.contains("reducibility")) {
        r.reducibility_sum = j["reducibility"].at("sum").get<double>();
        r.reducibility = j["reducibility"].at("verdict").get<std::string>();
    }
    for (const auto &e : j.at("characters")) {
        CharacterEntry c;
        c.label = e.at("label").get<std::size_t>();
        c.values = e.at("value_exponents").get<std::vector<unsigned>>();
        c.multiplicity = e.at("multiplicity").get<std::uint64_t>();
        c.supported = e.at("supported").get<bool>();
        if (e.contains("basis")) {
            c.basis = basis_summary_from_json(e["basis"]);
        }
        if (e.contains("verification")) {
            c.verification = verification_from_json(e["verification"]);
        }
        r.characters.push_back(std::move(c));
    }
    if (j.contains("dimension_check")) {
        const auto &dj = j["dimension_check"];
        DimensionCheck d;
        d.phase_class = dj.at("phase_class").get<std::string>();
        if (!dj.at("closed_form").is_null()) {
            d.closed_form = dj["closed_form"].get<std::uint64_t>();
        }
        d.uniform = dj.at("uniform").get<bool>();
        d.agrees = dj.at("agrees").get<bool>();
        r.dimension_check = d;
    }
    if (j.contains("one_dim_search")) {
        std::vector<JointSpaceSummary> spaces;
        for (const auto &s : j["one_dim_search"]) {
            spaces.push_back(
                {s.at("dimension").get<std::size_t>(), s.at("value_exponents").get<std::vector<unsigned>>()});
        }
        r.one_dim_search = std::move(spaces);
    }
    if (j.contains("non_generic")) {
        const auto &nj = j["non_generic"];
        NonGenericSummary ng;
        ng.subspace_invariance_residual = nj.at("subspace_invariance_residual").get<double>();
        ng.constrained_normalization_error = nj.at("constrained_normalization_error").get<double>();
        ng.constrained_code_residual = nj.at("constrained_code_residual").get<double>();
        ng.probe_draws = nj.at("probe_draws").get<std::size_t>();
        ng.probe_unconstrained_failures = nj.at("probe_unconstrained_failures").get<std::size_t>();
        ng.probe_constrained_failures = nj.at("probe_constrained_failures").get<std::size_t>();
        r.non_generic = ng;
    }
    if (j.contains("timing_ms")) {
        r.timing_ms = j["timing_ms"].get<double>();
    }
    return r;
}

void write_text(std::ostream &out, const AnalysisReport &report) {
    if (report.preset) {
        out << "preset " << *report.preset << "\n";
    }
    write_subgroup(out, report.subgroup);
    if (report.reducibility_sum) {
        out << "natural representation: " << report.reducibility.value_or("") << " (sum |tr G|^2 = "
            << format_number(*report.reducibility_sum) << ")\n";
    }
    if (!report.subgroup.is_abelian) {
        out << "non-Abelian: no one-dimensional irreps, no generic DFS\n";
    }
    for (const auto &c : report.characters) {
        out << "character " << c.label << ": [" << format_values(c.values) << "] multiplicity " << c.multiplicity
            << (c.supported ? "" : " (unsupported)") << "\n";
        if (c.basis) {
            for (std::size_t k = 0; k < c.basis->vectors.size(); ++k) {
                out << "  v" << k << " = " << format_state(c.basis->vectors[k], report.subgroup.n_qubits) << "\n";
            }
        }
        if (c.verification) {
            out << "  verification: " << (c.verification->passed ? "pass" : "FAIL") << " ("
                << c.verification->trials << " trials, seed " << c.verification->seed << ", max residual "
                << format_number(c.verification->max_residual) << ")\n";
        }
    }
    if (report.dimension_check) {
        const auto &d = *report.dimension_check;
        out << "dimension formula: " << d.phase_class;
        if (d.closed_form) {
            out << ", closed form " << *d.closed_form;
        } else {
            out << ", no closed form";
        }
        out << ", " << (d.agrees ? "agrees" : "DISAGREES") << "\n";
    }
    if (report.one_dim_search) {
        out << "joint eigenspace search: " << report.one_dim_search->size() << " space(s)";
        for (const auto &s : *report.one_dim_search) {
            out << "\n  [" << format_values(s.values) << "] dimension " << s.dimension;
        }
        out << "\n";
    }
    if (report.non_generic) {
        const auto &ng = *report.non_generic;
        out << "invariant subspaces V1..V4: max residual " << format_number(ng.subspace_invariance_residual) << "\n";
        out << "constrained channel: normalization error " << format_number(ng.constrained_normalization_error)
            << ", code residual " << format_number(ng.constrained_code_residual) << "\n";
        out << "genericity probe: " << ng.probe_unconstrained_failures << "/" << ng.probe_draws
            << " unconstrained draws break the code, " << ng.probe_constrained_failures << "/" << ng.probe_draws
            << " constrained draws do\n";
    }
    if (report.timing_ms) {
        out << "elapsed: " << format_number(*report.timing_ms) << " ms\n";
    }
}

ChannelCommandReport cmd_channel(const std::vector<std::string> &generators, const std::string &state_spec,
                                 std::size_t trials, std::uint64_t seed, std::size_t dense_limit) {
    std::vector<PauliElement> gens = parse_generator_list(generators);
    if (gens.empty()) {
        throw std::invalid_argument("at least one generator is required");
    }
    check_dense_limit(gens.front().n_qubits(), dense_limit);
    PauliSubgroup group = closure(gens);
    StateVector psi = parse_state_spec(state_spec, group.n_qubits(), dense_limit);
    ChannelCommandReport r;
    r.subgroup = summarize(group);
    r.state = to_std(psi);
    r.trials = trials;
    r.seed = seed;
    r.scan = decoherence_scan(group, psi, trials, seed, 4, dense_limit);
    return r;
}

nlohmann::json to_json(const ChannelCommandReport &report) {
    json trials = json::array();
    for (const auto &t : report.scan.trials) {
        trials.push_back(
            {{"trial", t.trial}, {"purity", t.purity}, {"fidelity", t.fidelity}, {"trace_error", t.trace_error}});
    }
    return json{{"schema_version", report.schema_version},
                {"subgroup", summary_to_json(report.subgroup)},
                {"state", amplitudes_to_json(report.state)},
                {"trials", report.trials},
                {"seed", report.seed},
                {"scan",
                 {{"trials", trials},
                  {"min_purity", report.scan.min_purity},
                  {"mean_purity", report.scan.mean_purity},
                  {"min_fidelity", report.scan.min_fidelity},
                  {"mean_fidelity", report.scan.mean_fidelity},
                  {"max_trace_error", report.scan.max_trace_error}}}};
}

void write_text(std::ostream &out, const ChannelCommandReport &report) {
    write_subgroup(out, report.subgroup);
    out << "state: " << format_state(report.state, report.subgroup.n_qubits) << "\n";
    out << report.trials << " random group-algebra channels, seed " << report.seed << "\n";
    for (const auto &t : report.scan.trials) {
        out << "  trial " << t.trial << ": purity " << format_number(t.purity) << ", fidelity "
            << format_number(t.fidelity) << "\n";
    }
    out << "purity min " << format_number(report.scan.min_purity) << " mean " << format_number(report.scan.mean_purity)
        << "\nfidelity min " << format_number(report.scan.min_fidelity) << " mean "
        << format_number(report.scan.mean_fidelity) << "\nmax trace error "
        << format_number(report.scan.max_trace_error) << "\n";
}

}  // namespace pdfs
