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

#include <sstream>

#include "gtest/gtest.h"
#include "pauli_dfs/cli.h"
#include "pauli_dfs/errors.h"

using namespace pdfs;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(analyze, examples) {
    AnalysisReport qz = cmd_analyze({"ZI", "IZ"});
    ASSERT_EQ(qz.characters.size(), 4u);
    for (const auto &c : qz.characters) {
        ASSERT_EQ(c.multiplicity, 1u);
        ASSERT_TRUE(c.verification->passed);
    }
    AnalysisReport qx = cmd_analyze({"XXII", "IIXX"});
    ASSERT_EQ(qx.characters.size(), 4u);
    for (const auto &c : qx.characters) {
        ASSERT_EQ(c.multiplicity, 4u);
        ASSERT_EQ(c.basis->vectors.size(), 4u);
    }
    ASSERT_TRUE(qx.dimension_check->agrees);
    ASSERT_EQ(*qx.dimension_check->closed_form, 4u);

    AnalysisReport q8 = cmd_analyze({"XXI", "IZZ"});
    ASSERT_FALSE(q8.subgroup.is_abelian);
    ASSERT_TRUE(q8.characters.empty());
    ASSERT_TRUE(q8.one_dim_search->empty());
}

TEST(analyze, characters_sorted_by_label) {
    AnalysisReport r = cmd_analyze({"ZZII,ZIIZ", "IIZZ"});
    ASSERT_EQ(r.subgroup.order, 8u);
    for (std::size_t k = 0; k < r.characters.size(); ++k) {
        ASSERT_EQ(r.characters[k].label, k + 1);
    }
}

TEST(analyze, input_errors) {
    ASSERT_THROW(cmd_analyze({"XQ"}), ParseError);
    ASSERT_THROW(cmd_analyze({"XX", "X"}), ParseError);
    ASSERT_THROW(cmd_analyze({"XX,,ZZ"}), ParseError);
    ASSERT_THROW(cmd_analyze({}), std::invalid_argument);
    AnalyzeOptions small;
    small.dense_limit = 2;
    try {
        cmd_analyze({"XXX"}, small);
        FAIL();
    } catch (const SizeError &e) {
        ASSERT_NE(std::string(e.what()).find("dense limit of 2"), std::string::npos);
    }
}

TEST(preset, examples) {
    AnalysisReport q2z = cmd_preset("q2z");
    ASSERT_EQ(q2z.characters[0].multiplicity, 2u);
    const auto &v = q2z.characters[0].basis->vectors;
    ASSERT_EQ(v.size(), 2u);
    ASSERT_NEAR(std::abs(v[0][0]), 1, 1e-12);
    ASSERT_NEAR(std::abs(v[1][15]), 1, 1e-12);

    AnalysisReport q4 = cmd_preset("q4");
    const auto &b = *q4.characters[0].basis;
    ASSERT_EQ(b.vectors.size(), 4u);
    for (const auto &vec : b.vectors) {
        int nonzero = 0;
        for (const auto &amp : vec) {
            nonzero += std::abs(amp) > 1e-12;
        }
        ASSERT_EQ(nonzero, 2);
    }

    AnalysisReport q8 = cmd_preset("q8");
    ASSERT_TRUE(q8.non_generic.has_value());
    ASSERT_LT(q8.non_generic->subspace_invariance_residual, 1e-12);
    ASSERT_LT(q8.non_generic->constrained_code_residual, 1e-10);
    ASSERT_GE(q8.non_generic->probe_unconstrained_failures, 63u);
    ASSERT_TRUE(verifications_passed(q8));

    ASSERT_THROW(cmd_preset("q9"), std::invalid_argument);
}

TEST(report_json, round_trip_lossless) {
    for (const auto &name : preset_names()) {
        AnalyzeOptions options;
        options.trials = 4;
        options.seed = 3;
        options.timing = true;
        AnalysisReport r = cmd_preset(name, options);
        nlohmann::json j = to_json(r);
        ASSERT_EQ(j["schema_version"], 1);
        AnalysisReport back = analysis_report_from_json(nlohmann::json::parse(j.dump()));
        ASSERT_EQ(back, r) << name;
    }
}

TEST(report_json, deterministic) {
    AnalyzeOptions options;
    options.seed = 42;
    std::string a = to_json(cmd_preset("qx", options)).dump();
    std::string b = to_json(cmd_preset("qx", options)).dump();
    ASSERT_EQ(a, b);
    ASSERT_EQ(run_cli({"channel", "ZI", "IZ", "--state", "0.7071|00>+0.7071|11>", "--json"}).out,
              run_cli({"channel", "ZI", "IZ", "--state", "0.7071|00>+0.7071|11>", "--json"}).out);
}

TEST(report_json, subgroup_round_trip) {
    PauliSubgroup g = closure({parse_pauli("XXI"), parse_pauli("IZZ")});
    nlohmann::json j = subgroup_to_json(g);
    ASSERT_EQ(j["order"], 8);
    ASSERT_EQ(subgroup_from_json(j).elements(), g.elements());
    j["elements"][0] = "+XXX";
    ASSERT_THROW(subgroup_from_json(j), std::invalid_argument);
}

TEST(cli, exit_codes) {
    ASSERT_EQ(run_cli({"analyze", "ZI", "IZ"}).code, 0);
    ASSERT_EQ(run_cli({"analyze", "XXI", "IZZ"}).code, 0);
    CliResult refused = run_cli({"analyze", "XXI", "IZZ", "--require-dfs"});
    ASSERT_EQ(refused.code, 2);
    ASSERT_FALSE(refused.err.empty());
    ASSERT_EQ(run_cli({"analyze", "ZI", "IZ", "--require-dfs"}).code, 0);
    CliResult bad = run_cli({"analyze", "ZQ"});
    ASSERT_EQ(bad.code, 1);
    ASSERT_NE(bad.err.find("position 1"), std::string::npos);
    ASSERT_EQ(run_cli({"preset", "nope"}).code, 1);
    ASSERT_EQ(run_cli({}).code, 1);
    ASSERT_EQ(run_cli({"analyze", "ZI", "--json", "--text"}).code, 1);
    ASSERT_EQ(run_cli({"channel", "ZI", "IZ", "--state", "|0>"}).code, 1);
    ASSERT_EQ(run_cli({"--help"}).code, 0);
}

TEST(cli, channel_examples) {
    auto purity_min = [](const CliResult &r) {
        return nlohmann::json::parse(r.out)["scan"]["min_purity"].get<double>();
    };
    CliResult dfs = run_cli({"channel", "ZI", "IZ", "--state", "|00>", "--json"});
    ASSERT_EQ(dfs.code, 0);
    ASSERT_NEAR(purity_min(dfs), 1, 1e-9);
    ASSERT_LT(purity_min(run_cli({"channel", "ZI", "IZ", "--state", "0.7071|00>+0.7071|11>", "--json"})),
              1 - 1e-3);
    ASSERT_NEAR(purity_min(run_cli({"channel", "ZZII,ZIIZ,IIZZ", "--state", "|0000>", "--json"})), 1, 1e-9);
}

TEST(cli, text_output_uses_twelve_digits) {
    CliResult r = run_cli({"analyze", "XXXX", "YYYY"});
    ASSERT_EQ(r.code, 0);
    ASSERT_NE(r.out.find("0.707106781187|0000>"), std::string::npos) << r.out;
    ASSERT_EQ(r.out.find("0.7071067811865"), std::string::npos);
}

TEST(cli, json_has_schema_version) {
    CliResult r = run_cli({"preset", "qz", "--json", "--trials", "2"});
    ASSERT_EQ(r.code, 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["schema_version"], 1);
    ASSERT_EQ(j["characters"][0]["verification"]["trials"], 2);
    ASSERT_FALSE(j.contains("timing_ms"));
}
