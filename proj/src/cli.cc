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

#include "pauli_dfs/cli.h"

#include <ostream>

#include "CLI11.hpp"
#include "pauli_dfs/errors.h"
#include "pauli_dfs/report.h"

namespace pdfs::cli {

namespace {

struct CommonFlags {
    std::size_t trials = 32;
    std::uint64_t seed = 0;
    std::size_t dense_limit = kDefaultDenseLimit;
    bool json = false;
    bool text = false;
};

void add_common(CLI::App *cmd, CommonFlags &flags) {
    cmd->add_option("--trials", flags.trials, "Seeded random trials")->capture_default_str();
    cmd->add_option("--seed", flags.seed, "Base seed")->capture_default_str();
    cmd->add_option("--dense-limit", flags.dense_limit, "Largest qubit count realized as dense matrices")
        ->capture_default_str();
    auto *json = cmd->add_flag("--json", flags.json, "Emit a JSON report");
    auto *text = cmd->add_flag("--text", flags.text, "Emit a text report (default)");
    json->excludes(text);
}

void emit(std::ostream &out, const AnalysisReport &report, const CommonFlags &flags) {
    if (flags.json) {
        out << to_json(report).dump(2) << "\n";
    } else {
        write_text(out, report);
    }
}

int analysis_exit(const AnalysisReport &report, bool require_dfs, std::ostream &err) {
    if (require_dfs && !report.subgroup.is_abelian) {
        err << "refused: the subgroup is non-Abelian and has no decoherence-free subspace of this kind\n";
        return kAnalysisRefused;
    }
    if (!verifications_passed(report)) {
        err << "numeric failure: a verification did not pass\n";
        return kNumericFailure;
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Decoherence-free subspaces of Pauli subgroups", "pauli-dfs"};
    app.require_subcommand(1);

    CommonFlags flags;
    bool require_dfs = false;
    bool timing = false;
    std::vector<std::string> generators;
    std::string preset;
    std::string state;

    auto *analyze = app.add_subcommand("analyze", "Close generators into a subgroup and decompose it");
    analyze->add_option("generators", generators, "Pauli strings, space or comma separated")->required();
    add_common(analyze, flags);
    analyze->add_flag("--require-dfs", require_dfs, "Exit 2 unless the subgroup is Abelian");
    analyze->add_flag("--timing", timing, "Include wall-clock time in the report");

    auto *preset_cmd = app.add_subcommand("preset", "Analyze a built-in example: qz, qx, q4, q2z, q8");
    preset_cmd->add_option("name", preset, "Preset name")->required()->check(CLI::IsMember(preset_names()));
    add_common(preset_cmd, flags);
    preset_cmd->add_flag("--require-dfs", require_dfs, "Exit 2 unless the subgroup is Abelian");
    preset_cmd->add_flag("--timing", timing, "Include wall-clock time in the report");

    auto *channel = app.add_subcommand("channel", "Apply random group-algebra channels to a state");
    channel->add_option("generators", generators, "Pauli strings, space or comma separated")->required();
    channel->add_option("--state", state, "State, e.g. \"0.7071|00> + 0.7071|11>\"")->required();
    add_common(channel, flags);

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("pauli-dfs");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : storage) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    AnalyzeOptions options;
    options.trials = flags.trials;
    options.seed = flags.seed;
    options.dense_limit = flags.dense_limit;
    options.timing = timing;

    try {
        if (*analyze) {
            AnalysisReport report = cmd_analyze(generators, options);
            emit(out, report, flags);
            return analysis_exit(report, require_dfs, err);
        }
        if (*preset_cmd) {
            AnalysisReport report = cmd_preset(preset, options);
            emit(out, report, flags);
            return analysis_exit(report, require_dfs, err);
        }
        ChannelCommandReport report = cmd_channel(generators, state, flags.trials, flags.seed, flags.dense_limit);
        if (flags.json) {
            out << to_json(report).dump(2) << "\n";
        } else {
            write_text(out, report);
        }
        return kSuccess;
    } catch (const NumericError &e) {
        err << "numeric failure: " << e.what() << "\n";
        return kNumericFailure;
    } catch (const DegenerateDrawError &e) {
        err << "numeric failure: " << e.what() << "\n";
        return kNumericFailure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace pdfs::cli
