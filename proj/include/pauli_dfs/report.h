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

#ifndef PAULI_DFS_REPORT_H
#define PAULI_DFS_REPORT_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pauli_dfs/channel.h"
#include "pauli_dfs/dfs.h"
#include "pauli_dfs/subgroup.h"

namespace pdfs {

inline constexpr int kSchemaVersion = 1;

struct SubgroupSummary {
    std::size_t n_qubits = 0;
    std::vector<std::string> generators;
    std::vector<std::string> elements;
    std::size_t order = 0;
    bool is_abelian = true;
    bool contains_minus_identity = false;
    bool contains_imaginary_identity = false;
    bool operator==(const SubgroupSummary &) const = default;
};

SubgroupSummary summarize(const PauliSubgroup &group);

/// Subgroup JSON: {n_qubits, generators, elements, order, is_abelian,
/// contains_minus_identity, contains_imaginary_identity}.
nlohmann::json subgroup_to_json(const PauliSubgroup &group);
/// Rebuilds the group by closing the serialized generators; throws
/// std::invalid_argument when the stored elements disagree with the closure.
PauliSubgroup subgroup_from_json(const nlohmann::json &j);

/// DfsBasis JSON: {character_label, multiplicity, vectors}, each vector a list of
/// [re, im] amplitude pairs in computational-basis order.
nlohmann::json basis_to_json(const DfsBasis &basis);

struct VerificationSummary {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double max_residual = 0;
    std::size_t failing_trials = 0;
    bool passed = false;
    bool operator==(const VerificationSummary &) const = default;
};

struct BasisSummary {
    std::size_t character_label = 0;
    std::size_t multiplicity = 0;
    std::vector<std::vector<Complex>> vectors;
    bool operator==(const BasisSummary &) const = default;
};

struct CharacterEntry {
    std::size_t label = 0;
    std::vector<unsigned> values;  // exponents of i, aligned with subgroup.elements
    std::uint64_t multiplicity = 0;
    bool supported = false;
    std::optional<BasisSummary> basis;
    std::optional<VerificationSummary> verification;
    bool operator==(const CharacterEntry &) const = default;
};

struct DimensionCheck {
    std::string phase_class;  // "all_scalar_phases", "no_phase_factors" or "minus_identity_only"
    std::optional<std::uint64_t> closed_form;
    bool uniform = true;  // every supported character has the same multiplicity
    bool agrees = true;   // ... and it equals the closed form when there is one
    bool operator==(const DimensionCheck &) const = default;
};

struct JointSpaceSummary {
    std::size_t dimension = 0;
    std::vector<unsigned> values;
    bool operator==(const JointSpaceSummary &) const = default;
};

struct NonGenericSummary {
    double subspace_invariance_residual = 0;
    double constrained_normalization_error = 0;
    double constrained_code_residual = 0;
    std::size_t probe_draws = 0;
    std::size_t probe_unconstrained_failures = 0;
    std::size_t probe_constrained_failures = 0;
    bool operator==(const NonGenericSummary &) const = default;
};

struct AnalysisReport {
    int schema_version = kSchemaVersion;
    std::optional<std::string> preset;
    SubgroupSummary subgroup;
    std::optional<double> reducibility_sum;
    std::optional<std::string> reducibility;
    std::vector<CharacterEntry> characters;
    std::optional<DimensionCheck> dimension_check;
    std::optional<std::vector<JointSpaceSummary>> one_dim_search;
    std::optional<NonGenericSummary> non_generic;
    std::optional<double> timing_ms;

    bool operator==(const AnalysisReport &) const = default;
};

nlohmann::json to_json(const AnalysisReport &report);
AnalysisReport analysis_report_from_json(const nlohmann::json &j);

/// Human-readable rendering; amplitudes use 12 significant digits.
void write_text(std::ostream &out, const AnalysisReport &report);

struct AnalyzeOptions {
    std::size_t trials = 32;
    std::uint64_t seed = 0;
    std::size_t dense_limit = kDefaultDenseLimit;
    /// The brute-force joint-eigenspace search runs up to this many qubits.
    std::size_t search_limit = 8;
    bool timing = false;
};

/// closure -> characters -> multiplicities -> bases -> verification. Throws
/// ParseError/DimensionMismatch on bad input.
AnalysisReport cmd_analyze(const std::vector<std::string> &generators, const AnalyzeOptions &options = {});

/// Generator sets of the worked examples: qz, qx, q4, q2z, q8.
const std::vector<std::string> &preset_generators(const std::string &name);
std::vector<std::string> preset_names();

/// Throws std::invalid_argument for an unknown preset. q8 also gets the
/// non-generic construction checks.
AnalysisReport cmd_preset(const std::string &name, const AnalyzeOptions &options = {});

/// True when every verification in the report passed.
bool verifications_passed(const AnalysisReport &report);

struct ChannelCommandReport {
    int schema_version = kSchemaVersion;
    SubgroupSummary subgroup;
    std::vector<Complex> state;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    ScanReport scan;
};

ChannelCommandReport cmd_channel(const std::vector<std::string> &generators, const std::string &state_spec,
                                 std::size_t trials, std::uint64_t seed,
                                 std::size_t dense_limit = kDefaultDenseLimit);

nlohmann::json to_json(const ChannelCommandReport &report);
void write_text(std::ostream &out, const ChannelCommandReport &report);

/// Splits comma-separated generator arguments ("ZZII,ZIIZ" "IIZZ") and parses
/// them against the first one's qubit count.
std::vector<PauliElement> parse_generator_list(const std::vector<std::string> &args);

}  // namespace pdfs

#endif
