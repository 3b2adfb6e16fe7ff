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

#ifndef PAULI_DFS_STATE_SPEC_H
#define PAULI_DFS_STATE_SPEC_H

#include <cstddef>
#include <optional>
#include <string_view>

#include "pauli_dfs/dense.h"

namespace pdfs {

/// Parses a superposition of computational basis kets, e.g.
///   "|00>", "0.7071|00> + 0.7071|11>", "0.6|01> - 0.8i|10>", "(0.5+0.5i)|0>+(0.5-0.5i)|1>".
/// The leftmost ket digit is qubit 0. Repeated kets add. The result must have
/// norm within 1e-3 of one and is then renormalized exactly. Throws ParseError.
StateVector parse_state_spec(std::string_view text, std::optional<std::size_t> n_qubits = std::nullopt,
                             std::size_t dense_limit = kDefaultDenseLimit);

}  // namespace pdfs

#endif
