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

#ifndef PAULI_DFS_TESTS_RANDOM_GROUPS_H
#define PAULI_DFS_TESTS_RANDOM_GROUPS_H

#include <cstddef>
#include <random>
#include <vector>

#include "pauli_dfs/pauli.h"

namespace pdfs::testing {

/// Uniform Pauli string with a uniform phase in {1, i, -1, -i}, or phase 1.
PauliElement random_pauli(std::mt19937_64 &rng, std::size_t n_qubits, bool random_phase = true);

enum class ScalarContent {
    plus_identity_only,  // no nontrivial identity multiple
    all_scalar_phases,   // iI adjoined
    minus_identity_only, // -I adjoined, iI absent
};

/// Commuting, symplectically independent, sign-randomized Hermitian generators
/// (between 1 and n_qubits of them) plus the requested identity multiple.
std::vector<PauliElement> random_abelian_generators(std::mt19937_64 &rng, std::size_t n_qubits,
                                                    ScalarContent scalars);

/// Random Pauli strings, redrawn until at least two of them anticommute.
std::vector<PauliElement> random_nonabelian_generators(std::mt19937_64 &rng, std::size_t n_qubits);

}  // namespace pdfs::testing

#endif
