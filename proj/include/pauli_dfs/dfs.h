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

#ifndef PAULI_DFS_DFS_H
#define PAULI_DFS_DFS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pauli_dfs/dense.h"
#include "pauli_dfs/subgroup.h"

namespace pdfs {

/// Projection of the natural representation onto one irrep,
/// P = (1/N) sum_n conj(chi(G_n)) G_n.
struct IrrepProjector {
    Character character;
    DenseOperator matrix;
    std::size_t multiplicity = 0;  // round(trace P)
};

IrrepProjector projector(const PauliSubgroup &group, const Character &character,
                         std::size_t dense_limit = kDefaultDenseLimit);

/// m_k = (1/N) sum_n conj(chi_k(G_n)) tr(G_n). Computed symbolically: only the
/// identity multiples have nonzero trace, so this works for any qubit count.
std::uint64_t multiplicity(const PauliSubgroup &group, const Character &character);

/// True iff the character appears in the natural representation, which happens
/// exactly when chi(lambda I) = lambda on every identity multiple in the group.
bool supports_dfs(const PauliSubgroup &group, const Character &character);

/// P|phi> for the character's projector, without forming P.
StateVector project_onto(const PauliSubgroup &group, const Character &character, const StateVector &phi);

/// Orthonormal basis of one character's invariant subspace.
struct DfsBasis {
    Character character;
    std::vector<StateVector> vectors;

    std::size_t multiplicity() const {
        return vectors.size();
    }
    /// Vectors as the columns of a 2^K x m matrix.
    Eigen::MatrixXcd as_matrix() const;
};

/// Projects computational basis states in lexicographic order, drops
/// projections whose component orthogonal to the basis so far has norm < 1e-8,
/// and orthonormalizes the rest (Gram-Schmidt, two passes).
DfsBasis dfs_basis(const PauliSubgroup &group, const Character &character,
                   std::size_t dense_limit = kDefaultDenseLimit);

inline constexpr double kNullProjectionThreshold = 1e-8;
inline constexpr double kResidualPassThreshold = 1e-9;

struct VerificationTrial {
    std::size_t trial = 0;
    std::vector<Complex> coefficients;  // a_n, aligned with the group's elements
    std::optional<Complex> predicted;   // sum_n a_n chi(G_n), when a character is known
    std::vector<Complex> observed;      // <psi_z|A|psi_z> per state
    double residual = 0;                // max_z ||A psi_z - c psi_z|| with one shared c
    double c_spread = 0;                // max_z |observed_z - observed_0|
    bool passed = false;
};

struct VerificationReport {
    std::vector<VerificationTrial> trials;
    double threshold = kResidualPassThreshold;
    double max_residual = 0;
    std::size_t failing_trials = 0;
    bool passed = false;
};

/// Draws `trials` random group-algebra operators A = sum_n a_n G_n (a_n complex
/// standard normal, seeded) and checks A|psi_z> = c|psi_z> with one c shared by
/// all states. The shared c is the character prediction when `character` is
/// given and <psi_0|A|psi_0> otherwise. States must be normalized.
VerificationReport verify_states(const PauliSubgroup &group, std::span<const StateVector> states,
                                 const Character *character, std::size_t trials, std::uint64_t seed,
                                 double threshold = kResidualPassThreshold);

VerificationReport verify_dfs(const PauliSubgroup &group, const DfsBasis &basis, std::size_t trials,
                              std::uint64_t seed);

/// Which identity multiples the subgroup contains, for the closed-form DFS dimension.
enum class PhaseClass {
    all_scalar_phases,  // +-I and +-iI all present
    no_phase_factors,   // only +I
};

/// nullopt when the group contains -I but not iI; neither closed form covers that case.
std::optional<PhaseClass> phase_class_of(const PauliSubgroup &group);

/// Closed-form DFS dimension for an order-N Abelian subgroup on K qubits:
/// 2^(K+2)/N for supported characters when all four identity multiples are
/// present, 2^K/N when none but +I is. Throws DomainError when N cannot be the
/// order of such a group.
std::uint64_t dimension_formula(std::size_t n_qubits, std::uint64_t order, PhaseClass phase_class);

/// One simultaneous eigenspace of every group element.
struct JointEigenspace {
    std::vector<std::uint8_t> exponents;  // eigenvalue i^e for each group element, in element order
    Eigen::MatrixXcd basis;               // orthonormal columns

    std::size_t dimension() const {
        return static_cast<std::size_t>(basis.cols());
    }
};

struct JointEigenspaceSearch {
    std::vector<JointEigenspace> spaces;

    bool empty() const {
        return spaces.empty();
    }
};

/// Brute-force search for vectors that are eigenvectors of every group element,
/// intersecting eigenspaces lift by lift in the dense representation. Empty for
/// every non-Abelian subgroup; for Abelian ones each space corresponds to one
/// supported character.
JointEigenspaceSearch nonabelian_one_dim_search(const PauliSubgroup &group,
                                                std::size_t dense_limit = kDefaultDenseLimit);

}  // namespace pdfs

#endif
