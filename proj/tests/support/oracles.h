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

#ifndef PAULI_DFS_TESTS_ORACLES_H
#define PAULI_DFS_TESTS_ORACLES_H

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pauli_dfs/pauli.h"

namespace pdfs::testing {

using CMat = Eigen::MatrixXcd;

/// Kronecker product of 2x2 Pauli matrices times the global phase, leftmost
/// letter as the most significant tensor factor. Built from the printed form
/// only, so it shares no code with the library's matrix realization.
CMat kron_matrix(const PauliElement &p);
CMat kron_matrix(const std::string &text);

/// Closure by repeated dense multiplication, deduplicated by entrywise distance.
std::vector<CMat> dense_closure(const std::vector<CMat> &generators, std::size_t max_order = 1 << 12);

/// Orthonormal basis of the column span (SVD, singular values above tol).
CMat column_span(const CMat &columns, double tol = 1e-9);

/// Spectral-norm distance between the orthogonal projectors onto two spans.
double span_distance(const CMat &a, const CMat &b);

/// Simultaneous eigenspaces of a set of commuting normal matrices, found by
/// diagonalizing one random linear combination and grouping equal eigenvalues.
std::vector<CMat> joint_eigenspaces(const std::vector<CMat> &commuting, unsigned seed = 7);

/// Numerical rank (singular values above tol). Above 64 rows the rank is read
/// off a Gaussian sketch M*R with `probe` columns, which is exact with
/// probability one whenever the true rank is below `probe`; a result equal to
/// `probe` means "at least probe".
std::size_t numerical_rank(const CMat &m, std::size_t probe, double tol = 1e-8, unsigned seed = 11);

/// Computational basis ket from a bit string such as "0110".
Eigen::VectorXcd ket(const std::string &bits);

}  // namespace pdfs::testing

#endif
