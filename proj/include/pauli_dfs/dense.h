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

#ifndef PAULI_DFS_DENSE_H
#define PAULI_DFS_DENSE_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>

#include "pauli_dfs/pauli.h"

namespace pdfs {

using Complex = std::complex<double>;
/// Dense 2^K x 2^K operator. Entry (r, c) is <r|A|c> in the computational basis,
/// where qubit 0 is the most significant bit of the basis index (|1100> = 12).
using DenseOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Largest qubit count for which dense matrices and state vectors are built.
inline constexpr std::size_t kDefaultDenseLimit = 12;

/// Throws SizeError naming the limit when n_qubits exceeds it.
void check_dense_limit(std::size_t n_qubits, std::size_t dense_limit);

inline std::size_t dense_dim(std::size_t n_qubits) {
    return std::size_t{1} << n_qubits;
}

/// i^exp
Complex phase_value(unsigned exp);

/// Scalar c with p|b> = c * (-1)^popcount(b & z) |b ^ x> for every basis state b.
Complex action_coefficient(const PauliElement &p);

DenseOperator to_matrix(const PauliElement &p, std::size_t dense_limit = kDefaultDenseLimit);

/// Trace of the natural representation of p, summed over the computational basis.
Complex pauli_trace(const PauliElement &p, std::size_t dense_limit = kDefaultDenseLimit);

/// out += coef * p |in>
void accumulate_pauli(const PauliElement &p, Complex coef, const StateVector &in, StateVector &out);

StateVector apply_pauli(const PauliElement &p, const StateVector &in);

StateVector basis_state(std::size_t n_qubits, std::uint64_t index);

/// Largest singular value of the difference; the distance used in all residual checks.
double operator_distance(const DenseOperator &a, const DenseOperator &b);

/// sin of the largest principal angle between the column spans of two matrices
/// whose columns need not be orthonormal. Zero iff the spans coincide.
double subspace_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

/// Orthonormal basis (columns) of the column span, dropping directions whose
/// singular value is below `tol` relative to the largest.
Eigen::MatrixXcd orthonormal_span(const Eigen::MatrixXcd &columns, double tol = 1e-10);

}  // namespace pdfs

#endif
