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

#include "pauli_dfs/dense.h"

#include <bit>
#include <string>

#include "pauli_dfs/errors.h"
#include "pauli_dfs/kernels.h"

namespace pdfs {

void check_dense_limit(std::size_t n_qubits, std::size_t dense_limit) {
    if (n_qubits > dense_limit) {
        throw SizeError("dense realization of " + std::to_string(n_qubits) + " qubits exceeds the dense limit of " +
                        std::to_string(dense_limit) + " qubits");
    }
}

Complex phase_value(unsigned exp) {
    switch (exp & 3u) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

Complex action_coefficient(const PauliElement &p) {
    // Letter form is i^{|x&z|} X^x Z^z; Z^z acts first on |b>.
    return phase_value(p.phase_exp() + std::popcount(p.x_index_mask() & p.z_index_mask()));
}

DenseOperator to_matrix(const PauliElement &p, std::size_t dense_limit) {
    check_dense_limit(p.n_qubits(), dense_limit);
    std::size_t dim = dense_dim(p.n_qubits());
    std::uint64_t x = p.x_index_mask();
    std::uint64_t z = p.z_index_mask();
    Complex c = action_coefficient(p);
    DenseOperator m = DenseOperator::Zero(dim, dim);
    for (std::uint64_t b = 0; b < dim; ++b) {
        m(b ^ x, b) = (std::popcount(b & z) & 1) ? -c : c;
    }
    return m;
}

Complex pauli_trace(const PauliElement &p, std::size_t dense_limit) {
    check_dense_limit(p.n_qubits(), dense_limit);
    std::size_t dim = dense_dim(p.n_qubits());
    std::uint64_t x = p.x_index_mask();
    std::uint64_t z = p.z_index_mask();
    Complex c = action_coefficient(p);
    Complex total = 0;
    for (std::uint64_t b = 0; b < dim; ++b) {
        if ((b ^ x) == b) {
            total += (std::popcount(b & z) & 1) ? -c : c;
        }
    }
    return total;
}

void accumulate_pauli(const PauliElement &p, Complex coef, const StateVector &in, StateVector &out) {
    std::size_t dim = dense_dim(p.n_qubits());
    if (static_cast<std::size_t>(in.size()) != dim || static_cast<std::size_t>(out.size()) != dim) {
        throw DimensionMismatch("state vector dimension does not match the " + std::to_string(p.n_qubits()) +
                                "-qubit Pauli element");
    }
    kernels::active_kernels().accumulate_pauli(p.x_index_mask(), p.z_index_mask(), coef * action_coefficient(p),
                                               in.data(), out.data(), dim);
}

StateVector apply_pauli(const PauliElement &p, const StateVector &in) {
    StateVector out = StateVector::Zero(in.size());
    accumulate_pauli(p, 1.0, in, out);
    return out;
}

StateVector basis_state(std::size_t n_qubits, std::uint64_t index) {
    std::size_t dim = dense_dim(n_qubits);
    if (index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range for " +
                                std::to_string(n_qubits) + " qubits");
    }
    StateVector v = StateVector::Zero(dim);
    v(index) = 1.0;
    return v;
}

double operator_distance(const DenseOperator &a, const DenseOperator &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("operator shapes differ");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a - b);
    return svd.singularValues()(0);
}

Eigen::MatrixXcd orthonormal_span(const Eigen::MatrixXcd &columns, double tol) {
    if (columns.cols() == 0) {
        return Eigen::MatrixXcd(columns.rows(), 0);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(columns, Eigen::ComputeThinU);
    const auto &s = svd.singularValues();
    Eigen::Index rank = 0;
    double top = s.size() > 0 ? s(0) : 0.0;
    while (rank < s.size() && top > 0 && s(rank) > tol * top) {
        ++rank;
    }
    return svd.matrixU().leftCols(rank);
}

double subspace_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    if (a.rows() != b.rows()) {
        throw DimensionMismatch("subspaces live in different dimensions");
    }
    Eigen::MatrixXcd qa = orthonormal_span(a);
    Eigen::MatrixXcd qb = orthonormal_span(b);
    if (qa.cols() != qb.cols()) {
        return 1.0;
    }
    if (qa.cols() == 0) {
        return 0.0;
    }
    // ||P_a - P_b||_2 equals the sine of the largest principal angle.
    Eigen::MatrixXcd pa = qa * qa.adjoint();
    Eigen::MatrixXcd pb = qb * qb.adjoint();
    return operator_distance(pa, pb);
}

}  // namespace pdfs
