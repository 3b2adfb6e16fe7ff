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

#include "pauli_dfs/channel.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "pauli_dfs/errors.h"
#include "pauli_dfs/random.h"

namespace pdfs {

namespace {

DenseOperator kraus_sum(const std::vector<DenseOperator> &ops, std::size_t dim) {
    DenseOperator s = DenseOperator::Zero(dim, dim);
    for (const DenseOperator &a : ops) {
        s.noalias() += a.adjoint() * a;
    }
    return s;
}

void add_scaled_pauli(DenseOperator &m, const PauliElement &g, Complex coef) {
    Complex c = coef * action_coefficient(g);
    std::uint64_t x = g.x_index_mask();
    std::uint64_t z = g.z_index_mask();
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(m.cols()); ++b) {
        m(b ^ x, b) += (std::popcount(b & z) & 1) ? -c : c;
    }
}

// tr(g^dagger A) / 2^K
Complex pauli_component(const DenseOperator &a, const PauliElement &g) {
    Complex c = std::conj(action_coefficient(g));
    std::uint64_t x = g.x_index_mask();
    std::uint64_t z = g.z_index_mask();
    Complex total = 0;
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(a.cols()); ++b) {
        Complex entry = a(b ^ x, b);
        total += (std::popcount(b & z) & 1) ? -c * entry : c * entry;
    }
    return total / static_cast<double>(a.cols());
}

}  // namespace

KrausSet::KrausSet(std::size_t n_qubits, std::vector<DenseOperator> operators, double tolerance)
    : KrausSet(n_qubits, std::move(operators), {}, {}, tolerance) {
}

KrausSet::KrausSet(std::size_t n_qubits, std::vector<DenseOperator> operators, std::vector<PauliElement> support,
                   std::vector<std::vector<Complex>> coefficients, double tolerance)
    : n_qubits_(n_qubits),
      operators_(std::move(operators)),
      support_(std::move(support)),
      coefficients_(std::move(coefficients)) {
    if (operators_.empty()) {
        throw std::invalid_argument("a Kraus set needs at least one operator");
    }
    std::size_t dim = dense_dim(n_qubits_);
    for (const DenseOperator &a : operators_) {
        if (static_cast<std::size_t>(a.rows()) != dim || static_cast<std::size_t>(a.cols()) != dim) {
            throw DimensionMismatch("Kraus operator is not " + std::to_string(dim) + "x" + std::to_string(dim));
        }
    }
    if (!coefficients_.empty() && coefficients_.size() != operators_.size()) {
        throw DimensionMismatch("one coefficient vector per Kraus operator is required");
    }
    for (const auto &row : coefficients_) {
        if (row.size() != support_.size()) {
            throw DimensionMismatch("coefficient vector length differs from the support size");
        }
    }
    double err = normalization_error();
    if (!(err <= tolerance)) {
        throw NumericError("Kraus operators are not trace preserving: ||sum A^dagger A - I|| = " +
                           std::to_string(err));
    }
}

double KrausSet::normalization_error() const {
    std::size_t dim = dense_dim(n_qubits_);
    return operator_distance(kraus_sum(operators_, dim), DenseOperator::Identity(dim, dim));
}

DensityMatrix::DensityMatrix(DenseOperator matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0 || !std::has_single_bit(
                                                                        static_cast<std::size_t>(matrix_.rows()))) {
        throw DimensionMismatch("density matrix must be square with a power-of-two dimension");
    }
    Complex tr = matrix_.trace();
    if (std::abs(tr - Complex(1, 0)) > 1e-10) {
        throw NumericError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-10) {
        throw NumericError("density matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
    }
    Eigen::SelfAdjointEigenSolver<DenseOperator> es(matrix_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8) {
        throw NumericError("density matrix has a negative eigenvalue " + std::to_string(es.eigenvalues().minCoeff()));
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    return DensityMatrix(psi * psi.adjoint());
}

std::size_t DensityMatrix::n_qubits() const {
    return static_cast<std::size_t>(std::countr_zero(dim()));
}

KrausSet random_group_algebra_kraus(const PauliSubgroup &group, std::size_t n_ops, std::uint64_t seed,
                                    std::size_t dense_limit) {
    if (n_ops == 0) {
        throw std::invalid_argument("n_ops must be at least 1");
    }
    check_dense_limit(group.n_qubits(), dense_limit);
    std::size_t dim = dense_dim(group.n_qubits());
    auto rng = trial_engine(seed, 0);

    std::vector<DenseOperator> ops;
    ops.reserve(n_ops);
    for (std::size_t d = 0; d < n_ops; ++d) {
        std::vector<Complex> a = complex_normals(rng, group.order());
        DenseOperator op = DenseOperator::Zero(dim, dim);
        for (std::size_t n = 0; n < group.order(); ++n) {
            add_scaled_pauli(op, group.elements()[n], a[n]);
        }
        ops.push_back(std::move(op));
    }

    Eigen::SelfAdjointEigenSolver<DenseOperator> es(kraus_sum(ops, dim));
    double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < 1e-12) {
        throw DegenerateDrawError("normalization matrix is singular (min eigenvalue " + std::to_string(min_eig) +
                                  "); redraw with another seed");
    }
    Eigen::VectorXd inv_sqrt = es.eigenvalues().cwiseSqrt().cwiseInverse();
    DenseOperator s_inv_sqrt = es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
    for (DenseOperator &op : ops) {
        op = op * s_inv_sqrt;
    }

    // Elements differing only by phase are the same matrix up to a scalar, so the
    // expansion uses the first element of each letter class and gives the rest 0.
    std::vector<bool> representative(group.order(), false);
    {
        std::unordered_map<PauliElement, bool, PauliElementHash> seen;
        for (std::size_t n = 0; n < group.order(); ++n) {
            PauliElement key = group.elements()[n].with_phase(0);
            if (seen.emplace(key, true).second) {
                representative[n] = true;
            }
        }
    }
    std::vector<std::vector<Complex>> coefficients;
    for (const DenseOperator &op : ops) {
        std::vector<Complex> row(group.order(), 0.0);
        DenseOperator rebuilt = DenseOperator::Zero(dim, dim);
        for (std::size_t n = 0; n < group.order(); ++n) {
            if (representative[n]) {
                row[n] = pauli_component(op, group.elements()[n]);
                add_scaled_pauli(rebuilt, group.elements()[n], row[n]);
            }
        }
        double residual = (rebuilt - op).norm();
        if (residual > 1e-9) {
            throw NumericError("normalized Kraus operator left the group algebra (re-projection residual " +
                               std::to_string(residual) + ")");
        }
        coefficients.push_back(std::move(row));
    }
    return KrausSet(group.n_qubits(), std::move(ops), group.elements(), std::move(coefficients));
}

KrausSet equal_weight_channel(const PauliSubgroup &group, std::size_t dense_limit) {
    check_dense_limit(group.n_qubits(), dense_limit);
    double w = 1.0 / std::sqrt(static_cast<double>(group.order()));
    std::vector<DenseOperator> ops;
    std::vector<std::vector<Complex>> coefficients;
    for (std::size_t n = 0; n < group.order(); ++n) {
        ops.push_back(w * to_matrix(group.elements()[n], dense_limit));
        std::vector<Complex> row(group.order(), 0.0);
        row[n] = w;
        coefficients.push_back(std::move(row));
    }
    return KrausSet(group.n_qubits(), std::move(ops), group.elements(), std::move(coefficients));
}

DensityMatrix apply_channel(const KrausSet &kraus, const DensityMatrix &rho) {
    if (rho.dim() != dense_dim(kraus.n_qubits())) {
        throw DimensionMismatch("density matrix dimension " + std::to_string(rho.dim()) + " does not match the " +
                                std::to_string(kraus.n_qubits()) + "-qubit channel");
    }
    DenseOperator out = DenseOperator::Zero(rho.dim(), rho.dim());
    for (const DenseOperator &a : kraus.operators()) {
        out.noalias() += a * rho.matrix() * a.adjoint();
    }
    // Symmetrize away rounding so the Hermiticity check measures the channel, not the arithmetic.
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(std::move(out));
}

double purity(const DensityMatrix &rho) {
    return rho.matrix().cwiseAbs2().sum();
}

double fidelity(const DensityMatrix &rho, const StateVector &psi) {
    return psi.dot(rho.matrix() * psi).real();
}

DensityMatrix reduced_single_qubit(const DensityMatrix &rho, std::size_t qubit) {
    std::size_t k = rho.n_qubits();
    if (qubit >= k) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range");
    }
    std::uint64_t bit = std::uint64_t{1} << (k - 1 - qubit);
    DenseOperator red = DenseOperator::Zero(2, 2);
    for (std::uint64_t rest = 0; rest < rho.dim(); ++rest) {
        if (rest & bit) {
            continue;
        }
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                red(a, b) += rho.matrix()(rest | (a ? bit : 0), rest | (b ? bit : 0));
            }
        }
    }
    return DensityMatrix(std::move(red));
}

ScanReport decoherence_scan(const PauliSubgroup &group, const StateVector &state, std::size_t trials,
                            std::uint64_t seed, std::size_t ops_per_channel, std::size_t dense_limit) {
    DensityMatrix rho0 = DensityMatrix::pure(state);
    ScanReport report;
    for (std::size_t t = 0; t < trials; ++t) {
        auto stream = trial_engine(seed, t);
        std::optional<KrausSet> kraus;
        for (int attempt = 0; attempt < 16 && !kraus; ++attempt) {
            try {
                kraus = random_group_algebra_kraus(group, ops_per_channel, stream(), dense_limit);
            } catch (const DegenerateDrawError &) {
            }
        }
        if (!kraus) {
            throw DegenerateDrawError("16 consecutive degenerate Kraus draws in trial " + std::to_string(t));
        }
        DensityMatrix out = apply_channel(*kraus, rho0);
        ScanTrial st{t, purity(out), fidelity(out, state), std::abs(out.matrix().trace() - Complex(1, 0))};
        report.min_purity = std::min(report.min_purity, st.purity);
        report.min_fidelity = std::min(report.min_fidelity, st.fidelity);
        report.mean_purity += st.purity;
        report.mean_fidelity += st.fidelity;
        report.max_trace_error = std::max(report.max_trace_error, st.trace_error);
        report.trials.push_back(st);
    }
    if (trials > 0) {
        report.mean_purity /= static_cast<double>(trials);
        report.mean_fidelity /= static_cast<double>(trials);
    }
    return report;
}

}  // namespace pdfs
