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

#ifndef PAULI_DFS_CHANNEL_H
#define PAULI_DFS_CHANNEL_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pauli_dfs/dense.h"
#include "pauli_dfs/subgroup.h"

namespace pdfs {

inline constexpr double kKrausNormalizationTolerance = 1e-9;

/// Operator-sum channel rho -> sum_d A_d rho A_d^dagger with sum_d A_d^dagger A_d = I.
class KrausSet {
   public:
    /// Throws NumericError when the operators are not trace preserving to `tolerance`.
    KrausSet(std::size_t n_qubits, std::vector<DenseOperator> operators,
             double tolerance = kKrausNormalizationTolerance);

    /// Same, and records each operator's expansion over `support` (a_{d,n}).
    KrausSet(std::size_t n_qubits, std::vector<DenseOperator> operators, std::vector<PauliElement> support,
             std::vector<std::vector<Complex>> coefficients, double tolerance = kKrausNormalizationTolerance);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    const std::vector<DenseOperator> &operators() const {
        return operators_;
    }
    /// Group elements the operators expand over; empty when no expansion was recorded.
    const std::vector<PauliElement> &support() const {
        return support_;
    }
    /// coefficients()[d][n] multiplies support()[n] in operator d.
    const std::vector<std::vector<Complex>> &coefficients() const {
        return coefficients_;
    }
    /// || sum_d A_d^dagger A_d - I ||_2
    double normalization_error() const;

   private:
    std::size_t n_qubits_;
    std::vector<DenseOperator> operators_;
    std::vector<PauliElement> support_;
    std::vector<std::vector<Complex>> coefficients_;
};

/// Unit-trace Hermitian positive-semidefinite 2^K x 2^K matrix.
class DensityMatrix {
   public:
    /// Validates trace (1e-10), Hermiticity (1e-10) and min eigenvalue >= -1e-8;
    /// throws NumericError otherwise.
    explicit DensityMatrix(DenseOperator matrix);

    /// |psi><psi| for a normalized state.
    static DensityMatrix pure(const StateVector &psi);

    const DenseOperator &matrix() const {
        return matrix_;
    }
    std::size_t dim() const {
        return static_cast<std::size_t>(matrix_.rows());
    }
    std::size_t n_qubits() const;

   private:
    DenseOperator matrix_;
};

/// Random operators in the group algebra, right-multiplied by S^{-1/2} where
/// S = sum_d A_d^dagger A_d so the set is trace preserving. Coefficients are
/// recovered by projecting each final operator onto the group elements under the
/// trace inner product. Throws DegenerateDrawError when S has an eigenvalue below 1e-12.
KrausSet random_group_algebra_kraus(const PauliSubgroup &group, std::size_t n_ops, std::uint64_t seed,
                                    std::size_t dense_limit = kDefaultDenseLimit);

/// Operators G_n / sqrt(N) over every group element: for Q_Z this is the
/// maximally dephasing channel (1/2){II, ZI, IZ, ZZ}.
KrausSet equal_weight_channel(const PauliSubgroup &group, std::size_t dense_limit = kDefaultDenseLimit);

/// Throws DimensionMismatch when the channel and state sizes differ.
DensityMatrix apply_channel(const KrausSet &kraus, const DensityMatrix &rho);

/// tr(rho^2)
double purity(const DensityMatrix &rho);

/// <psi|rho|psi>
double fidelity(const DensityMatrix &rho, const StateVector &psi);

/// Reduced state of one qubit (qubit 0 is the leftmost).
DensityMatrix reduced_single_qubit(const DensityMatrix &rho, std::size_t qubit);

struct ScanTrial {
    std::size_t trial = 0;
    double purity = 0;
    double fidelity = 0;
    double trace_error = 0;
};

struct ScanReport {
    std::vector<ScanTrial> trials;
    double min_purity = 1;
    double mean_purity = 0;
    double min_fidelity = 1;
    double mean_fidelity = 0;
    double max_trace_error = 0;
};

/// Applies `trials` independent random group-algebra channels to |state><state|.
/// A degenerate draw is redrawn from the next stream of the same trial.
ScanReport decoherence_scan(const PauliSubgroup &group, const StateVector &state, std::size_t trials,
                            std::uint64_t seed, std::size_t ops_per_channel = 4,
                            std::size_t dense_limit = kDefaultDenseLimit);

// Non-generic DFS inside the non-Abelian subgroup {+-III, +-XXI, +-IZZ, +-iXYZ}.
// On each two-dimensional invariant subspace V^z the group-algebra operator
//   A = (c+e)/2 III + d/2 XXI + (c-e)/2 IZZ + d/2 iXYZ
// acts as the upper-triangular matrix [[c, d], [0, e]], so the first vector of
// every V^z is an eigenvector with the same eigenvalue c.

/// The 8-element group closed from XXI and IZZ.
PauliSubgroup q8_group();

/// The four two-dimensional invariant subspaces as 8x2 matrices, in the order
/// (|000>,|110>), (|111>,|001>), (|100>,|010>), (|011>,|101>).
std::vector<Eigen::MatrixXcd> q8_invariant_subspaces();

/// The code {|000>, |111>, |100>, |011>}: the first vector of each subspace.
std::vector<StateVector> q8_code_states();

/// Two-operator KrausSet from the upper-triangular parameters. Requires, within
/// 1e-10: conj(c1) d1 + conj(c2) d2 = 0, |c1|^2 + |c2|^2 = 1 and
/// |d1|^2 + |d2|^2 + |e1|^2 + |e2|^2 = 1. Throws ConstraintError naming the violation.
KrausSet conspiring_q8_kraus(Complex c1, Complex c2, Complex d1, Complex d2, Complex e1, Complex e2);

/// Random parameters satisfying the three constraints.
struct ConspiringParameters {
    Complex c1, c2, d1, d2, e1, e2;
};
ConspiringParameters random_conspiring_parameters(std::uint64_t seed);

/// max over operators d and code states j of ||A_d|j> - c_d|j>||, where c_d is
/// the mean of <j|A_d|j> over the code. Zero iff the code satisfies the DFS condition.
double code_dfs_residual(const KrausSet &kraus, const std::vector<StateVector> &code);

struct GenericityProbe {
    std::size_t draws = 0;
    std::size_t unconstrained_failures = 0;
    double unconstrained_min_residual = 0;
    std::size_t constrained_failures = 0;
    double constrained_max_residual = 0;
    double failure_threshold = 1e-6;
};

/// Draws unconstrained group-algebra channels on the Q8 group and constrained
/// ones from conspiring_q8_kraus, and counts how often the code fails the DFS
/// condition (residual above 1e-6).
GenericityProbe q8_genericity_probe(std::uint64_t seed, std::size_t draws = 64);

}  // namespace pdfs

#endif
