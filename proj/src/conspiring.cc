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

#include <cmath>
#include <string>

#include "pauli_dfs/channel.h"
#include "pauli_dfs/errors.h"
#include "pauli_dfs/random.h"

namespace pdfs {

namespace {

constexpr double kConstraintTolerance = 1e-10;

Eigen::MatrixXcd span_of(std::size_t first, std::size_t second) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 2);
    m(static_cast<Eigen::Index>(first), 0) = 1.0;
    m(static_cast<Eigen::Index>(second), 1) = 1.0;
    return m;
}

}  // namespace

PauliSubgroup q8_group() {
    return closure({parse_pauli("XXI"), parse_pauli("IZZ")});
}

std::vector<Eigen::MatrixXcd> q8_invariant_subspaces() {
    return {span_of(0b000, 0b110), span_of(0b111, 0b001), span_of(0b100, 0b010), span_of(0b011, 0b101)};
}

std::vector<StateVector> q8_code_states() {
    return {basis_state(3, 0b000), basis_state(3, 0b111), basis_state(3, 0b100), basis_state(3, 0b011)};
}

KrausSet conspiring_q8_kraus(Complex c1, Complex c2, Complex d1, Complex d2, Complex e1, Complex e2) {
    double orth = std::abs(std::conj(c1) * d1 + std::conj(c2) * d2);
    if (orth > kConstraintTolerance) {
        throw ConstraintError("conj(c1) d1 + conj(c2) d2 = 0 violated (|lhs| = " + std::to_string(orth) + ")");
    }
    double cnorm = std::norm(c1) + std::norm(c2);
    if (std::abs(cnorm - 1.0) > kConstraintTolerance) {
        throw ConstraintError("|c1|^2 + |c2|^2 = 1 violated (lhs = " + std::to_string(cnorm) + ")");
    }
    double denorm = std::norm(d1) + std::norm(d2) + std::norm(e1) + std::norm(e2);
    if (std::abs(denorm - 1.0) > kConstraintTolerance) {
        throw ConstraintError("|d1|^2 + |d2|^2 + |e1|^2 + |e2|^2 = 1 violated (lhs = " + std::to_string(denorm) +
                              ")");
    }
    std::vector<PauliElement> support{parse_pauli("III"), parse_pauli("XXI"), parse_pauli("IZZ"),
                                      parse_pauli("+iXYZ")};
    std::vector<std::vector<Complex>> coefficients{
        {(c1 + e1) / 2.0, d1 / 2.0, (c1 - e1) / 2.0, d1 / 2.0},
        {(c2 + e2) / 2.0, d2 / 2.0, (c2 - e2) / 2.0, d2 / 2.0},
    };
    std::vector<DenseOperator> ops;
    for (const auto &row : coefficients) {
        DenseOperator a = DenseOperator::Zero(8, 8);
        for (std::size_t n = 0; n < support.size(); ++n) {
            a += row[n] * to_matrix(support[n]);
        }
        ops.push_back(std::move(a));
    }
    return KrausSet(3, std::move(ops), std::move(support), std::move(coefficients));
}

ConspiringParameters random_conspiring_parameters(std::uint64_t seed) {
    auto rng = trial_engine(seed, 0);
    std::vector<Complex> draw = complex_normals(rng, 5);
    double cn = std::sqrt(std::norm(draw[0]) + std::norm(draw[1]));
    Complex c1 = draw[0] / cn;
    Complex c2 = draw[1] / cn;
    // (d1, d2) = t (-conj(c2), conj(c1)) is orthogonal to (c1, c2) in the required sense.
    Complex t = draw[2];
    Complex e1 = draw[3];
    Complex e2 = draw[4];
    double scale = std::sqrt(std::norm(t) + std::norm(e1) + std::norm(e2));
    t /= scale;
    e1 /= scale;
    e2 /= scale;
    return {c1, c2, -t * std::conj(c2), t * std::conj(c1), e1, e2};
}

double code_dfs_residual(const KrausSet &kraus, const std::vector<StateVector> &code) {
    double worst = 0;
    for (const DenseOperator &a : kraus.operators()) {
        Complex shared = 0;
        for (const StateVector &j : code) {
            shared += j.dot(a * j);
        }
        shared /= static_cast<double>(code.size());
        for (const StateVector &j : code) {
            worst = std::max(worst, (a * j - shared * j).norm());
        }
    }
    return worst;
}

GenericityProbe q8_genericity_probe(std::uint64_t seed, std::size_t draws) {
    PauliSubgroup group = q8_group();
    std::vector<StateVector> code = q8_code_states();
    GenericityProbe probe;
    probe.draws = draws;
    probe.unconstrained_min_residual = INFINITY;
    for (std::size_t i = 0; i < draws; ++i) {
        auto stream = trial_engine(seed, i);
        std::uint64_t unconstrained_seed = stream();
        std::uint64_t constrained_seed = stream();
        double r = code_dfs_residual(random_group_algebra_kraus(group, 2, unconstrained_seed), code);
        probe.unconstrained_min_residual = std::min(probe.unconstrained_min_residual, r);
        if (r > probe.failure_threshold) {
            ++probe.unconstrained_failures;
        }
        ConspiringParameters p = random_conspiring_parameters(constrained_seed);
        double rc = code_dfs_residual(conspiring_q8_kraus(p.c1, p.c2, p.d1, p.d2, p.e1, p.e2), code);
        probe.constrained_max_residual = std::max(probe.constrained_max_residual, rc);
        if (rc > probe.failure_threshold) {
            ++probe.constrained_failures;
        }
    }
    return probe;
}

}  // namespace pdfs
