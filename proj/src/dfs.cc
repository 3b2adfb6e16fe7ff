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

#include "pauli_dfs/dfs.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "pauli_dfs/errors.h"
#include "pauli_dfs/kernels.h"
#include "pauli_dfs/random.h"

namespace pdfs {

namespace {

void require_abelian(const PauliSubgroup &group) {
    if (!group.is_abelian()) {
        throw ClassificationError("irrep projectors need an Abelian subgroup; this one has anticommuting elements");
    }
}

// Nearest fourth root of unity, as an exponent of i.
std::uint8_t nearest_root_exponent(Complex z) {
    std::array<Complex, 4> roots{Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
    std::uint8_t best = 0;
    for (std::uint8_t e = 1; e < 4; ++e) {
        if (std::abs(z - roots[e]) < std::abs(z - roots[best])) {
            best = e;
        }
    }
    return best;
}

}  // namespace

IrrepProjector projector(const PauliSubgroup &group, const Character &character, std::size_t dense_limit) {
    require_abelian(group);
    require_character_of(group, character);
    check_dense_limit(group.n_qubits(), dense_limit);
    std::size_t dim = dense_dim(group.n_qubits());
    double inv_n = 1.0 / static_cast<double>(group.order());
    DenseOperator p = DenseOperator::Zero(dim, dim);
    for (std::size_t n = 0; n < group.order(); ++n) {
        const PauliElement &g = group.elements()[n];
        Complex c = std::conj(character.value(n)) * action_coefficient(g) * inv_n;
        std::uint64_t x = g.x_index_mask();
        std::uint64_t z = g.z_index_mask();
        for (std::uint64_t b = 0; b < dim; ++b) {
            p(b ^ x, b) += (std::popcount(b & z) & 1) ? -c : c;
        }
    }
    double tr = p.trace().real();
    return IrrepProjector{character, std::move(p), static_cast<std::size_t>(std::llround(tr))};
}

std::uint64_t multiplicity(const PauliSubgroup &group, const Character &character) {
    require_abelian(group);
    require_character_of(group, character);
    // sum over identity multiples s of conj(chi(s)) * (phase of s); traces are 2^K times that.
    std::array<long long, 4> counts{};
    for (std::size_t n = 0; n < group.order(); ++n) {
        const PauliElement &g = group.elements()[n];
        if (g.is_scalar()) {
            counts[(g.phase_exp() + 4 - character.exponent(n)) & 3u] += 1;
        }
    }
    long long re = counts[0] - counts[2];
    long long im = counts[1] - counts[3];
    if (im != 0 || re < 0) {
        throw NumericError("multiplicity sum is not a non-negative integer");
    }
    if (re == 0) {
        return 0;
    }
    // m = re * 2^K / N with N = scalar_count * 2^r and re = scalar_count here.
    std::uint64_t n = group.order();
    std::size_t k = group.n_qubits();
    std::size_t log_n = static_cast<std::size_t>(std::bit_width(n) - 1);
    std::size_t log_re = static_cast<std::size_t>(std::bit_width(static_cast<std::uint64_t>(re)) - 1);
    if (k + log_re < log_n) {
        throw NumericError("multiplicity is not an integer");
    }
    std::size_t shift = k + log_re - log_n;
    if (shift >= 64) {
        throw SizeError("multiplicity 2^" + std::to_string(shift) + " does not fit in 64 bits");
    }
    return std::uint64_t{1} << shift;
}

bool supports_dfs(const PauliSubgroup &group, const Character &character) {
    require_character_of(group, character);
    for (std::size_t n = 0; n < group.order(); ++n) {
        const PauliElement &g = group.elements()[n];
        if (g.is_scalar() && character.exponent(n) != g.phase_exp()) {
            return false;
        }
    }
    return true;
}

StateVector project_onto(const PauliSubgroup &group, const Character &character, const StateVector &phi) {
    require_abelian(group);
    require_character_of(group, character);
    StateVector out = StateVector::Zero(phi.size());
    double inv_n = 1.0 / static_cast<double>(group.order());
    for (std::size_t n = 0; n < group.order(); ++n) {
        accumulate_pauli(group.elements()[n], std::conj(character.value(n)) * inv_n, phi, out);
    }
    return out;
}

Eigen::MatrixXcd DfsBasis::as_matrix() const {
    Eigen::Index dim = vectors.empty() ? 0 : vectors.front().size();
    Eigen::MatrixXcd m(dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t z = 0; z < vectors.size(); ++z) {
        m.col(static_cast<Eigen::Index>(z)) = vectors[z];
    }
    return m;
}

DfsBasis dfs_basis(const PauliSubgroup &group, const Character &character, std::size_t dense_limit) {
    require_abelian(group);
    require_character_of(group, character);
    check_dense_limit(group.n_qubits(), dense_limit);
    std::uint64_t target = multiplicity(group, character);
    std::size_t dim = dense_dim(group.n_qubits());
    const kernels::KernelTable &k = kernels::active_kernels();
    double inv_n = 1.0 / static_cast<double>(group.order());

    std::vector<Complex> coefs(group.order());
    for (std::size_t n = 0; n < group.order(); ++n) {
        coefs[n] = std::conj(character.value(n)) * action_coefficient(group.elements()[n]) * inv_n;
    }

    DfsBasis basis{character, {}};
    for (std::uint64_t b = 0; b < dim && basis.vectors.size() < target; ++b) {
        // P|b> has one nonzero amplitude per group element.
        StateVector v = StateVector::Zero(dim);
        for (std::size_t n = 0; n < group.order(); ++n) {
            const PauliElement &g = group.elements()[n];
            Complex c = coefs[n];
            v(b ^ g.x_index_mask()) += (std::popcount(b & g.z_index_mask()) & 1) ? -c : c;
        }
        if (v.norm() < kNullProjectionThreshold) {
            continue;
        }
        for (int pass = 0; pass < 2; ++pass) {
            for (const StateVector &u : basis.vectors) {
                Complex overlap = k.dot(u.data(), v.data(), dim);
                k.axpy(-overlap, u.data(), v.data(), dim);
            }
        }
        double norm = v.norm();
        if (norm < kNullProjectionThreshold) {
            continue;
        }
        basis.vectors.push_back(v / norm);
    }
    if (basis.vectors.size() != target) {
        throw NumericError("basis extraction found " + std::to_string(basis.vectors.size()) +
                           " vectors but the multiplicity is " + std::to_string(target));
    }
    return basis;
}

VerificationReport verify_states(const PauliSubgroup &group, std::span<const StateVector> states,
                                 const Character *character, std::size_t trials, std::uint64_t seed,
                                 double threshold) {
    if (character != nullptr) {
        require_character_of(group, *character);
    }
    std::size_t dim = dense_dim(group.n_qubits());
    for (const StateVector &s : states) {
        if (static_cast<std::size_t>(s.size()) != dim) {
            throw DimensionMismatch("state dimension does not match the subgroup's qubit count");
        }
    }
    VerificationReport report;
    report.threshold = threshold;
    report.trials.resize(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        VerificationTrial &trial = report.trials[t];
        trial.trial = t;
        auto rng = trial_engine(seed, t);
        trial.coefficients = complex_normals(rng, group.order());
        if (character != nullptr) {
            Complex predicted = 0;
            for (std::size_t n = 0; n < group.order(); ++n) {
                predicted += trial.coefficients[n] * character->value(n);
            }
            trial.predicted = predicted;
        }
        std::vector<StateVector> images;
        images.reserve(states.size());
        for (const StateVector &psi : states) {
            StateVector out = StateVector::Zero(dim);
            for (std::size_t n = 0; n < group.order(); ++n) {
                accumulate_pauli(group.elements()[n], trial.coefficients[n], psi, out);
            }
            trial.observed.push_back(psi.dot(out));  // Eigen's dot conjugates the left operand
            images.push_back(std::move(out));
        }
        if (states.empty()) {
            trial.passed = true;
            continue;
        }
        Complex shared = trial.predicted.value_or(trial.observed.front());
        for (std::size_t z = 0; z < states.size(); ++z) {
            trial.residual = std::max(trial.residual, (images[z] - shared * states[z]).norm());
            trial.c_spread = std::max(trial.c_spread, std::abs(trial.observed[z] - trial.observed.front()));
        }
        trial.passed = trial.residual < threshold;
        report.max_residual = std::max(report.max_residual, trial.residual);
        if (!trial.passed) {
            ++report.failing_trials;
        }
    }
    report.passed = report.failing_trials == 0;
    return report;
}

VerificationReport verify_dfs(const PauliSubgroup &group, const DfsBasis &basis, std::size_t trials,
                              std::uint64_t seed) {
    return verify_states(group, basis.vectors, &basis.character, trials, seed);
}

std::optional<PhaseClass> phase_class_of(const PauliSubgroup &group) {
    switch (group.scalar_count()) {
        case 1:
            return PhaseClass::no_phase_factors;
        case 4:
            return PhaseClass::all_scalar_phases;
        default:
            return std::nullopt;
    }
}

std::uint64_t dimension_formula(std::size_t n_qubits, std::uint64_t order, PhaseClass phase_class) {
    std::size_t top = n_qubits + (phase_class == PhaseClass::all_scalar_phases ? 2 : 0);
    if (top >= 64) {
        throw SizeError("2^" + std::to_string(top) + " does not fit in 64 bits");
    }
    if (order == 0 || !std::has_single_bit(order)) {
        throw DomainError("order " + std::to_string(order) + " is not a power of two");
    }
    if (phase_class == PhaseClass::all_scalar_phases && order < 4) {
        throw DomainError("a group containing all four identity multiples has order at least 4");
    }
    std::uint64_t numerator = std::uint64_t{1} << top;
    if (order > numerator) {
        throw DomainError("order " + std::to_string(order) + " does not divide 2^" + std::to_string(top) +
                          "; no Abelian subgroup of this phase class has that order on " + std::to_string(n_qubits) +
                          " qubits");
    }
    return numerator / order;
}

JointEigenspaceSearch nonabelian_one_dim_search(const PauliSubgroup &group, std::size_t dense_limit) {
    check_dense_limit(group.n_qubits(), dense_limit);
    std::size_t dim = dense_dim(group.n_qubits());
    std::vector<DenseOperator> lift_matrices;
    for (const PauliElement &h : group.independent_generators()) {
        lift_matrices.push_back(to_matrix(h, dense_limit));
    }
    constexpr double kNullTol = 1e-8;
    const std::array<Complex, 4> roots{Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};

    // Depth-first over eigenvalue choices for each lift; identity multiples act
    // as scalars and never split a space.
    std::vector<Eigen::MatrixXcd> frontier{Eigen::MatrixXcd::Identity(dim, dim)};
    for (const DenseOperator &g : lift_matrices) {
        std::vector<Eigen::MatrixXcd> next;
        for (const Eigen::MatrixXcd &space : frontier) {
            for (const Complex &lambda : roots) {
                Eigen::MatrixXcd shifted = g * space - lambda * space;
                Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted, Eigen::ComputeFullV);
                const auto &s = svd.singularValues();
                std::vector<Eigen::Index> null_cols;
                for (Eigen::Index c = 0; c < space.cols(); ++c) {
                    double sigma = c < s.size() ? s(c) : 0.0;
                    if (sigma < kNullTol) {
                        null_cols.push_back(c);
                    }
                }
                if (null_cols.empty()) {
                    continue;
                }
                Eigen::MatrixXcd coeffs(space.cols(), static_cast<Eigen::Index>(null_cols.size()));
                for (std::size_t i = 0; i < null_cols.size(); ++i) {
                    coeffs.col(static_cast<Eigen::Index>(i)) = svd.matrixV().col(null_cols[i]);
                }
                next.push_back(space * coeffs);
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) {
            break;
        }
    }

    JointEigenspaceSearch result;
    for (Eigen::MatrixXcd &space : frontier) {
        JointEigenspace js;
        StateVector v = space.col(0);
        js.exponents.reserve(group.order());
        for (const PauliElement &g : group.elements()) {
            js.exponents.push_back(nearest_root_exponent(v.dot(apply_pauli(g, v))));
        }
        js.basis = std::move(space);
        result.spaces.push_back(std::move(js));
    }
    return result;
}

}  // namespace pdfs
