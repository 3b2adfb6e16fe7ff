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

#include "pauli_dfs/subgroup.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pauli_dfs/errors.h"

namespace pdfs {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits symplectic_bits(const PauliElement &p) {
    Bits bits(2 * p.num_words());
    std::copy(p.x_words(), p.x_words() + p.num_words(), bits.begin());
    std::copy(p.z_words(), p.z_words() + p.num_words(), bits.begin() + p.num_words());
    return bits;
}

struct EchelonRow {
    Bits bits;
    std::size_t pivot_word;
    std::uint64_t pivot_mask;
    std::uint64_t combination;  // which lifts xor to this row
};

/// Greedy sift over the symplectic image with phase tracking.
class Sifter {
   public:
    /// Reduces `bits`; returns the lift combination and leaves the residue in `bits`.
    std::uint64_t reduce(Bits &bits) const {
        std::uint64_t comb = 0;
        for (const EchelonRow &row : rows_) {
            if (bits[row.pivot_word] & row.pivot_mask) {
                for (std::size_t w = 0; w < bits.size(); ++w) {
                    bits[w] ^= row.bits[w];
                }
                comb ^= row.combination;
            }
        }
        return comb;
    }

    void add(Bits residue, std::uint64_t combination) {
        for (std::size_t w = 0; w < residue.size(); ++w) {
            if (residue[w] != 0) {
                std::uint64_t mask = std::uint64_t{1} << std::countr_zero(residue[w]);
                rows_.push_back({std::move(residue), w, mask, combination});
                return;
            }
        }
    }

   private:
    std::vector<EchelonRow> rows_;
};

bool is_zero(const Bits &bits) {
    return std::all_of(bits.begin(), bits.end(), [](std::uint64_t w) { return w == 0; });
}

PauliElement ordered_product(const std::vector<PauliElement> &lifts, std::uint64_t bits, std::size_t n_qubits) {
    PauliElement prod(n_qubits);
    for (std::size_t j = 0; j < lifts.size(); ++j) {
        if ((bits >> j) & 1u) {
            prod = prod * lifts[j];
        }
    }
    return prod;
}

// Smallest positive generator of the cyclic group of i-exponents generated by
// the collected scalars, expressed as the group size 1, 2 or 4.
unsigned scalar_group_size(const std::vector<unsigned> &exponents) {
    unsigned g = 4;
    for (unsigned e : exponents) {
        g = std::gcd(g, e & 3u);
    }
    return 4 / g;
}

}  // namespace

std::optional<std::size_t> PauliSubgroup::index_of(const PauliElement &p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t PauliSubgroup::identity_index() const {
    return *index_of(PauliElement::identity(n_qubits_));
}

PauliSubgroup closure(const std::vector<PauliElement> &generators, std::optional<std::size_t> n_qubits,
                      std::size_t max_order) {
    std::size_t k = n_qubits.value_or(generators.empty() ? 1 : generators.front().n_qubits());
    for (const PauliElement &g : generators) {
        if (g.n_qubits() != k) {
            throw DimensionMismatch("generators act on different qubit counts: " + std::to_string(g.n_qubits()) +
                                    " vs " + std::to_string(k));
        }
    }

    PauliSubgroup group;
    group.n_qubits_ = k;
    group.generators_ = generators;

    Sifter sifter;
    std::vector<unsigned> scalar_exps;
    for (const PauliElement &g : generators) {
        Bits bits = symplectic_bits(g);
        std::uint64_t comb = sifter.reduce(bits);
        if (is_zero(bits)) {
            // g is a scalar multiple of a product of known lifts.
            PauliElement residue = g * inverse(ordered_product(group.lifts_, comb, k));
            scalar_exps.push_back(residue.phase_exp());
            continue;
        }
        if (group.lifts_.size() >= 62) {
            throw SizeError("subgroup order exceeds the closure cap of " + std::to_string(max_order));
        }
        comb ^= std::uint64_t{1} << group.lifts_.size();
        group.lifts_.push_back(g);
        sifter.add(std::move(bits), comb);
    }

    const std::vector<PauliElement> &lifts = group.lifts_;
    for (std::size_t a = 0; a < lifts.size(); ++a) {
        scalar_exps.push_back(2 * lifts[a].phase_exp());  // h^2 = i^{2p} I
        for (std::size_t b = a + 1; b < lifts.size(); ++b) {
            if (commutes(lifts[a], lifts[b]) == Commutation::anticommute) {
                group.abelian_ = false;
                scalar_exps.push_back(2);
            }
        }
    }
    group.scalar_count_ = scalar_group_size(scalar_exps);

    std::size_t r = lifts.size();
    long double order = static_cast<long double>(group.scalar_count_) * std::ldexp(1.0L, static_cast<int>(r));
    if (order > static_cast<long double>(max_order)) {
        throw SizeError("subgroup order " + std::to_string(static_cast<unsigned long long>(order)) +
                        " exceeds the closure cap of " + std::to_string(max_order));
    }

    std::size_t n_products = std::size_t{1} << r;
    std::vector<PauliElement> products;
    products.reserve(n_products);
    products.push_back(PauliElement::identity(k));
    for (std::size_t b = 1; b < n_products; ++b) {
        std::size_t top = std::bit_width(b) - 1;
        products.push_back(products[b & ~(std::size_t{1} << top)] * lifts[top]);
    }

    unsigned step = 4 / group.scalar_count_;
    std::vector<std::pair<PauliElement, GroupCoordinates>> entries;
    entries.reserve(n_products * group.scalar_count_);
    for (std::size_t b = 0; b < n_products; ++b) {
        for (unsigned t = 0; t < 4; t += step) {
            entries.emplace_back(products[b] * PauliElement::scalar(k, t), GroupCoordinates{t, b});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const auto &l, const auto &r2) { return l.first < r2.first; });

    group.elements_.reserve(entries.size());
    group.coords_.reserve(entries.size());
    group.index_.reserve(entries.size());
    std::size_t fp = std::hash<std::size_t>{}(k);
    for (auto &[element, coords] : entries) {
        fp ^= element.hash() + 0x9e3779b97f4a7c15ULL + (fp << 6) + (fp >> 2);
        group.index_.emplace(element, group.elements_.size());
        group.elements_.push_back(std::move(element));
        group.coords_.push_back(coords);
    }
    group.fingerprint_ = fp;
    return group;
}

bool Character::is_trivial() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](std::uint8_t e) { return e == 0; });
}

std::vector<Character> characters(const PauliSubgroup &group) {
    if (!group.is_abelian()) {
        throw ClassificationError(
            "non-Abelian Pauli subgroups have no one-dimensional irreps; use the joint-eigenspace search instead");
    }
    const auto &lifts = group.independent_generators();
    std::size_t r = lifts.size();
    unsigned scalar_choices = group.scalar_count();
    std::size_t lift_combos = std::size_t{1} << r;

    std::vector<Character> out;
    out.reserve(scalar_choices * lift_combos);
    std::size_t label = 1;
    for (unsigned w = 0; w < scalar_choices; ++w) {
        // chi(h_j)^2 = chi(h_j^2) = chi(i^{2 p_j} I) = i^{2 w p_j}, so chi(h_j) = i^{w p_j mod 2} or its negative.
        std::vector<std::uint8_t> base(r);
        for (std::size_t j = 0; j < r; ++j) {
            base[j] = static_cast<std::uint8_t>((w * lifts[j].phase_exp()) & 1u);
        }
        for (std::size_t digits = 0; digits < lift_combos; ++digits) {
            std::vector<std::uint8_t> lift_exps(r);
            for (std::size_t j = 0; j < r; ++j) {
                bool flipped = (digits >> (r - 1 - j)) & 1u;  // h_0 is the most significant digit
                lift_exps[j] = static_cast<std::uint8_t>((base[j] + (flipped ? 2 : 0)) & 3u);
            }
            std::vector<std::uint8_t> exps(group.order());
            for (std::size_t n = 0; n < group.order(); ++n) {
                const GroupCoordinates &c = group.coordinates(n);
                unsigned e = w * c.scalar_exp;
                for (std::size_t j = 0; j < r; ++j) {
                    if ((c.bits >> j) & 1u) {
                        e += lift_exps[j];
                    }
                }
                exps[n] = static_cast<std::uint8_t>(e & 3u);
            }
            out.emplace_back(label++, group.fingerprint(), std::move(exps), w, std::move(lift_exps));
        }
    }
    return out;
}

void require_character_of(const PauliSubgroup &group, const Character &character) {
    if (character.group_fingerprint() != group.fingerprint() || character.size() != group.order()) {
        throw ClassificationError("character " + std::to_string(character.label()) +
                                  " does not belong to the given subgroup");
    }
}

ReducibilityResult reducibility_sum(const PauliSubgroup &group, std::size_t dense_limit) {
    check_dense_limit(group.n_qubits(), dense_limit);
    ReducibilityResult result;
    for (const PauliElement &g : group.elements()) {
        result.sum += std::norm(pauli_trace(g, dense_limit));
    }
    double n = static_cast<double>(group.order());
    result.verdict = std::abs(result.sum - n) <= 1e-9 * n ? Reducibility::irreducible : Reducibility::reducible;
    return result;
}

}  // namespace pdfs
