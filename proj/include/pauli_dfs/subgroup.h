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

#ifndef PAULI_DFS_SUBGROUP_H
#define PAULI_DFS_SUBGROUP_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pauli_dfs/dense.h"
#include "pauli_dfs/pauli.h"

namespace pdfs {

inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 20;

/// Every element of a Pauli subgroup factors uniquely as
///   i^scalar_exp * h_0^b_0 * h_1^b_1 * ... (product in increasing j)
/// over the subgroup's independent lifts h_j; `bits` holds the b_j.
struct GroupCoordinates {
    unsigned scalar_exp = 0;
    std::uint64_t bits = 0;
};

/// A closed subgroup of the K-qubit Pauli group with canonically ordered elements.
class PauliSubgroup {
   public:
    std::size_t n_qubits() const {
        return n_qubits_;
    }
    std::size_t order() const {
        return elements_.size();
    }
    const std::vector<PauliElement> &elements() const {
        return elements_;
    }
    /// The generator list the group was closed from, as given.
    const std::vector<PauliElement> &generators() const {
        return generators_;
    }
    /// Independent lifts: one element per basis vector of the group's
    /// symplectic (phase-free) image, extracted greedily from the generators.
    const std::vector<PauliElement> &independent_generators() const {
        return lifts_;
    }
    /// Number of identity multiples in the group: 1, 2 (+-I) or 4 (+-I, +-iI).
    unsigned scalar_count() const {
        return scalar_count_;
    }
    const GroupCoordinates &coordinates(std::size_t element_index) const {
        return coords_[element_index];
    }

    bool is_abelian() const {
        return abelian_;
    }
    bool contains_minus_identity() const {
        return scalar_count_ >= 2;
    }
    bool contains_imaginary_identity() const {
        return scalar_count_ == 4;
    }

    std::optional<std::size_t> index_of(const PauliElement &p) const;
    bool contains(const PauliElement &p) const {
        return index_of(p).has_value();
    }
    std::size_t identity_index() const;

    /// Hash of the canonical element list; characters remember it so a
    /// character can be matched to the group it was computed for.
    std::size_t fingerprint() const {
        return fingerprint_;
    }

   private:
    friend PauliSubgroup closure(const std::vector<PauliElement> &, std::optional<std::size_t>, std::size_t);

    std::size_t n_qubits_ = 0;
    std::vector<PauliElement> elements_;
    std::vector<GroupCoordinates> coords_;
    std::vector<PauliElement> generators_;
    std::vector<PauliElement> lifts_;
    unsigned scalar_count_ = 1;
    bool abelian_ = true;
    std::size_t fingerprint_ = 0;
    std::unordered_map<PauliElement, std::size_t, PauliElementHash> index_;
};

/// Smallest subgroup containing the generators. An empty generator list yields
/// {I} on `n_qubits` qubits (1 when unspecified). Throws DimensionMismatch on
/// mixed qubit counts and SizeError when the order would exceed `max_order`.
PauliSubgroup closure(const std::vector<PauliElement> &generators, std::optional<std::size_t> n_qubits = std::nullopt,
                      std::size_t max_order = kDefaultClosureCap);

/// The Kraus support of an interaction whose system operators are `terms`:
/// the multiplicative closure of those strings.
inline PauliSubgroup subgroup_from_error_generators(const std::vector<PauliElement> &terms,
                                                    std::optional<std::size_t> n_qubits = std::nullopt,
                                                    std::size_t max_order = kDefaultClosureCap) {
    return closure(terms, n_qubits, max_order);
}

/// A one-dimensional irreducible character: a homomorphism from the group into
/// the fourth roots of unity. Values are stored as exponents of i, aligned with
/// the owning group's element order.
class Character {
   public:
    Character(std::size_t label, std::size_t group_fingerprint, std::vector<std::uint8_t> exponents,
              unsigned scalar_exponent, std::vector<std::uint8_t> lift_exponents)
        : label_(label),
          group_fingerprint_(group_fingerprint),
          exponents_(std::move(exponents)),
          scalar_exponent_(scalar_exponent),
          lift_exponents_(std::move(lift_exponents)) {
    }

    /// 1-based; label 1 is the trivial character.
    std::size_t label() const {
        return label_;
    }
    std::size_t group_fingerprint() const {
        return group_fingerprint_;
    }
    std::size_t size() const {
        return exponents_.size();
    }
    unsigned exponent(std::size_t element_index) const {
        return exponents_[element_index];
    }
    Complex value(std::size_t element_index) const {
        return phase_value(exponents_[element_index]);
    }
    const std::vector<std::uint8_t> &exponents() const {
        return exponents_;
    }
    /// chi(iI) = i^scalar_exponent when iI is in the group, chi(-I) = (-1)^scalar_exponent when only -I is.
    unsigned scalar_exponent() const {
        return scalar_exponent_;
    }
    /// Exponents of chi on the group's independent lifts.
    const std::vector<std::uint8_t> &lift_exponents() const {
        return lift_exponents_;
    }
    bool is_trivial() const;

   private:
    std::size_t label_;
    std::size_t group_fingerprint_;
    std::vector<std::uint8_t> exponents_;
    unsigned scalar_exponent_;
    std::vector<std::uint8_t> lift_exponents_;
};

/// All N one-dimensional characters of an Abelian subgroup, trivial first.
/// Enumeration is a mixed-radix count over (scalar generator, h_0, h_1, ...)
/// with the last lift varying fastest. Throws ClassificationError for
/// non-Abelian groups, which have no one-dimensional irreps.
std::vector<Character> characters(const PauliSubgroup &group);

/// Throws ClassificationError unless `character` was computed for `group`.
void require_character_of(const PauliSubgroup &group, const Character &character);

enum class Reducibility { irreducible, reducible };

struct ReducibilityResult {
    double sum = 0;  // sum over elements of |trace|^2 in the natural representation
    Reducibility verdict = Reducibility::reducible;
};

/// Reducibility criterion for the natural 2^K-dimensional representation:
/// the sum equals N exactly for an irreducible representation.
ReducibilityResult reducibility_sum(const PauliSubgroup &group, std::size_t dense_limit = kDefaultDenseLimit);

}  // namespace pdfs

#endif
