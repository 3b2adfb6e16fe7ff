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

#ifndef PAULI_DFS_PAULI_H
#define PAULI_DFS_PAULI_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdfs {

enum class Commutation { commute, anticommute };

/// One element of the K-qubit Pauli group, i^phase_exp * L_1 (x) ... (x) L_K with
/// each letter L in {I, X, Y, Z}.
///
/// Letters are stored in symplectic form: X sets the x bit, Z the z bit, and Y
/// sets both. The phase is kept relative to the letter form (Y is the Hermitian
/// Pauli matrix, not X*Z), so "+Y" has phase_exp 0.
///
/// Qubit 0 is the leftmost letter. Bits are packed most-significant-first inside
/// 64-bit words, which makes a word-by-word numeric comparison of the masks the
/// same as a lexicographic comparison over qubits.
class PauliElement {
   public:
    /// The identity on `n_qubits` qubits.
    explicit PauliElement(std::size_t n_qubits);

    static PauliElement identity(std::size_t n_qubits) {
        return PauliElement(n_qubits);
    }
    /// i^phase_exp times the identity.
    static PauliElement scalar(std::size_t n_qubits, unsigned phase_exp);
    /// Build from masks in computational-basis convention: qubit 0 is the most
    /// significant of the low `n_qubits` bits. Requires n_qubits <= 64.
    static PauliElement from_index_masks(std::size_t n_qubits, unsigned phase_exp, std::uint64_t x_mask,
                                         std::uint64_t z_mask);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    unsigned phase_exp() const {
        return phase_;
    }
    bool x(std::size_t qubit) const;
    bool z(std::size_t qubit) const;
    /// 'I', 'X', 'Y' or 'Z'.
    char letter(std::size_t qubit) const;

    /// Masks in computational-basis convention (see from_index_masks). Requires n_qubits <= 64.
    std::uint64_t x_index_mask() const;
    std::uint64_t z_index_mask() const;

    /// Multiple of the identity (no X or Z factor anywhere).
    bool is_scalar() const;
    bool is_hermitian() const {
        return phase_ % 2 == 0;
    }
    std::size_t weight() const;
    /// Same letters, ignoring the global phase.
    bool same_letters(const PauliElement &other) const;

    /// Explicit sign ("+", "-", "+i", "-i") followed by K letters.
    std::string str() const;

    PauliElement with_phase(unsigned phase_exp) const;

    std::size_t hash() const;

    bool operator==(const PauliElement &other) const = default;
    /// Canonical order: qubit count, phase_exp, x mask, z mask.
    std::strong_ordering operator<=>(const PauliElement &other) const;

    // Raw word access for the arithmetic routines.
    std::size_t num_words() const {
        return words_;
    }
    const std::uint64_t *x_words() const {
        return bits_.data();
    }
    const std::uint64_t *z_words() const {
        return bits_.data() + words_;
    }

   private:
    PauliElement(std::size_t n_qubits, unsigned phase_exp, std::vector<std::uint64_t> bits);
    void set_letter(std::size_t qubit, bool x_bit, bool z_bit);

    friend PauliElement parse_pauli(std::string_view text, std::optional<std::size_t> n_qubits);
    friend PauliElement mul(const PauliElement &p, const PauliElement &q);

    std::size_t n_qubits_;
    std::size_t words_;
    unsigned phase_;
    std::vector<std::uint64_t> bits_;  // x words followed by z words
};

/// Grammar: `sign? letters` with sign in {+, -, +i, -i, i} and letters in {I,X,Y,Z}+.
/// Throws ParseError naming the offending position, or on a length mismatch with
/// `n_qubits` when that is given.
PauliElement parse_pauli(std::string_view text, std::optional<std::size_t> n_qubits = std::nullopt);

std::string format_pauli(const PauliElement &p);

/// Exact group product p*q. Throws DimensionMismatch on qubit-count mismatch.
PauliElement mul(const PauliElement &p, const PauliElement &q);
inline PauliElement operator*(const PauliElement &p, const PauliElement &q) {
    return mul(p, q);
}

/// Commute iff the symplectic inner product is even.
Commutation commutes(const PauliElement &p, const PauliElement &q);

PauliElement adjoint(const PauliElement &p);

/// Group inverse; equal to the adjoint since every element is unitary.
inline PauliElement inverse(const PauliElement &p) {
    return adjoint(p);
}

/// Phase-free Pauli strings on K qubits, 4^K. Throws SizeError when it does not fit in 64 bits.
std::uint64_t pauli_string_count(std::size_t n_qubits);
/// Order of the full Pauli group, 4^(K+1) (four global phases times 4^K strings).
std::uint64_t pauli_group_order(std::size_t n_qubits);

struct PauliElementHash {
    std::size_t operator()(const PauliElement &p) const {
        return p.hash();
    }
};

}  // namespace pdfs

#endif
