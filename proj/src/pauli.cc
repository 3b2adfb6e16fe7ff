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

#include "pauli_dfs/pauli.h"

#include <algorithm>
#include <bit>

#include "pauli_dfs/errors.h"

namespace pdfs {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t n_qubits) {
    return (n_qubits + kWordBits - 1) / kWordBits;
}

std::uint64_t qubit_bit(std::size_t qubit) {
    return std::uint64_t{1} << (kWordBits - 1 - qubit % kWordBits);
}

void require_same_size(const PauliElement &p, const PauliElement &q) {
    if (p.n_qubits() != q.n_qubits()) {
        throw DimensionMismatch("Pauli elements act on different qubit counts: " + std::to_string(p.n_qubits()) +
                                " vs " + std::to_string(q.n_qubits()));
    }
}

}  // namespace

PauliElement::PauliElement(std::size_t n_qubits)
    : n_qubits_(n_qubits), words_(words_for(n_qubits)), phase_(0), bits_(2 * words_for(n_qubits), 0) {
    if (n_qubits == 0) {
        throw std::invalid_argument("a Pauli element needs at least one qubit");
    }
}

PauliElement::PauliElement(std::size_t n_qubits, unsigned phase_exp, std::vector<std::uint64_t> bits)
    : n_qubits_(n_qubits), words_(words_for(n_qubits)), phase_(phase_exp & 3u), bits_(std::move(bits)) {
}

PauliElement PauliElement::scalar(std::size_t n_qubits, unsigned phase_exp) {
    PauliElement p(n_qubits);
    p.phase_ = phase_exp & 3u;
    return p;
}

PauliElement PauliElement::from_index_masks(std::size_t n_qubits, unsigned phase_exp, std::uint64_t x_mask,
                                            std::uint64_t z_mask) {
    if (n_qubits > kWordBits) {
        throw SizeError("index masks only cover up to 64 qubits");
    }
    PauliElement p(n_qubits);
    p.phase_ = phase_exp & 3u;
    for (std::size_t q = 0; q < n_qubits; ++q) {
        std::size_t shift = n_qubits - 1 - q;
        p.set_letter(q, (x_mask >> shift) & 1u, (z_mask >> shift) & 1u);
    }
    return p;
}

void PauliElement::set_letter(std::size_t qubit, bool x_bit, bool z_bit) {
    std::size_t w = qubit / kWordBits;
    std::uint64_t b = qubit_bit(qubit);
    bits_[w] = x_bit ? (bits_[w] | b) : (bits_[w] & ~b);
    bits_[words_ + w] = z_bit ? (bits_[words_ + w] | b) : (bits_[words_ + w] & ~b);
}

bool PauliElement::x(std::size_t qubit) const {
    return (bits_[qubit / kWordBits] & qubit_bit(qubit)) != 0;
}

bool PauliElement::z(std::size_t qubit) const {
    return (bits_[words_ + qubit / kWordBits] & qubit_bit(qubit)) != 0;
}

char PauliElement::letter(std::size_t qubit) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[(x(qubit) ? 1 : 0) | (z(qubit) ? 2 : 0)];
}

std::uint64_t PauliElement::x_index_mask() const {
    if (n_qubits_ > kWordBits) {
        throw SizeError("index masks only cover up to 64 qubits");
    }
    return bits_[0] >> (kWordBits - n_qubits_);
}

std::uint64_t PauliElement::z_index_mask() const {
    if (n_qubits_ > kWordBits) {
        throw SizeError("index masks only cover up to 64 qubits");
    }
    return bits_[words_] >> (kWordBits - n_qubits_);
}

bool PauliElement::is_scalar() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t PauliElement::weight() const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) {
        total += std::popcount(bits_[w] | bits_[words_ + w]);
    }
    return total;
}

bool PauliElement::same_letters(const PauliElement &other) const {
    return n_qubits_ == other.n_qubits_ && bits_ == other.bits_;
}

PauliElement PauliElement::with_phase(unsigned phase_exp) const {
    PauliElement p = *this;
    p.phase_ = phase_exp & 3u;
    return p;
}

std::string PauliElement::str() const {
    static constexpr const char *kSigns[4] = {"+", "+i", "-", "-i"};
    std::string out = kSigns[phase_];
    out.reserve(out.size() + n_qubits_);
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        out.push_back(letter(q));
    }
    return out;
}

std::size_t PauliElement::hash() const {
    std::size_t h = std::hash<std::size_t>{}(n_qubits_ * 4 + phase_);
    for (std::uint64_t w : bits_) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::strong_ordering PauliElement::operator<=>(const PauliElement &other) const {
    if (auto c = n_qubits_ <=> other.n_qubits_; c != 0) {
        return c;
    }
    if (auto c = phase_ <=> other.phase_; c != 0) {
        return c;
    }
    // x words come first in bits_, then z words, so this is x-then-z lexicographic.
    return std::lexicographical_compare_three_way(bits_.begin(), bits_.end(), other.bits_.begin(),
                                                  other.bits_.end());
}

PauliElement parse_pauli(std::string_view text, std::optional<std::size_t> n_qubits) {
    std::size_t pos = 0;
    unsigned phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase += 1;
        ++pos;
    }
    std::size_t body_start = pos;
    std::size_t body_len = text.size() - body_start;
    if (body_len == 0) {
        throw ParseError("Pauli string '" + std::string(text) + "' has no letters", pos);
    }
    if (n_qubits.has_value() && *n_qubits != body_len) {
        throw ParseError("Pauli string '" + std::string(text) + "' has " + std::to_string(body_len) +
                             " letters, expected " + std::to_string(*n_qubits),
                         body_start + std::min(body_len, *n_qubits));
    }
    PauliElement p(body_len);
    p.phase_ = phase & 3u;
    for (std::size_t q = 0; q < body_len; ++q) {
        char c = text[body_start + q];
        switch (c) {
            case 'I':
                break;
            case 'X':
                p.set_letter(q, true, false);
                break;
            case 'Y':
                p.set_letter(q, true, true);
                break;
            case 'Z':
                p.set_letter(q, false, true);
                break;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "' in Pauli string '" +
                                     std::string(text) + "'",
                                 body_start + q);
        }
    }
    return p;
}

std::string format_pauli(const PauliElement &p) {
    return p.str();
}

PauliElement mul(const PauliElement &p, const PauliElement &q) {
    require_same_size(p, q);
    std::size_t words = p.words_;
    std::vector<std::uint64_t> bits(2 * words);
    // Work in X^x Z^z form, where letter form L = i^{|x&z|} X^x Z^z:
    //   X^x1 Z^z1 X^x2 Z^z2 = (-1)^{|z1&x2|} X^{x1^x2} Z^{z1^z2}.
    unsigned acc = p.phase_ + q.phase_;
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t x1 = p.bits_[w], z1 = p.bits_[words + w];
        std::uint64_t x2 = q.bits_[w], z2 = q.bits_[words + w];
        std::uint64_t x3 = x1 ^ x2, z3 = z1 ^ z2;
        acc += std::popcount(x1 & z1) + std::popcount(x2 & z2) + 2 * std::popcount(z1 & x2);
        acc += 3 * std::popcount(x3 & z3);  // -|x3&z3| mod 4
        bits[w] = x3;
        bits[words + w] = z3;
    }
    return PauliElement(p.n_qubits_, acc & 3u, std::move(bits));
}

Commutation commutes(const PauliElement &p, const PauliElement &q) {
    require_same_size(p, q);
    std::size_t words = p.num_words();
    unsigned parity = 0;
    for (std::size_t w = 0; w < words; ++w) {
        parity += std::popcount((p.x_words()[w] & q.z_words()[w]) ^ (p.z_words()[w] & q.x_words()[w]));
    }
    return (parity & 1u) ? Commutation::anticommute : Commutation::commute;
}

PauliElement adjoint(const PauliElement &p) {
    // Letters are Hermitian, so only the global phase conjugates.
    return p.with_phase((4 - p.phase_exp()) & 3u);
}

std::uint64_t pauli_string_count(std::size_t n_qubits) {
    if (2 * n_qubits >= 64) {
        throw SizeError("4^K does not fit in 64 bits for K = " + std::to_string(n_qubits));
    }
    return std::uint64_t{1} << (2 * n_qubits);
}

std::uint64_t pauli_group_order(std::size_t n_qubits) {
    if (2 * n_qubits + 2 >= 64) {
        throw SizeError("4^(K+1) does not fit in 64 bits for K = " + std::to_string(n_qubits));
    }
    return std::uint64_t{1} << (2 * n_qubits + 2);
}

}  // namespace pdfs
