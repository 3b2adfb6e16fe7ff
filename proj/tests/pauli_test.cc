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

#include <random>

#include "gtest/gtest.h"
#include "pauli_dfs/dense.h"
#include "pauli_dfs/errors.h"
#include "support/oracles.h"
#include "support/random_groups.h"

using namespace pdfs;
using pdfs::testing::kron_matrix;
using pdfs::testing::random_pauli;

TEST(pauli_parse, letters_and_phase) {
    PauliElement zi = parse_pauli("ZI");
    ASSERT_EQ(zi.n_qubits(), 2u);
    ASSERT_EQ(zi.phase_exp(), 0u);
    ASSERT_EQ(zi.z_index_mask(), 0b10u);
    ASSERT_EQ(zi.x_index_mask(), 0u);

    PauliElement i1 = parse_pauli("I");
    ASSERT_EQ(i1.n_qubits(), 1u);
    ASSERT_TRUE(i1 == PauliElement::identity(1));

    PauliElement ixyz = parse_pauli("+iXYZ");
    ASSERT_EQ(ixyz.n_qubits(), 3u);
    ASSERT_EQ(ixyz.phase_exp(), 1u);
    ASSERT_EQ(ixyz.letter(0), 'X');
    ASSERT_EQ(ixyz.letter(1), 'Y');
    ASSERT_EQ(ixyz.letter(2), 'Z');

    ASSERT_EQ(parse_pauli("Y").phase_exp(), 0u);
    ASSERT_EQ(parse_pauli("-Y").phase_exp(), 2u);
    ASSERT_EQ(parse_pauli("iX").phase_exp(), 1u);
    ASSERT_EQ(parse_pauli("-iX").phase_exp(), 3u);
}

TEST(pauli_parse, format_round_trip) {
    for (const char *s : {"+I", "+Y", "-XYZ", "+iXYZ", "-iIIZZ", "+YYYY"}) {
        ASSERT_EQ(format_pauli(parse_pauli(s)), s);
    }
    std::mt19937_64 rng(3);
    for (int t = 0; t < 500; ++t) {
        PauliElement p = random_pauli(rng, 1 + t % 70);
        ASSERT_EQ(parse_pauli(format_pauli(p)), p);
    }
}

TEST(pauli_parse, errors_name_position) {
    try {
        parse_pauli("XQZ");
        FAIL();
    } catch (const ParseError &e) {
        ASSERT_EQ(e.position(), 1u);
    }
    try {
        parse_pauli("-i");
        FAIL();
    } catch (const ParseError &e) {
        ASSERT_EQ(e.position(), 2u);
    }
    ASSERT_THROW(parse_pauli(""), ParseError);
    ASSERT_THROW(parse_pauli("XX", 3), ParseError);
    ASSERT_THROW(parse_pauli("x"), ParseError);
    ASSERT_NO_THROW(parse_pauli("XYZ", 3));
}

TEST(pauli_mul, single_qubit_table) {
    ASSERT_EQ(parse_pauli("X") * parse_pauli("Y"), parse_pauli("+iZ"));
    ASSERT_EQ(parse_pauli("Y") * parse_pauli("X"), parse_pauli("-iZ"));
    ASSERT_EQ(parse_pauli("Z") * parse_pauli("Z"), parse_pauli("I"));
    ASSERT_EQ(parse_pauli("Y") * parse_pauli("Z"), parse_pauli("iX"));
    ASSERT_EQ(parse_pauli("+iXYZ") * parse_pauli("+iXYZ"), parse_pauli("-III"));
    ASSERT_EQ(parse_pauli("XXI") * parse_pauli("IZZ"), parse_pauli("-iXYZ"));
    ASSERT_THROW(parse_pauli("XX") * parse_pauli("X"), DimensionMismatch);
}

TEST(pauli_mul, group_axioms) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10000; ++t) {
        std::size_t n = 1 + t % 8;
        PauliElement a = random_pauli(rng, n);
        PauliElement b = random_pauli(rng, n);
        PauliElement c = random_pauli(rng, n);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * PauliElement::identity(n), a);
        ASSERT_EQ(PauliElement::identity(n) * a, a);
        ASSERT_EQ(a * inverse(a), PauliElement::identity(n));
        ASSERT_EQ(inverse(a) * a, PauliElement::identity(n));
    }
}

TEST(pauli_mul, wide_strings_cross_word_boundaries) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 60 + t % 80;
        PauliElement a = random_pauli(rng, n);
        PauliElement b = random_pauli(rng, n);
        // The product phase is fixed by the per-qubit table.
        unsigned phase = a.phase_exp() + b.phase_exp();
        for (std::size_t q = 0; q < n; ++q) {
            PauliElement pa = parse_pauli(std::string(1, a.letter(q)));
            PauliElement pb = parse_pauli(std::string(1, b.letter(q)));
            PauliElement pq = pa * pb;
            phase += pq.phase_exp();
            ASSERT_EQ((a * b).letter(q), pq.letter(0));
        }
        ASSERT_EQ((a * b).phase_exp(), phase % 4);
    }
}

TEST(pauli_mul, homomorphism_into_matrices) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 600; ++t) {
        std::size_t n = 1 + t % 6;
        PauliElement a = random_pauli(rng, n);
        PauliElement b = random_pauli(rng, n);
        Eigen::MatrixXcd lhs = to_matrix(a * b);
        Eigen::MatrixXcd rhs = to_matrix(a) * to_matrix(b);
        ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
        ASSERT_LT((to_matrix(a) - kron_matrix(a)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(pauli_commutes, examples) {
    ASSERT_EQ(commutes(parse_pauli("X"), parse_pauli("Z")), Commutation::anticommute);
    ASSERT_EQ(commutes(parse_pauli("ZZII"), parse_pauli("IIZZ")), Commutation::commute);
    ASSERT_EQ(commutes(parse_pauli("XXI"), parse_pauli("IZZ")), Commutation::anticommute);
    ASSERT_EQ(commutes(parse_pauli("XX"), parse_pauli("ZZ")), Commutation::commute);
}

TEST(pauli_commutes, agrees_with_dense_test_on_all_pairs) {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::size_t count = std::size_t{1} << (2 * n);
        std::vector<PauliElement> all;
        std::vector<Eigen::MatrixXcd> mats;
        for (std::size_t k = 0; k < count; ++k) {
            std::uint64_t x = k & ((1u << n) - 1);
            std::uint64_t z = k >> n;
            all.push_back(PauliElement::from_index_masks(n, 0, x, z));
            mats.push_back(kron_matrix(all.back()));
        }
        for (std::size_t a = 0; a < count; ++a) {
            for (std::size_t b = 0; b < count; ++b) {
                bool dense_commute = (mats[a] * mats[b] - mats[b] * mats[a]).cwiseAbs().maxCoeff() < 1e-12;
                bool dense_anti = (mats[a] * mats[b] + mats[b] * mats[a]).cwiseAbs().maxCoeff() < 1e-12;
                ASSERT_NE(dense_commute, dense_anti);
                ASSERT_EQ(commutes(all[a], all[b]) == Commutation::commute, dense_commute);
            }
        }
    }
}

TEST(pauli_adjoint, examples_and_involution) {
    ASSERT_EQ(adjoint(parse_pauli("Z")), parse_pauli("Z"));
    ASSERT_EQ(adjoint(parse_pauli("+iXYZ")), parse_pauli("-iXYZ"));
    ASSERT_TRUE(parse_pauli("-XY").is_hermitian());
    ASSERT_FALSE(parse_pauli("iXY").is_hermitian());
    std::mt19937_64 rng(14);
    for (int t = 0; t < 1000; ++t) {
        PauliElement p = random_pauli(rng, 1 + t % 6);
        ASSERT_EQ(adjoint(adjoint(p)), p);
        ASSERT_EQ(p.is_hermitian(), adjoint(p) == p);
        if (p.n_qubits() <= 5) {
            Eigen::MatrixXcd m = to_matrix(p);
            ASSERT_LT((to_matrix(adjoint(p)) - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(pauli_matrix, examples) {
    Eigen::MatrixXcd x = to_matrix(parse_pauli("X"));
    Eigen::MatrixXcd expected(2, 2);
    expected << 0, 1, 1, 0;
    ASSERT_EQ(x, expected);
    ASSERT_EQ(pauli_trace(parse_pauli("XXI")), Complex(0, 0));
    ASSERT_EQ(pauli_trace(parse_pauli("-II")), Complex(-4, 0));
    ASSERT_EQ(pauli_trace(parse_pauli("iIII")), Complex(0, 8));
    ASSERT_THROW(to_matrix(PauliElement::identity(13)), SizeError);
    ASSERT_NO_THROW(to_matrix(PauliElement::identity(3), 3));
    ASSERT_THROW(to_matrix(PauliElement::identity(4), 3), SizeError);
}

TEST(pauli_matrix, qubit_zero_is_most_significant) {
    // XXII flips the first two kets: |0000> -> |1100> = index 12.
    StateVector out = apply_pauli(parse_pauli("XXII"), basis_state(4, 0));
    ASSERT_EQ(out(12), Complex(1, 0));
}

TEST(pauli_matrix, unitary) {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 200; ++t) {
        Eigen::MatrixXcd m = to_matrix(random_pauli(rng, 1 + t % 6));
        Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
        ASSERT_LT((m * m.adjoint() - id).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(pauli_counts, string_and_group_orders) {
    ASSERT_EQ(pauli_string_count(1), 4u);
    ASSERT_EQ(pauli_group_order(1), 16u);
    ASSERT_EQ(pauli_string_count(4), 256u);
    ASSERT_EQ(pauli_group_order(4), 1024u);
    ASSERT_THROW(pauli_group_order(31), SizeError);
}
