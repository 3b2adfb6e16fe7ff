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

#include "pauli_dfs/kernels.h"

#include <bit>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"

using namespace pdfs::kernels;

namespace {

std::vector<cplx> random_vector(std::mt19937_64 &rng, std::size_t n) {
    std::normal_distribution<double> normal;
    std::vector<cplx> v(n);
    for (auto &c : v) {
        c = {normal(rng), normal(rng)};
    }
    return v;
}

double max_diff(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace

TEST(kernels, scalar_accumulate_matches_definition) {
    std::mt19937_64 rng(1);
    const KernelTable &k = scalar_kernels();
    for (std::size_t bits = 0; bits <= 6; ++bits) {
        std::size_t n = std::size_t{1} << bits;
        for (std::uint64_t x = 0; x < n; ++x) {
            std::uint64_t z = rng() % n;
            auto in = random_vector(rng, n);
            auto out = random_vector(rng, n);
            auto expected = out;
            cplx coef(0.3, -1.2);
            for (std::size_t b = 0; b < n; ++b) {
                double sign = (std::popcount(b & z) & 1) ? -1 : 1;
                expected[b ^ x] += coef * sign * in[b];
            }
            k.accumulate_pauli(x, z, coef, in.data(), out.data(), n);
            ASSERT_LT(max_diff(out, expected), 1e-13);
        }
    }
}

TEST(kernels, avx2_matches_scalar) {
    const KernelTable *fast = avx2_kernels();
    if (fast == nullptr) {
        GTEST_SKIP() << "no AVX2 kernels on this machine";
    }
    const KernelTable &ref = scalar_kernels();
    std::mt19937_64 rng(2);
    for (std::size_t bits = 0; bits <= 10; ++bits) {
        std::size_t n = std::size_t{1} << bits;
        for (int rep = 0; rep < 40; ++rep) {
            std::uint64_t x = rng() % n;
            std::uint64_t z = rng() % n;
            cplx coef(std::normal_distribution<double>()(rng), std::normal_distribution<double>()(rng));
            auto in = random_vector(rng, n);
            auto out_ref = random_vector(rng, n);
            auto out_fast = out_ref;
            ref.accumulate_pauli(x, z, coef, in.data(), out_ref.data(), n);
            fast->accumulate_pauli(x, z, coef, in.data(), out_fast.data(), n);
            ASSERT_LT(max_diff(out_ref, out_fast), 1e-12) << "n=" << n << " x=" << x << " z=" << z;

            auto y_ref = random_vector(rng, n);
            auto y_fast = y_ref;
            ref.axpy(coef, in.data(), y_ref.data(), n);
            fast->axpy(coef, in.data(), y_fast.data(), n);
            ASSERT_LT(max_diff(y_ref, y_fast), 1e-12);

            cplx d_ref = ref.dot(in.data(), y_ref.data(), n);
            cplx d_fast = fast->dot(in.data(), y_ref.data(), n);
            ASSERT_LT(std::abs(d_ref - d_fast), 1e-10 * (1 + std::abs(d_ref)));
        }
    }
}

TEST(kernels, odd_lengths_for_vector_ops) {
    const KernelTable *fast = avx2_kernels();
    if (fast == nullptr) {
        GTEST_SKIP() << "no AVX2 kernels on this machine";
    }
    std::mt19937_64 rng(3);
    for (std::size_t n : {1u, 3u, 5u, 7u, 9u, 31u}) {
        auto x = random_vector(rng, n);
        auto y_ref = random_vector(rng, n);
        auto y_fast = y_ref;
        scalar_kernels().axpy({1, 2}, x.data(), y_ref.data(), n);
        fast->axpy({1, 2}, x.data(), y_fast.data(), n);
        ASSERT_LT(max_diff(y_ref, y_fast), 1e-12);
        ASSERT_LT(std::abs(scalar_kernels().dot(x.data(), y_ref.data(), n) - fast->dot(x.data(), y_ref.data(), n)),
                  1e-10);
    }
}

TEST(kernels, active_table_is_known) {
    std::string name = active_kernels().name;
    ASSERT_TRUE(name == "scalar" || name == "avx2") << name;
}
