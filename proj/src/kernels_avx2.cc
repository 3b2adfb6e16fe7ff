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

// Compiled with -mavx2 -mfma; only reached through avx2_kernels() after a CPUID check.

#include <immintrin.h>

#include <bit>

#include "pauli_dfs/kernels.h"

namespace pdfs::kernels {

namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d cmul(__m256d v, __m256d coef_re, __m256d coef_im) {
    __m256d swapped = _mm256_permute_pd(v, 0x5);  // [im0, re0, im1, re1]
    return _mm256_fmaddsub_pd(coef_re, v, _mm256_mul_pd(coef_im, swapped));
}

inline double parity_sign(std::uint64_t bits) {
    return (std::popcount(bits) & 1) ? -1.0 : 1.0;
}

void accumulate_pauli_avx2(std::uint64_t x_mask, std::uint64_t z_mask, cplx coef, const cplx *in, cplx *out,
                           std::size_t n) {
    const double *src = reinterpret_cast<const double *>(in);
    double *dst = reinterpret_cast<double *>(out);
    const __m256d cre = _mm256_set1_pd(coef.real());
    const __m256d cim = _mm256_set1_pd(coef.imag());
    const bool swap_pair = (x_mask & 1u) != 0;
    std::size_t j = 0;
    // Output pair (j, j+1) reads input pair (j^x, (j+1)^x), which is contiguous
    // starting at (j^x) & ~1 and lane-swapped when x is odd.
    for (; j + 2 <= n; j += 2) {
        std::uint64_t s0 = j ^ x_mask;
        std::uint64_t s1 = (j + 1) ^ x_mask;
        std::uint64_t base = s0 & ~std::uint64_t{1};
        __m256d v = _mm256_loadu_pd(src + 2 * base);
        if (swap_pair) {
            v = _mm256_permute4x64_pd(v, 0x4E);
        }
        double g0 = parity_sign(s0 & z_mask);
        double g1 = parity_sign(s1 & z_mask);
        v = _mm256_mul_pd(v, _mm256_set_pd(g1, g1, g0, g0));
        __m256d acc = _mm256_loadu_pd(dst + 2 * j);
        _mm256_storeu_pd(dst + 2 * j, _mm256_add_pd(acc, cmul(v, cre, cim)));
    }
    for (; j < n; ++j) {
        std::uint64_t s = j ^ x_mask;
        out[j] += coef * in[s] * parity_sign(s & z_mask);
    }
}

void axpy_avx2(cplx a, const cplx *x, cplx *y, std::size_t n) {
    const double *xs = reinterpret_cast<const double *>(x);
    double *ys = reinterpret_cast<double *>(y);
    const __m256d are = _mm256_set1_pd(a.real());
    const __m256d aim = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(xs + 2 * i);
        __m256d acc = _mm256_loadu_pd(ys + 2 * i);
        _mm256_storeu_pd(ys + 2 * i, _mm256_add_pd(acc, cmul(v, are, aim)));
    }
    for (; i < n; ++i) {
        y[i] += a * x[i];
    }
}

cplx dot_avx2(const cplx *x, const cplx *y, std::size_t n) {
    const double *xs = reinterpret_cast<const double *>(x);
    const double *ys = reinterpret_cast<const double *>(y);
    __m256d direct = _mm256_setzero_pd();  // xr*yr, xi*yi
    __m256d cross = _mm256_setzero_pd();   // xr*yi, xi*yr
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xs + 2 * i);
        __m256d yv = _mm256_loadu_pd(ys + 2 * i);
        direct = _mm256_fmadd_pd(xv, yv, direct);
        cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0x5), cross);
    }
    alignas(32) double d[4];
    alignas(32) double c[4];
    _mm256_store_pd(d, direct);
    _mm256_store_pd(c, cross);
    cplx acc((d[0] + d[1]) + (d[2] + d[3]), (c[0] - c[1]) + (c[2] - c[3]));
    for (; i < n; ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

}  // namespace

const KernelTable &avx2_kernel_table() {
    static const KernelTable table{"avx2", accumulate_pauli_avx2, axpy_avx2, dot_avx2};
    return table;
}

}  // namespace pdfs::kernels
