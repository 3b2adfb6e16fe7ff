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

#ifndef PAULI_DFS_KERNELS_H
#define PAULI_DFS_KERNELS_H

#include <complex>
#include <cstddef>
#include <cstdint>

// Inner loops over state vectors. Every routine has a portable scalar reference
// implementation and, on x86-64, an AVX2+FMA variant; the variant is picked once
// at runtime from CPUID. Set PDFS_KERNELS=scalar to force the reference path.

namespace pdfs::kernels {

using cplx = std::complex<double>;

struct KernelTable {
    const char *name;
    /// out[b ^ x_mask] += coef * (-1)^popcount(b & z_mask) * in[b] for b in [0, n).
    /// n is a power of two and both masks are below n.
    void (*accumulate_pauli)(std::uint64_t x_mask, std::uint64_t z_mask, cplx coef, const cplx *in, cplx *out,
                             std::size_t n);
    /// y += a * x
    void (*axpy)(cplx a, const cplx *x, cplx *y, std::size_t n);
    /// sum_i conj(x_i) * y_i
    cplx (*dot)(const cplx *x, const cplx *y, std::size_t n);
};

const KernelTable &scalar_kernels();

/// The AVX2 table, or nullptr when it was not compiled in or the CPU lacks avx2/fma.
const KernelTable *avx2_kernels();

/// The table used by the library.
const KernelTable &active_kernels();

}  // namespace pdfs::kernels

#endif
