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

#include <bit>

#include "pauli_dfs/kernels.h"

namespace pdfs::kernels {

namespace {

void accumulate_pauli_scalar(std::uint64_t x_mask, std::uint64_t z_mask, cplx coef, const cplx *in, cplx *out,
                             std::size_t n) {
    for (std::size_t b = 0; b < n; ++b) {
        cplx term = coef * in[b];
        if (std::popcount(b & z_mask) & 1) {
            term = -term;
        }
        out[b ^ x_mask] += term;
    }
}

void axpy_scalar(cplx a, const cplx *x, cplx *y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += a * x[i];
    }
}

cplx dot_scalar(const cplx *x, const cplx *y, std::size_t n) {
    cplx acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

}  // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{"scalar", accumulate_pauli_scalar, axpy_scalar, dot_scalar};
    return table;
}

}  // namespace pdfs::kernels
