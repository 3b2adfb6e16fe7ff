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

#ifndef PAULI_DFS_RANDOM_H
#define PAULI_DFS_RANDOM_H

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace pdfs {

/// Engine for one numbered trial of a seeded experiment. Distinct (seed, stream)
/// pairs give independent streams; the same pair always gives the same stream.
inline std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

/// Complex standard normal samples (E|a|^2 = 1).
inline std::vector<std::complex<double>> complex_normals(std::mt19937_64 &rng, std::size_t count) {
    std::normal_distribution<double> dist(0.0, std::sqrt(0.5));
    std::vector<std::complex<double>> out(count);
    for (auto &a : out) {
        double re = dist(rng);
        double im = dist(rng);
        a = {re, im};
    }
    return out;
}

}  // namespace pdfs

#endif
