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

#ifndef PAULI_DFS_ERRORS_H
#define PAULI_DFS_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdfs {

/// Malformed textual input (Pauli strings, state specs). Carries the 0-based
/// character position of the first offending character.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, std::size_t position)
        : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"), position_(position) {
    }
    std::size_t position() const {
        return position_;
    }

   private:
    std::size_t position_;
};

/// Operands disagree on qubit count or vector dimension.
class DimensionMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A dense realization or group closure would exceed its configured cap.
class SizeError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// The input group has the wrong structure for the request (e.g. characters
/// of a non-Abelian group, or a character that belongs to a different group).
class ClassificationError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Arguments outside the domain of a closed-form formula.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A random Kraus draw produced a numerically singular normalization matrix.
class DegenerateDrawError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Explicit channel parameters violate one of the trace-preservation constraints.
class ConstraintError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical post-condition did not hold.
class NumericError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace pdfs

#endif
