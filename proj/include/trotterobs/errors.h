// Copyright 2026 The trotterobs Authors
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

#ifndef TROTTEROBS_ERRORS_H
#define TROTTEROBS_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trotterobs {

/// Operands act on different qubit counts or have mismatched matrix sizes.
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An argument violates a mathematical precondition (non-Hermitian input,
/// invalid density matrix, norm outside its admissible range, ...).
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Product-formula order that the requested operation has no formula for.
class UnsupportedOrderError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not meet its contract (search cap exceeded,
/// quadrature did not converge when the caller asked for strictness).
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Reading or writing a file failed.
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
    missing_header,
    bad_header,
    bad_pauli_character,
    wrong_word_length,
    non_hermitian_coefficient,
    bad_coefficient,
    empty_summand,
    term_outside_summand,
    unknown_directive,
    malformed_line,
    no_summands,
};

const char *parse_error_kind_name(ParseErrorKind kind);

class ParseError : public std::runtime_error {
   public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string &detail);

    ParseErrorKind kind() const noexcept {
        return kind_;
    }
    /// 1-based line number in the source document.
    std::size_t line() const noexcept {
        return line_;
    }

   private:
    ParseErrorKind kind_;
    std::size_t line_;
};

}  // namespace trotterobs

#endif
