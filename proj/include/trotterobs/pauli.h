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

#ifndef TROTTEROBS_PAULI_H
#define TROTTEROBS_PAULI_H

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "trotterobs/dense.h"

namespace trotterobs {

inline constexpr unsigned kMaxQubits = 64;
/// Dense export is limited to 2^12 x 2^12 operators.
inline constexpr unsigned kMaxDenseQubits = 12;

/// An n-qubit Pauli string in symplectic form. Qubit q carries
///   I if neither mask has bit q, X if only x_mask does,
///   Z if only z_mask does, Y if both do.
/// The matrix is the tensor product with qubit 0 as the least significant
/// basis-index bit; in text form qubit 0 is the rightmost character.
struct PauliString {
    unsigned n = 0;
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;

    static PauliString identity(unsigned n);
    /// Parses a word over {I,X,Y,Z}; the rightmost character is qubit 0.
    static PauliString from_word(std::string_view word);
    static PauliString single(unsigned n, unsigned qubit, char pauli);

    char at(unsigned qubit) const;
    std::string word() const;
    bool is_identity() const {
        return x_mask == 0 && z_mask == 0;
    }
    unsigned weight() const;
    DenseOperator to_dense() const;

    auto operator<=>(const PauliString &) const = default;
};

/// p * q = i^phase_exponent * string.
struct PauliProduct {
    int phase_exponent = 0;  // in {0, 1, 2, 3}
    PauliString string;

    std::complex<double> phase() const;
};

/// Single-qubit products follow X Y = iZ, Y Z = iX, Z X = iY (and the
/// reversed products pick up -i); phases add across qubits.
PauliProduct pauli_mul(const PauliString &p, const PauliString &q);

/// True iff the symplectic form <p.x, q.z> + <p.z, q.x> is even.
bool strings_commute(const PauliString &p, const PauliString &q);

/// Weighted sum of Pauli strings on a fixed qubit count. Coefficients with
/// magnitude at or below kPruneTolerance are dropped after every operation.
class PauliSum {
   public:
    using Coefficient = std::complex<double>;
    using TermMap = std::map<PauliString, Coefficient>;
    static constexpr double kPruneTolerance = 1e-14;

    PauliSum() = default;
    explicit PauliSum(unsigned n);
    PauliSum(const PauliString &p, Coefficient c = 1.0);

    unsigned num_qubits() const {
        return n_;
    }
    const TermMap &terms() const {
        return terms_;
    }
    bool empty() const {
        return terms_.empty();
    }
    std::size_t size() const {
        return terms_.size();
    }

    Coefficient coefficient(const PauliString &p) const;
    void add_term(const PauliString &p, Coefficient c);

    /// Every coefficient real (imaginary parts within kPruneTolerance).
    bool is_hermitian() const;
    /// Sum of coefficient magnitudes; an upper bound on the spectral norm.
    double one_norm() const;
    DenseOperator to_dense() const;

    PauliSum &operator+=(const PauliSum &other);
    PauliSum &operator-=(const PauliSum &other);
    PauliSum &operator*=(Coefficient s);

    friend PauliSum operator+(PauliSum a, const PauliSum &b) {
        return a += b;
    }
    friend PauliSum operator-(PauliSum a, const PauliSum &b) {
        return a -= b;
    }
    friend PauliSum operator*(PauliSum a, Coefficient s) {
        return a *= s;
    }
    friend PauliSum operator*(Coefficient s, PauliSum a) {
        return a *= s;
    }

    bool operator==(const PauliSum &other) const = default;

   private:
    void prune();
    void require_same_n(const PauliSum &other, const char *what) const;

    unsigned n_ = 0;
    TermMap terms_;
};

/// Operator product a * b.
PauliSum multiply(const PauliSum &a, const PauliSum &b);

/// [a, b] = ab - ba. Only anticommuting string pairs contribute.
PauliSum commutator_sum(const PauliSum &a, const PauliSum &b);

std::string to_string(const PauliSum &s);

}  // namespace trotterobs

#endif
