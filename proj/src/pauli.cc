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

#include "trotterobs/pauli.h"

#include <bit>
#include <cstdio>
#include <sstream>

#include "trotterobs/errors.h"

namespace trotterobs {

namespace {

std::uint64_t qubit_mask(unsigned n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_qubit_count(unsigned n) {
    if (n > kMaxQubits) {
        throw DimensionError("Pauli strings support at most 64 qubits");
    }
}

void require_same_n(const PauliString &p, const PauliString &q, const char *what) {
    if (p.n != q.n) {
        throw DimensionError(std::string(what) + ": qubit counts differ (" + std::to_string(p.n) + " vs " +
                             std::to_string(q.n) + ")");
    }
}

const std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Adds c * (i^e) times the dense matrix of p into out.
void accumulate_dense(const PauliString &p, std::complex<double> c, DenseOperator &out) {
    const std::uint64_t dim = std::uint64_t{1} << p.n;
    // sigma(x,z) = i^{x z} X^x Z^z, so P|b> = i^{|x&z|} (-1)^{|z&b|} |b ^ x>.
    const std::complex<double> base = c * kIPowers[std::popcount(p.x_mask & p.z_mask) & 3];
    for (std::uint64_t b = 0; b < dim; ++b) {
        const bool flip = std::popcount(p.z_mask & b) & 1;
        out(static_cast<Eigen::Index>(b ^ p.x_mask), static_cast<Eigen::Index>(b)) += flip ? -base : base;
    }
}

void require_dense_size(unsigned n) {
    if (n > kMaxDenseQubits) {
        throw DimensionError("dense export supports at most 12 qubits");
    }
}

}  // namespace

PauliString PauliString::identity(unsigned n) {
    require_qubit_count(n);
    return PauliString{n, 0, 0};
}

PauliString PauliString::from_word(std::string_view word) {
    require_qubit_count(static_cast<unsigned>(word.size()));
    PauliString p = identity(static_cast<unsigned>(word.size()));
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
        const unsigned q = static_cast<unsigned>(word.size() - 1 - pos);
        const std::uint64_t bit = std::uint64_t{1} << q;
        switch (word[pos]) {
            case 'I':
                break;
            case 'X':
                p.x_mask |= bit;
                break;
            case 'Y':
                p.x_mask |= bit;
                p.z_mask |= bit;
                break;
            case 'Z':
                p.z_mask |= bit;
                break;
            default:
                throw std::invalid_argument(std::string("invalid Pauli character '") + word[pos] + "'");
        }
    }
    return p;
}

PauliString PauliString::single(unsigned n, unsigned qubit, char pauli) {
    if (qubit >= n) {
        throw DimensionError("qubit index " + std::to_string(qubit) + " out of range for " + std::to_string(n) +
                             " qubits");
    }
    std::string word(n, 'I');
    word[n - 1 - qubit] = pauli;
    return from_word(word);
}

char PauliString::at(unsigned qubit) const {
    const bool x = (x_mask >> qubit) & 1;
    const bool z = (z_mask >> qubit) & 1;
    return "IZXY"[(x << 1) | z];
}

std::string PauliString::word() const {
    std::string out(n, 'I');
    for (unsigned q = 0; q < n; ++q) {
        out[n - 1 - q] = at(q);
    }
    return out;
}

unsigned PauliString::weight() const {
    return static_cast<unsigned>(std::popcount(x_mask | z_mask));
}

DenseOperator PauliString::to_dense() const {
    require_dense_size(n);
    const auto dim = Eigen::Index{1} << n;
    DenseOperator out = DenseOperator::Zero(dim, dim);
    accumulate_dense(*this, 1.0, out);
    return out;
}

std::complex<double> PauliProduct::phase() const {
    return kIPowers[phase_exponent & 3];
}

PauliProduct pauli_mul(const PauliString &p, const PauliString &q) {
    require_same_n(p, q, "pauli_mul");
    const std::uint64_t px = p.x_mask & ~p.z_mask, py = p.x_mask & p.z_mask, pz = p.z_mask & ~p.x_mask;
    const std::uint64_t qx = q.x_mask & ~q.z_mask, qy = q.x_mask & q.z_mask, qz = q.z_mask & ~q.x_mask;
    // Cyclic pairs (XY, YZ, ZX) contribute +i, anti-cyclic pairs -i.
    const int plus = std::popcount((px & qy) | (py & qz) | (pz & qx));
    const int minus = std::popcount((py & qx) | (pz & qy) | (px & qz));
    PauliProduct out;
    out.phase_exponent = ((plus - minus) % 4 + 4) % 4;
    out.string = PauliString{p.n, p.x_mask ^ q.x_mask, p.z_mask ^ q.z_mask};
    return out;
}

bool strings_commute(const PauliString &p, const PauliString &q) {
    require_same_n(p, q, "strings_commute");
    return (std::popcount((p.x_mask & q.z_mask) ^ (p.z_mask & q.x_mask)) & 1) == 0;
}

PauliSum::PauliSum(unsigned n) : n_(n) {
    require_qubit_count(n);
}

PauliSum::PauliSum(const PauliString &p, Coefficient c) : n_(p.n) {
    add_term(p, c);
}

PauliSum::Coefficient PauliSum::coefficient(const PauliString &p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Coefficient{0} : it->second;
}

void PauliSum::add_term(const PauliString &p, Coefficient c) {
    if (p.n != n_) {
        throw DimensionError("PauliSum::add_term: string has " + std::to_string(p.n) + " qubits, sum has " +
                             std::to_string(n_));
    }
    if (((p.x_mask | p.z_mask) & ~qubit_mask(n_)) != 0) {
        throw DimensionError("PauliSum::add_term: mask bits beyond the qubit count");
    }
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
    }
    if (std::abs(it->second) <= kPruneTolerance) {
        terms_.erase(it);
    }
}

bool PauliSum::is_hermitian() const {
    for (const auto &[p, c] : terms_) {
        if (std::abs(c.imag()) > kPruneTolerance) {
            return false;
        }
    }
    return true;
}

double PauliSum::one_norm() const {
    double total = 0;
    for (const auto &[p, c] : terms_) {
        total += std::abs(c);
    }
    return total;
}

DenseOperator PauliSum::to_dense() const {
    require_dense_size(n_);
    const auto dim = Eigen::Index{1} << n_;
    DenseOperator out = DenseOperator::Zero(dim, dim);
    for (const auto &[p, c] : terms_) {
        accumulate_dense(p, c, out);
    }
    return out;
}

void PauliSum::require_same_n(const PauliSum &other, const char *what) const {
    if (other.n_ != n_) {
        throw DimensionError(std::string(what) + ": qubit counts differ (" + std::to_string(n_) + " vs " +
                             std::to_string(other.n_) + ")");
    }
}

void PauliSum::prune() {
    std::erase_if(terms_, [](const auto &kv) {
        return std::abs(kv.second) <= kPruneTolerance;
    });
}

PauliSum &PauliSum::operator+=(const PauliSum &other) {
    require_same_n(other, "PauliSum::operator+=");
    for (const auto &[p, c] : other.terms_) {
        add_term(p, c);
    }
    return *this;
}

PauliSum &PauliSum::operator-=(const PauliSum &other) {
    require_same_n(other, "PauliSum::operator-=");
    for (const auto &[p, c] : other.terms_) {
        add_term(p, -c);
    }
    return *this;
}

PauliSum &PauliSum::operator*=(Coefficient s) {
    for (auto &[p, c] : terms_) {
        c *= s;
    }
    prune();
    return *this;
}

PauliSum multiply(const PauliSum &a, const PauliSum &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("multiply: qubit counts differ");
    }
    PauliSum out(a.num_qubits());
    for (const auto &[p, cp] : a.terms()) {
        for (const auto &[q, cq] : b.terms()) {
            auto prod = pauli_mul(p, q);
            out.add_term(prod.string, cp * cq * prod.phase());
        }
    }
    return out;
}

PauliSum commutator_sum(const PauliSum &a, const PauliSum &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("commutator_sum: qubit counts differ");
    }
    PauliSum out(a.num_qubits());
    for (const auto &[p, cp] : a.terms()) {
        for (const auto &[q, cq] : b.terms()) {
            if (strings_commute(p, q)) {
                continue;
            }
            // pq = -qp here, so pq - qp = 2pq.
            auto prod = pauli_mul(p, q);
            out.add_term(prod.string, 2.0 * cp * cq * prod.phase());
        }
    }
    return out;
}

std::string to_string(const PauliSum &s) {
    std::ostringstream out;
    bool first = true;
    for (const auto &[p, c] : s.terms()) {
        if (!first) {
            out << " + ";
        }
        first = false;
        char buf[96];
        std::snprintf(buf, sizeof buf, "(%.6g%+.6gi)", c.real(), c.imag());
        out << buf << '*' << p.word();
    }
    if (first) {
        out << '0';
    }
    return out.str();
}

}  // namespace trotterobs
