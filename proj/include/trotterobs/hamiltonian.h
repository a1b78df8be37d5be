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

#ifndef TROTTEROBS_HAMILTONIAN_H
#define TROTTEROBS_HAMILTONIAN_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trotterobs/pauli.h"

namespace trotterobs {

/// Permutation of summand indices (0-based). Position 0 is evolved first.
using EvolutionOrder = std::vector<std::size_t>;

EvolutionOrder identity_order(std::size_t length);
bool is_permutation(const EvolutionOrder &order, std::size_t length);
/// 1-based, dash separated ("2-1-3").
std::string format_order(const EvolutionOrder &order);
EvolutionOrder parse_order(std::string_view text);

/// H = sum_j H_j with an evolution order over the summands.
class HamiltonianModel {
   public:
    HamiltonianModel(unsigned n, std::vector<PauliSum> summands, std::vector<std::string> labels = {});

    unsigned num_qubits() const {
        return n_;
    }
    std::size_t num_summands() const {
        return summands_.size();
    }
    const std::vector<PauliSum> &summands() const {
        return summands_;
    }
    const PauliSum &summand(std::size_t j) const {
        return summands_.at(j);
    }
    const std::vector<std::string> &labels() const {
        return labels_;
    }
    const EvolutionOrder &order() const {
        return order_;
    }
    /// Summand evolved at the given position of the current order.
    const PauliSum &ordered_summand(std::size_t position) const {
        return summands_.at(order_.at(position));
    }

    HamiltonianModel with_order(EvolutionOrder order) const;
    PauliSum total() const;
    DenseOperator dense() const;
    /// max_j ||H_j||_inf (the Lambda of the Lloyd bound).
    double max_summand_norm() const;

   private:
    unsigned n_;
    std::vector<PauliSum> summands_;
    std::vector<std::string> labels_;
    EvolutionOrder order_;
};

/// Parses the line-oriented Hamiltonian format:
///   n <qubits>
///   summand <label>
///   term <real coefficient> <pauli word>
/// '#' starts a comment. Terms belong to the most recent summand. Without the
/// header line, n is the length of the first Pauli word.
HamiltonianModel parse_hamiltonian(std::string_view text);
HamiltonianModel load_hamiltonian(const std::string &path);
/// Observable files use the Hamiltonian format with a single summand.
PauliSum parse_observable(std::string_view text);
PauliSum load_observable(const std::string &path);

/// Inverse of parse_hamiltonian; coefficients are written in shortest
/// round-trip decimal form.
std::string serialize_hamiltonian(const HamiltonianModel &model);
std::string format_shortest(double value);

/// Hydrogen molecule in the STO-3G basis, 4 qubits, 15 single-term summands.
HamiltonianModel build_hydrogen_sto3g();

enum class Boundary { open, periodic };

/// XYZ-grouped Heisenberg chain with random longitudinal fields:
///   H1 = sum X_j X_{j+1},  H2 = sum Y_j Y_{j+1},
///   H3 = sum Z_j Z_{j+1} + sum_j h_j Z_j,  h_j uniform in (-1, 1).
HamiltonianModel build_heisenberg_xyz(unsigned n, std::uint64_t seed, Boundary boundary = Boundary::open);
/// The field values build_heisenberg_xyz draws for (n, seed).
std::vector<double> heisenberg_fields(unsigned n, std::uint64_t seed);

struct IsingCoupling {
    unsigned i = 0;
    unsigned j = 0;
    double strength = 0;
};

/// Two summands: sum J_ij Z_i Z_j, then sum h_j X_j.
HamiltonianModel build_transverse_ising(unsigned n, const std::vector<IsingCoupling> &couplings,
                                        const std::vector<double> &fields);

/// (I + 0.1 sum_j Z_j) / (1 + 0.1 n); spectral norm 1.
PauliSum build_observable_z_uniform(unsigned n);

}  // namespace trotterobs

#endif
