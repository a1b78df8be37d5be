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

#ifndef TROTTEROBS_PRODUCT_FORMULA_H
#define TROTTEROBS_PRODUCT_FORMULA_H

#include <cstdint>
#include <vector>

#include "trotterobs/dense.h"
#include "trotterobs/hamiltonian.h"

namespace trotterobs {

/// Product formula of order 1, 2 or 2k (k >= 2), evolution time t and
/// Trotter number r.
struct FormulaSpec {
    int order = 1;
    double t = 1.0;
    std::uint64_t r = 1;

    double step() const {
        return t / static_cast<double>(r);
    }
};

/// Throws UnsupportedOrderError / std::invalid_argument on a malformed spec.
void validate(const FormulaSpec &spec);

/// Suzuki weight p_k = 1 / (4 - 4^{1/(2k-1)}) for a formula of order 2k.
double suzuki_weight(int order);

/// Dense summands with cached eigendecompositions, so that e^{-i tau H_j} for
/// any tau costs two matrix products.
class SummandPropagators {
   public:
    explicit SummandPropagators(const HamiltonianModel &model);

    std::size_t size() const {
        return dense_.size();
    }
    Eigen::Index dim() const {
        return dim_;
    }
    const DenseOperator &dense(std::size_t j) const {
        return dense_.at(j);
    }
    /// e^{-i tau H_j}.
    DenseOperator step(std::size_t j, double tau) const;

   private:
    Eigen::Index dim_;
    std::vector<DenseOperator> dense_;
    std::vector<HermitianEigen> spectra_;
};

/// U = e^{-iHt}.
DenseOperator exact_evolution(const HamiltonianModel &model, double t);

/// One Trotter block S(t/r) with factors taken in the model's evolution order.
/// The summand at order position 0 acts first (rightmost factor):
///   PF1: e^{-i tau H_{pi_L}} ... e^{-i tau H_{pi_1}}
///   PF2: forward half steps followed by backward half steps
///   PF2k: S_{2k-2}(p tau)^2 S_{2k-2}((1-4p) tau) S_{2k-2}(p tau)^2
DenseOperator trotter_block(const HamiltonianModel &model, const FormulaSpec &spec);
DenseOperator trotter_block(const SummandPropagators &props, const EvolutionOrder &order, int formula_order,
                            double tau);

/// V = S(t/r)^r.
DenseOperator product_formula(const HamiltonianModel &model, const FormulaSpec &spec);

/// (S^{-k} O S^k) for k = 1..r by repeated conjugation with one block.
std::vector<DenseOperator> conjugated_observable_sequence(const HamiltonianModel &model, const FormulaSpec &spec,
                                                          const DenseOperator &observable);

/// Leading term H-bar of H-tilde - H, with tau = t/r and the summands A_j
/// taken in evolution order:
///   PF1:  (i tau / 2) sum_{j<k} [A_j, A_k]
///   PF2:  (tau^2 / 24) sum_{j<k} [A_j + 2 sum_{k'>j} A_{k'}, [A_j, A_k]]
/// Higher orders throw UnsupportedOrderError.
PauliSum leading_difference(const HamiltonianModel &model, const FormulaSpec &spec);

/// The time-independent part of leading_difference: H-bar = tau^order * C.
PauliSum leading_difference_coefficient(const HamiltonianModel &model, int formula_order);

struct EquivalentHamiltonian {
    DenseOperator h_tilde;
    bool branch_ambiguous = false;
};

/// H-tilde with e^{-i (t/r) H-tilde} equal to one Trotter block; read off the
/// principal logarithm of the block.
EquivalentHamiltonian equivalent_hamiltonian_dense(const HamiltonianModel &model, const FormulaSpec &spec);

}  // namespace trotterobs

#endif
