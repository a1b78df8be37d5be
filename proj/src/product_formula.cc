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

#include "trotterobs/product_formula.h"

#include <cmath>
#include <string>

#include "trotterobs/errors.h"

namespace trotterobs {

void validate(const FormulaSpec &spec) {
    if (spec.order != 1 && (spec.order < 2 || spec.order % 2 != 0)) {
        throw UnsupportedOrderError("product formula order must be 1 or even, got " + std::to_string(spec.order));
    }
    if (!std::isfinite(spec.t)) {
        throw std::invalid_argument("evolution time must be finite");
    }
    if (spec.r == 0) {
        throw std::invalid_argument("Trotter number must be positive");
    }
}

double suzuki_weight(int order) {
    if (order < 4 || order % 2 != 0) {
        throw UnsupportedOrderError("Suzuki weights exist for even orders >= 4, got " + std::to_string(order));
    }
    const int k = order / 2;
    return 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * k - 1.0)));
}

SummandPropagators::SummandPropagators(const HamiltonianModel &model) {
    dim_ = Eigen::Index{1} << model.num_qubits();
    for (const auto &s : model.summands()) {
        dense_.push_back(s.to_dense());
        spectra_.push_back(herm_eig(dense_.back()));
    }
}

DenseOperator SummandPropagators::step(std::size_t j, double tau) const {
    return exp_herm(spectra_.at(j), -tau);
}

DenseOperator exact_evolution(const HamiltonianModel &model, double t) {
    if (!std::isfinite(t)) {
        throw std::invalid_argument("exact_evolution: t must be finite");
    }
    return exp_herm(model.dense(), -t);
}

namespace {

DenseOperator block_recursive(const SummandPropagators &props, const EvolutionOrder &order, int formula_order,
                              double tau) {
    DenseOperator s = identity(props.dim());
    if (formula_order == 1) {
        for (auto j : order) {
            s = props.step(j, tau) * s;
        }
        return s;
    }
    if (formula_order == 2) {
        for (auto it = order.begin(); it != order.end(); ++it) {
            s = props.step(*it, tau / 2) * s;
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            s = props.step(*it, tau / 2) * s;
        }
        return s;
    }
    const double p = suzuki_weight(formula_order);
    DenseOperator outer = block_recursive(props, order, formula_order - 2, p * tau);
    DenseOperator middle = block_recursive(props, order, formula_order - 2, (1 - 4 * p) * tau);
    DenseOperator outer2 = outer * outer;
    return outer2 * middle * outer2;
}

}  // namespace

DenseOperator trotter_block(const SummandPropagators &props, const EvolutionOrder &order, int formula_order,
                            double tau) {
    validate(FormulaSpec{formula_order, tau, 1});
    if (!is_permutation(order, props.size())) {
        throw std::invalid_argument("trotter_block: order is not a permutation of the summands");
    }
    return block_recursive(props, order, formula_order, tau);
}

DenseOperator trotter_block(const HamiltonianModel &model, const FormulaSpec &spec) {
    validate(spec);
    SummandPropagators props(model);
    return block_recursive(props, model.order(), spec.order, spec.step());
}

DenseOperator product_formula(const HamiltonianModel &model, const FormulaSpec &spec) {
    return matrix_power(trotter_block(model, spec), spec.r);
}

std::vector<DenseOperator> conjugated_observable_sequence(const HamiltonianModel &model, const FormulaSpec &spec,
                                                          const DenseOperator &observable) {
    if (!is_hermitian(observable)) {
        throw DomainError("conjugated_observable_sequence: observable is not Hermitian");
    }
    DenseOperator s = trotter_block(model, spec);
    if (observable.rows() != s.rows()) {
        throw DimensionError("conjugated_observable_sequence: observable dimension mismatch");
    }
    const DenseOperator s_dag = s.adjoint();
    std::vector<DenseOperator> out;
    out.reserve(spec.r);
    DenseOperator current = observable;
    for (std::uint64_t k = 1; k <= spec.r; ++k) {
        current = hermitian_part(s_dag * current * s);
        out.push_back(current);
    }
    return out;
}

PauliSum leading_difference_coefficient(const HamiltonianModel &model, int formula_order) {
    if (formula_order != 1 && formula_order != 2) {
        throw UnsupportedOrderError("leading_difference: no leading-term formula for order " +
                                    std::to_string(formula_order));
    }
    const unsigned n = model.num_qubits();
    const std::size_t length = model.num_summands();
    // tail[j] = sum_{k > j} A_k in evolution order.
    std::vector<PauliSum> tail(length + 1, PauliSum(n));
    for (std::size_t j = length; j-- > 0;) {
        tail[j] = tail[j + 1] + model.ordered_summand(j);
    }
    PauliSum out(n);
    for (std::size_t j = 0; j + 1 < length; ++j) {
        const auto &a = model.ordered_summand(j);
        // sum_{k>j} [A_j, A_k] = [A_j, tail_{j+1}]
        PauliSum inner = commutator_sum(a, tail[j + 1]);
        if (formula_order == 1) {
            out += inner;
        } else {
            out += commutator_sum(a + 2.0 * tail[j + 1], inner);
        }
    }
    if (formula_order == 1) {
        return out * std::complex<double>(0, 0.5);
    }
    return out * std::complex<double>(1.0 / 24.0, 0);
}

PauliSum leading_difference(const HamiltonianModel &model, const FormulaSpec &spec) {
    validate(spec);
    const double tau = spec.step();
    const double scale = spec.order == 1 ? tau : tau * tau;
    return leading_difference_coefficient(model, spec.order) * std::complex<double>(scale, 0);
}

EquivalentHamiltonian equivalent_hamiltonian_dense(const HamiltonianModel &model, const FormulaSpec &spec) {
    validate(spec);
    if (spec.t == 0) {
        throw std::invalid_argument("equivalent_hamiltonian_dense: t must be nonzero");
    }
    auto log = log_unitary_principal(trotter_block(model, spec));
    // block = e^{iG} = e^{-i tau H~}
    return {log.generator * (-1.0 / spec.step()), log.branch_ambiguous};
}

}  // namespace trotterobs
