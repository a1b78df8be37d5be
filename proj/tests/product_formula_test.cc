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

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.h"
#include "trotterobs/errors.h"
#include "trotterobs/product_formula.h"

namespace trotterobs {
namespace {

using testing::cd;
using testing::kI;
using testing::kron_word;
using testing::max_abs;
using testing::taylor_expm;

DenseOperator taylor_step(const PauliSum &h, double tau) {
    return taylor_expm(-kI * tau * testing::kron_sum(h));
}

HamiltonianModel commuting_model() {
    PauliSum a(PauliString::from_word("ZZI"), 0.7);
    a.add_term(PauliString::from_word("IZI"), -0.4);
    PauliSum b(PauliString::from_word("IZZ"), 1.1);
    PauliSum c(PauliString::from_word("ZIZ"), 0.3);
    return HamiltonianModel(3, {a, b, c});
}

TEST(FormulaSpec, Validation) {
    EXPECT_NO_THROW(validate({1, 1.0, 1}));
    EXPECT_NO_THROW(validate({6, 1.0, 3}));
    EXPECT_THROW(validate({3, 1.0, 1}), UnsupportedOrderError);
    EXPECT_THROW(validate({0, 1.0, 1}), UnsupportedOrderError);
    EXPECT_THROW(validate({1, 1.0, 0}), std::invalid_argument);
    EXPECT_THROW(validate({1, std::nan(""), 1}), std::invalid_argument);
    EXPECT_NEAR(suzuki_weight(4), 1 / (4 - std::cbrt(4.0)), 1e-15);
    EXPECT_NEAR(suzuki_weight(4), 0.41449077179437573, 1e-15);
    EXPECT_THROW(suzuki_weight(2), UnsupportedOrderError);
}

TEST(ExactEvolution, Examples) {
    auto h = build_heisenberg_xyz(2, 4);
    EXPECT_LT(max_abs(exact_evolution(h, 0.0) - identity(4)), 1e-14);
    const auto u = exact_evolution(h, 0.8);
    EXPECT_TRUE(is_unitary(u));
    EXPECT_LT(max_abs(u - taylor_expm(-kI * 0.8 * testing::kron_sum(h.total()))), 1e-12);

    HamiltonianModel single(2, {h.summand(2)});
    EXPECT_LT(max_abs(exact_evolution(single, 0.8) - trotter_block(single, {1, 0.8, 1})), 1e-13);
}

TEST(TrotterBlock, OrderConventionFromPermutation) {
    Rng rng(10);
    auto m = testing::random_model(2, 3, rng).with_order({1, 0, 2});
    const double tau = 0.3;
    // Pi = {2,1,3}: e^{-iH3 tau} e^{-iH1 tau} e^{-iH2 tau}
    const DenseOperator expect =
        taylor_step(m.summand(2), tau) * taylor_step(m.summand(0), tau) * taylor_step(m.summand(1), tau);
    EXPECT_LT(max_abs(trotter_block(m, {1, tau, 1}) - expect), 1e-12);
}

TEST(TrotterBlock, CommutingSummandsGiveExactStep) {
    auto m = commuting_model();
    for (int order : {1, 2, 4}) {
        EXPECT_LT(max_abs(trotter_block(m, {order, 1.3, 2}) - exact_evolution(m, 0.65)), 1e-12) << order;
    }
}

TEST(TrotterBlock, SecondOrderIsPalindromicFirstOrder) {
    Rng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        auto m = testing::random_model(2, 3, rng).with_order({2, 0, 1});
        std::vector<PauliSum> doubled;
        for (std::size_t p = 0; p < 3; ++p) {
            doubled.push_back(m.ordered_summand(p));
        }
        for (std::size_t p = 3; p-- > 0;) {
            doubled.push_back(m.ordered_summand(p));
        }
        HamiltonianModel pal(2, doubled);
        const double tau = 0.41;
        EXPECT_LT(max_abs(trotter_block(m, {2, tau, 1}) - trotter_block(pal, {1, tau / 2, 1})), 1e-13);
    }
}

TEST(TrotterBlock, FourthOrderSuzukiRecursion) {
    Rng rng(12);
    auto m = testing::random_model(2, 3, rng);
    const double tau = 0.2;
    const double p = suzuki_weight(4);
    const DenseOperator outer = trotter_block(m, {2, p * tau, 1});
    const DenseOperator middle = trotter_block(m, {2, (1 - 4 * p) * tau, 1});
    EXPECT_LT(max_abs(trotter_block(m, {4, tau, 1}) - outer * outer * middle * outer * outer), 1e-13);
    // local error of S4 is O(tau^5): global error drops ~16x per doubling
    const auto u = exact_evolution(m, 1.0);
    const double e1 = spectral_norm(u - product_formula(m, {4, 1.0, 4}));
    const double e2 = spectral_norm(u - product_formula(m, {4, 1.0, 8}));
    EXPECT_GT(e1 / e2, 12.0);
    EXPECT_LT(e1 / e2, 20.0);
}

TEST(ProductFormula, Examples) {
    Rng rng(13);
    auto m = testing::random_model(2, 3, rng);
    EXPECT_LT(max_abs(product_formula(m, {1, 0.7, 1}) - trotter_block(m, {1, 0.7, 1})), 1e-15);
    auto c = commuting_model();
    EXPECT_LT(max_abs(product_formula(c, {1, 2.0, 5}) - exact_evolution(c, 2.0)), 1e-10);
    EXPECT_TRUE(is_unitary(product_formula(m, {2, 1.5, 37}), 1e-9));
}

TEST(ProductFormula, ConvergenceRatios) {
    auto h = build_heisenberg_xyz(3, 2024);
    const auto u = exact_evolution(h, 1.0);
    auto ratio = [&](int order) {
        return spectral_norm(u - product_formula(h, {order, 1.0, 8})) /
               spectral_norm(u - product_formula(h, {order, 1.0, 16}));
    };
    const double r1 = ratio(1), r2 = ratio(2);
    EXPECT_GT(r1, 1.8);
    EXPECT_LT(r1, 2.2);
    EXPECT_GT(r2, 3.5);
    EXPECT_LT(r2, 4.5);
}

TEST(ConjugatedSequence, Examples) {
    Rng rng(14);
    auto m = testing::random_model(2, 3, rng);
    const FormulaSpec spec{1, 0.9, 6};
    for (const auto &o : conjugated_observable_sequence(m, spec, identity(4))) {
        EXPECT_LT(max_abs(o - identity(4)), 1e-14);
    }
    auto c = commuting_model();
    const DenseOperator zz = kron_word("ZIZ") + 0.3 * kron_word("IIZ");
    for (const auto &o : conjugated_observable_sequence(c, spec, zz)) {
        EXPECT_LT(max_abs(o - zz), 1e-13);
    }
    const auto obs = testing::random_hermitian(4, rng);
    const auto seq = conjugated_observable_sequence(m, spec, obs);
    ASSERT_EQ(seq.size(), 6u);
    const auto s = trotter_block(m, spec);
    for (std::uint64_t k = 1; k <= 6; ++k) {
        const auto sk = matrix_power(s, k);
        EXPECT_LT(max_abs(seq[k - 1] - sk.adjoint() * obs * sk), 1e-12);
        EXPECT_TRUE(is_hermitian(seq[k - 1], 1e-9));
    }
    EXPECT_THROW(conjugated_observable_sequence(m, spec, kI * identity(4)), DomainError);
}

TEST(LeadingDifference, Examples) {
    EXPECT_TRUE(leading_difference(commuting_model(), {1, 1.0, 1}).empty());
    EXPECT_TRUE(leading_difference(commuting_model(), {2, 1.0, 1}).empty());
    HamiltonianModel xz(1, {PauliSum(PauliString::from_word("X")), PauliSum(PauliString::from_word("Z"))});
    auto hbar = leading_difference(xz, {1, 1.0, 1});
    EXPECT_EQ(hbar, PauliSum(PauliString::from_word("Y")));
    EXPECT_TRUE(hbar.is_hermitian());
    EXPECT_THROW(leading_difference(xz, {4, 1.0, 1}), UnsupportedOrderError);
    // reversal flips the sign for two summands
    auto rev = leading_difference(xz.with_order({1, 0}), {1, 1.0, 1});
    EXPECT_EQ(rev, hbar * cd(-1, 0));
    // PF1 scales as t/r, PF2 as (t/r)^2
    Rng rng(15);
    auto m = testing::random_model(2, 3, rng);
    EXPECT_LT(max_abs(leading_difference(m, {1, 1.0, 4}).to_dense() * 2.0 - leading_difference(m, {1, 1.0, 2}).to_dense()),
              1e-14);
    EXPECT_LT(max_abs(leading_difference(m, {2, 1.0, 4}).to_dense() * 4.0 - leading_difference(m, {2, 1.0, 2}).to_dense()),
              1e-14);
    EXPECT_TRUE(leading_difference(m, {2, 1.0, 4}).is_hermitian());
}

TEST(LeadingDifference, MatchesBlockLogarithm) {
    Rng rng(16);
    for (int order : {1, 2}) {
        auto m = testing::random_model(2, 3, rng, 2, 0.5).with_order({1, 2, 0});
        const auto h = m.dense();
        std::vector<double> residual, leading;
        for (std::uint64_t r : {4, 8, 16, 32}) {
            const FormulaSpec spec{order, 1.0, r};
            const auto ht = equivalent_hamiltonian_dense(m, spec).h_tilde;
            const auto hbar = leading_difference(m, spec).to_dense();
            residual.push_back(spectral_norm(ht - h - hbar));
            leading.push_back(spectral_norm(hbar));
        }
        for (std::size_t k = 0; k + 1 < residual.size(); ++k) {
            // H-bar carries the first power of tau present in H~ - H
            EXPECT_NEAR(leading[k] / leading[k + 1], order == 1 ? 2.0 : 4.0, 1e-9);
            const double ratio = residual[k] / residual[k + 1];
            if (order == 1) {
                EXPECT_GT(ratio, 3.4) << "r step " << k;
                EXPECT_LT(ratio, 4.6) << "r step " << k;
            } else {
                // symmetric formula: H~ - H has only even powers of tau
                EXPECT_GT(ratio, 13.0) << "r step " << k;
                EXPECT_LT(ratio, 19.0) << "r step " << k;
            }
        }
        // log-log slope of the residual
        const double slope = std::log(residual.front() / residual.back()) / std::log(8.0);
        EXPECT_NEAR(slope, order == 1 ? 2.0 : 4.0, 0.25);
    }
}

TEST(EquivalentHamiltonian, Examples) {
    auto c = commuting_model();
    EXPECT_LT(max_abs(equivalent_hamiltonian_dense(c, {1, 1.0, 4}).h_tilde - c.dense()), 1e-9);
    HamiltonianModel single(2, {PauliSum(PauliString::from_word("XY"), 0.8)});
    EXPECT_LT(max_abs(equivalent_hamiltonian_dense(single, {1, 1.0, 2}).h_tilde - single.dense()), 1e-12);
    Rng rng(17);
    auto m = testing::random_model(2, 3, rng);
    const FormulaSpec spec{1, 1.0, 8};
    const auto ht = equivalent_hamiltonian_dense(m, spec).h_tilde;
    EXPECT_TRUE(is_hermitian(ht));
    EXPECT_LT(max_abs(exp_herm(ht, -spec.step()) - trotter_block(m, spec)), 1e-12);
}

}  // namespace
}  // namespace trotterobs
