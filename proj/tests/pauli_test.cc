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

#include "test_util.h"
#include "trotterobs/errors.h"
#include "trotterobs/pauli.h"

namespace trotterobs {
namespace {

using testing::cd;
using testing::kI;
using testing::kron_word;
using testing::max_abs;

PauliString W(const char *w) {
    return PauliString::from_word(w);
}

TEST(PauliString, MasksAndWords) {
    auto p = W("XYZI");
    EXPECT_EQ(p.n, 4u);
    EXPECT_EQ(p.at(0), 'I');
    EXPECT_EQ(p.at(1), 'Z');
    EXPECT_EQ(p.at(2), 'Y');
    EXPECT_EQ(p.at(3), 'X');
    EXPECT_EQ(p.x_mask, 0b1100u);
    EXPECT_EQ(p.z_mask, 0b0110u);
    EXPECT_EQ(p.word(), "XYZI");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_TRUE(PauliString::identity(3).is_identity());
    EXPECT_EQ(PauliString::single(3, 0, 'X').word(), "IIX");
    EXPECT_THROW(W("XQ"), std::invalid_argument);
    EXPECT_THROW(PauliString::single(2, 2, 'Z'), DimensionError);
}

TEST(PauliString, DenseMatchesKronecker) {
    Rng rng(11);
    for (unsigned n = 1; n <= 4; ++n) {
        for (int k = 0; k < 20; ++k) {
            const auto w = testing::random_word(n, rng);
            EXPECT_LT(max_abs(W(w.c_str()).to_dense() - kron_word(w)), 1e-15) << w;
        }
    }
}

TEST(PauliMul, Examples) {
    auto xy = pauli_mul(W("X"), W("Y"));
    EXPECT_EQ(xy.phase(), cd(0, 1));
    EXPECT_EQ(xy.string.word(), "Z");
    auto zz = pauli_mul(W("Z"), W("Z"));
    EXPECT_EQ(zz.phase(), cd(1, 0));
    EXPECT_TRUE(zz.string.is_identity());
    auto r = pauli_mul(W("XZ"), W("ZX"));
    EXPECT_LT(max_abs(r.phase() * kron_word(r.string.word()) - kron_word("XZ") * kron_word("ZX")), 1e-15);
    EXPECT_THROW(pauli_mul(W("X"), W("XX")), DimensionError);
}

TEST(PauliMul, AllTwoQubitProductsMatchDense) {
    const char *chars = "IXYZ";
    for (int a = 0; a < 16; ++a) {
        for (int b = 0; b < 16; ++b) {
            std::string p{chars[a / 4], chars[a % 4]};
            std::string q{chars[b / 4], chars[b % 4]};
            auto r = pauli_mul(W(p.c_str()), W(q.c_str()));
            EXPECT_LT(max_abs(r.phase() * kron_word(r.string.word()) - kron_word(p) * kron_word(q)), 1e-15)
                << p << "*" << q;
        }
    }
}

TEST(PauliMul, AssociativeForOneQubit) {
    const char *chars[] = {"I", "X", "Y", "Z"};
    for (auto a : chars) {
        for (auto b : chars) {
            for (auto c : chars) {
                auto ab = pauli_mul(W(a), W(b));
                auto ab_c = pauli_mul(ab.string, W(c));
                auto bc = pauli_mul(W(b), W(c));
                auto a_bc = pauli_mul(W(a), bc.string);
                EXPECT_EQ(ab_c.string, a_bc.string);
                EXPECT_EQ(ab.phase() * ab_c.phase(), bc.phase() * a_bc.phase());
                const cd ph = ab.phase() * ab_c.phase();
                EXPECT_TRUE(ph == cd(1, 0) || ph == cd(-1, 0) || ph == cd(0, 1) || ph == cd(0, -1));
            }
        }
    }
}

TEST(StringsCommute, Examples) {
    EXPECT_TRUE(strings_commute(W("XI"), W("IZ")));
    EXPECT_FALSE(strings_commute(W("X"), W("Z")));
    EXPECT_TRUE(strings_commute(W("XX"), W("ZZ")));
}

TEST(StringsCommute, ExhaustiveAgainstDenseAndCommutatorSum) {
    const char *chars = "IXYZ";
    for (unsigned n = 1; n <= 2; ++n) {
        const int count = n == 1 ? 4 : 16;
        for (int a = 0; a < count; ++a) {
            for (int b = 0; b < count; ++b) {
                std::string p = n == 1 ? std::string{chars[a]} : std::string{chars[a / 4], chars[a % 4]};
                std::string q = n == 1 ? std::string{chars[b]} : std::string{chars[b / 4], chars[b % 4]};
                const DenseOperator pd = kron_word(p), qd = kron_word(q);
                const bool dense_commute = max_abs(pd * qd - qd * pd) < 1e-14;
                EXPECT_EQ(strings_commute(W(p.c_str()), W(q.c_str())), dense_commute);
                EXPECT_EQ(commutator_sum(PauliSum(W(p.c_str())), PauliSum(W(q.c_str()))).empty(), dense_commute);
            }
        }
    }
}

TEST(PauliSum, ArithmeticAndPruning) {
    PauliSum a(W("XI"), 1.0);
    a.add_term(W("IZ"), 0.5);
    EXPECT_EQ(a.size(), 2u);
    a.add_term(W("XI"), -1.0);
    EXPECT_EQ(a.size(), 1u);
    a.add_term(W("IZ"), -0.5 + 1e-15);
    EXPECT_TRUE(a.empty());
    PauliSum b(W("XY"), cd(0, 1));
    EXPECT_FALSE(b.is_hermitian());
    EXPECT_TRUE((b * cd(0, -1)).is_hermitian());
    EXPECT_DOUBLE_EQ((b + PauliSum(W("ZZ"), -2.0)).one_norm(), 3.0);
    EXPECT_THROW(PauliSum(W("X")) + PauliSum(W("XX")), DimensionError);
}

TEST(CommutatorSum, Examples) {
    auto c = commutator_sum(PauliSum(W("X")), PauliSum(W("Y")));
    EXPECT_EQ(c.size(), 1u);
    EXPECT_EQ(c.coefficient(W("Z")), cd(0, 2));
    Rng rng(3);
    auto a = testing::random_pauli_sum(3, 6, rng);
    EXPECT_TRUE(commutator_sum(a, a).empty());
    EXPECT_THROW(commutator_sum(PauliSum(W("X")), PauliSum(W("XX"))), DimensionError);
}

TEST(CommutatorSum, MatchesDenseForRandomSums) {
    Rng rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(uniform_index(rng, 3));
        auto a = testing::random_pauli_sum(n, 1 + uniform_index(rng, 6), rng, trial % 2 == 0);
        auto b = testing::random_pauli_sum(n, 1 + uniform_index(rng, 6), rng, trial % 3 == 0);
        const DenseOperator ad = testing::kron_sum(a), bd = testing::kron_sum(b);
        EXPECT_LT(max_abs(testing::kron_sum(commutator_sum(a, b)) - (ad * bd - bd * ad)), 1e-12);
        EXPECT_LT(max_abs(testing::kron_sum(multiply(a, b)) - ad * bd), 1e-12);
        EXPECT_LT(max_abs(a.to_dense() - ad), 1e-15);
    }
}

}  // namespace
}  // namespace trotterobs
