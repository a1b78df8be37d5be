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

#ifndef TROTTEROBS_ANNEALER_H
#define TROTTEROBS_ANNEALER_H

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "trotterobs/bounds.h"
#include "trotterobs/csv.h"
#include "trotterobs/hamiltonian.h"
#include "trotterobs/product_formula.h"
#include "trotterobs/random.h"

namespace trotterobs {

struct AnnealSchedule {
    double theta0 = 10.0;
    double theta_inf = 1.0;
    double alpha = 0.95;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless theta0 > 0, 0 < theta_inf < theta0
    /// and 0 < alpha < 1.
    void validate() const;
    /// ceil(ln(theta_inf / theta0) / ln(alpha)).
    std::size_t iterations() const;
    /// Temperature used at 0-based iteration i: theta0 * alpha^i.
    double temperature(std::size_t i) const;
};

struct AnnealStep {
    std::size_t iter = 0;  // 1-based
    double theta = 0;
    std::size_t a = 0;  // swapped positions, a < b
    std::size_t b = 0;
    bool accepted = false;
    double u = 0;  // uniform draw compared against exp(-delta / theta)
    double proposed_cost = 0;
    double cost = 0;  // cost of the current state after this step
};

struct AnnealTrace {
    std::vector<AnnealStep> steps;
    EvolutionOrder initial_order;
    EvolutionOrder final_order;
    EvolutionOrder best_order;
    double initial_cost = 0;
    double final_cost = 0;
    double best_cost = 0;
};

struct AnnealResult {
    EvolutionOrder order;  // best visited
    AnnealTrace trace;
};

struct SwapProposal {
    EvolutionOrder order;
    std::size_t a = 0;
    std::size_t b = 0;
};

/// Exchanges a uniformly chosen unordered pair of positions.
SwapProposal swap_neighbor(const EvolutionOrder &order, Rng &rng);

using OrderCost = std::function<double(const EvolutionOrder &)>;

/// Wraps a cost with a per-permutation cache.
class CachedOrderCost {
   public:
    explicit CachedOrderCost(OrderCost cost) : cost_(std::move(cost)) {}

    double operator()(const EvolutionOrder &order);
    std::size_t size() const {
        return cache_.size();
    }

   private:
    OrderCost cost_;
    std::map<EvolutionOrder, double> cache_;
};

/// Simulated annealing over permutations of `length` summands starting from
/// the identity order. One swap proposal per temperature; a proposal that does
/// not increase the cost is accepted, otherwise it is accepted when u <
/// exp(-delta / theta).
AnnealResult optimize_order(std::size_t length, const OrderCost &cost, const AnnealSchedule &schedule);

/// Anneals the observation cost at the fixed Trotter number spec.r.
AnnealResult optimize_order(const HamiltonianModel &model, const PauliSum &observable, const FormulaSpec &spec,
                            const AnnealSchedule &schedule, const CostOptions &options = {});

/// Columns iter,theta,a,b,accepted,u,cost.
CsvTable trace_table(const AnnealTrace &trace);

}  // namespace trotterobs

#endif
