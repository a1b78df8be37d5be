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

#include "trotterobs/annealer.h"

#include <cmath>
#include <stdexcept>

#include "trotterobs/errors.h"

namespace trotterobs {

void AnnealSchedule::validate() const {
    if (!(theta0 > 0) || !std::isfinite(theta0)) {
        throw std::invalid_argument("anneal schedule: theta0 must be positive");
    }
    if (!(theta_inf > 0 && theta_inf < theta0)) {
        throw std::invalid_argument("anneal schedule: theta_inf must lie in (0, theta0)");
    }
    if (!(alpha > 0 && alpha < 1)) {
        throw std::invalid_argument("anneal schedule: alpha must lie in (0, 1)");
    }
}

std::size_t AnnealSchedule::iterations() const {
    validate();
    const double count = std::ceil(std::log(theta_inf / theta0) / std::log(alpha));
    if (!std::isfinite(count) || count > 1e9) {
        throw std::invalid_argument("anneal schedule: iteration count is not finite");
    }
    return static_cast<std::size_t>(count);
}

double AnnealSchedule::temperature(std::size_t i) const {
    return theta0 * std::pow(alpha, static_cast<double>(i));
}

SwapProposal swap_neighbor(const EvolutionOrder &order, Rng &rng) {
    const std::size_t length = order.size();
    if (length < 2) {
        throw std::invalid_argument("swap_neighbor: need at least two summands");
    }
    // Pairs (a, b), a < b, enumerated row by row.
    std::uint64_t p = uniform_index(rng, static_cast<std::uint64_t>(length) * (length - 1) / 2);
    std::size_t a = 0;
    while (p >= length - 1 - a) {
        p -= length - 1 - a;
        ++a;
    }
    const std::size_t b = a + 1 + static_cast<std::size_t>(p);
    SwapProposal out{order, a, b};
    std::swap(out.order[a], out.order[b]);
    return out;
}

double CachedOrderCost::operator()(const EvolutionOrder &order) {
    auto it = cache_.find(order);
    if (it != cache_.end()) {
        return it->second;
    }
    const double value = cost_(order);
    cache_.emplace(order, value);
    return value;
}

AnnealResult optimize_order(std::size_t length, const OrderCost &cost, const AnnealSchedule &schedule) {
    const std::size_t iterations = schedule.iterations();
    CachedOrderCost cached(cost);
    auto eval = [&](const EvolutionOrder &order) {
        const double c = cached(order);
        if (!std::isfinite(c) || c < 0) {
            throw NumericalError("optimize_order: cost is not a finite non-negative number");
        }
        return c;
    };

    AnnealTrace trace;
    EvolutionOrder current = identity_order(length);
    double current_cost = eval(current);
    trace.initial_order = current;
    trace.initial_cost = current_cost;
    trace.best_order = current;
    trace.best_cost = current_cost;

    if (length >= 2) {
        Rng rng(schedule.seed);
        for (std::size_t i = 0; i < iterations; ++i) {
            AnnealStep step;
            step.iter = i + 1;
            step.theta = schedule.temperature(i);
            auto proposal = swap_neighbor(current, rng);
            step.a = proposal.a;
            step.b = proposal.b;
            step.u = uniform_open01(rng);
            step.proposed_cost = eval(proposal.order);
            const double delta = step.proposed_cost - current_cost;
            step.accepted = delta <= 0 || step.u < std::exp(-delta / step.theta);
            if (step.accepted) {
                current = std::move(proposal.order);
                current_cost = step.proposed_cost;
                if (current_cost < trace.best_cost) {
                    trace.best_cost = current_cost;
                    trace.best_order = current;
                }
            }
            step.cost = current_cost;
            trace.steps.push_back(step);
        }
    }
    trace.final_order = current;
    trace.final_cost = current_cost;
    return {trace.best_order, std::move(trace)};
}

AnnealResult optimize_order(const HamiltonianModel &model, const PauliSum &observable, const FormulaSpec &spec,
                            const AnnealSchedule &schedule, const CostOptions &options) {
    validate(spec);
    if (spec.order != 1 && spec.order != 2) {
        throw UnsupportedOrderError("optimize_order: only orders 1 and 2 are supported");
    }
    ObservationCost cost(model, observable, spec.order, spec.t, options);
    return optimize_order(
        model.num_summands(), [&](const EvolutionOrder &order) { return cost(order, spec.r); }, schedule);
}

CsvTable trace_table(const AnnealTrace &trace) {
    CsvTable table({"iter", "theta", "a", "b", "accepted", "u", "cost"});
    for (const auto &s : trace.steps) {
        table.add_row({std::to_string(s.iter), csv_number(s.theta), std::to_string(s.a), std::to_string(s.b),
                       s.accepted ? "1" : "0", csv_number(s.u), csv_number(s.cost)});
    }
    return table;
}

}  // namespace trotterobs
