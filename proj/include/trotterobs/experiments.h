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

#ifndef TROTTEROBS_EXPERIMENTS_H
#define TROTTEROBS_EXPERIMENTS_H

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trotterobs/annealer.h"
#include "trotterobs/bounds.h"
#include "trotterobs/csv.h"
#include "trotterobs/hamiltonian.h"

namespace trotterobs {

enum class ModelKind { hydrogen, heisenberg, ising, file };

const char *model_kind_name(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);

struct ExperimentConfig {
    ModelKind model = ModelKind::heisenberg;
    std::string model_path;  // ModelKind::file
    unsigned n_min = 4;
    unsigned n_max = 8;
    std::optional<double> fixed_t;  // unset: t = n
    double epsilon = 1e-3;
    int formula_order = 1;
    AnnealSchedule schedule;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::string out_dir;  // empty: nothing written
    CostOptions anneal_cost;  // summation used for L while annealing
    CostOptions search_cost;  // summation used for L inside r* searches
    std::ostream *log = nullptr;

    /// Throws std::invalid_argument on epsilon <= 0, trials == 0, an empty or
    /// out-of-range n-range, or a bad schedule.
    void validate() const;
    double time_for(unsigned n) const {
        return fixed_t ? *fixed_t : static_cast<double>(n);
    }
};

/// epsilon = 1e-3, t = 4, theta0 = 10, theta_inf = 1, alpha = 0.95, 50 trials.
ExperimentConfig hydrogen_defaults();
/// epsilon = 1e-3, t = n, n in 4..8, PF1.
ExperimentConfig heisenberg_defaults();

/// Seed of the Heisenberg fields at size n.
std::uint64_t model_seed(std::uint64_t experiment_seed, unsigned n);
/// Seed of annealing trial `trial` (0-based).
std::uint64_t trial_seed(std::uint64_t experiment_seed, std::size_t trial);

/// Smallest r with L(order, r) <= epsilon.
TrotterSearchResult observation_trotter_number(const ObservationCost &cost, const EvolutionOrder &order,
                                               double epsilon);

struct HydrogenResult {
    std::uint64_t anneal_r = 0;  // commutator r* at epsilon, identity order
    std::vector<AnnealTrace> traces;
    std::vector<std::uint64_t> seeds;
    double mean_initial_cost = 0;
    double mean_final_cost = 0;
    double mean_best_cost = 0;
    std::uint64_t initial_r_star = 0;  // observation r*, identity order
    std::vector<std::uint64_t> best_r_star;  // per trial, at the best order
    std::vector<std::uint64_t> final_r_star;  // per trial, at the final order
    CsvTable mean_curve;  // iter,theta,mean_cost,mean_best_cost
    CsvTable trace_rows;  // per-trial traces
    CsvTable summary;  // one row per trial
};

/// Annealing runs on the STO-3G hydrogen model with O = Z_0. Writes
/// hydrogen_mean.csv, hydrogen_traces.csv and hydrogen_summary.csv to
/// out_dir when it is set.
HydrogenResult run_hydrogen_experiment(const ExperimentConfig &config);

struct ComparisonRow {
    unsigned n = 0;
    BoundFamily family = BoundFamily::lloyd;
    EvolutionOrder order;
    double t = 0;
    std::uint64_t model_seed = 0;
    std::uint64_t anneal_r = 0;
    std::optional<std::uint64_t> r_star;  // unset: cap exceeded
    double value = 0;  // metric at r_star
};

struct ComparisonResult {
    std::vector<ComparisonRow> rows;
    CsvTable table;

    /// r* of a family at n; unset when the cap was exceeded.
    std::optional<std::uint64_t> r_star(unsigned n, BoundFamily family) const;
};

/// Families compared, in row order.
const std::vector<BoundFamily> &comparison_families();

using ModelFactory = std::function<HamiltonianModel(unsigned n, std::uint64_t seed)>;
using ObservableFactory = std::function<PauliSum(unsigned n)>;

/// For each n: builds the model, anneals its order against L at the
/// commutator r*, then finds r* for lloyd, commutator, random_input (default
/// order) and observation, empirical (annealed order). Writes comparison.csv
/// to out_dir when it is set.
ComparisonResult run_heisenberg_comparison(const ExperimentConfig &config);
ComparisonResult run_comparison(const ExperimentConfig &config, const ModelFactory &model,
                                const ObservableFactory &observable);

CsvTable comparison_table(const std::vector<ComparisonRow> &rows, const ExperimentConfig &config);

}  // namespace trotterobs

#endif
