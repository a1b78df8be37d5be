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

#include "trotterobs/experiments.h"

#include <cmath>
#include <filesystem>
#include <map>
#include <stdexcept>

#include "trotterobs/errors.h"
#include "trotterobs/random.h"

namespace trotterobs {

namespace {

void log_line(const ExperimentConfig &config, const std::string &text) {
    if (config.log != nullptr) {
        *config.log << text << '\n' << std::flush;
    }
}

void write_table(const ExperimentConfig &config, const std::string &name, const CsvTable &table) {
    if (config.out_dir.empty()) {
        return;
    }
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) {
        throw IoError("cannot create directory '" + config.out_dir + "': " + ec.message());
    }
    write_text_file((std::filesystem::path(config.out_dir) / name).string(), table.to_string());
}

std::optional<TrotterSearchResult> search_or_flag(const std::function<double(std::uint64_t)> &fn, double epsilon) {
    try {
        return trotter_number_search(fn, epsilon);
    } catch (const NumericalError &) {
        return std::nullopt;
    }
}

std::uint64_t commutator_r_star(const HamiltonianModel &model, int formula_order, double t, double epsilon) {
    const auto sums = commutator_sums(model, formula_order, NormKind::spectral);
    return trotter_number_search([&](std::uint64_t r) { return commutator_bound_value(sums, t, r); }, epsilon)
        .r_star;
}

}  // namespace

const char *model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::hydrogen:
            return "hydrogen";
        case ModelKind::heisenberg:
            return "heisenberg";
        case ModelKind::ising:
            return "ising";
        case ModelKind::file:
            return "file";
    }
    return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
    for (auto k : {ModelKind::hydrogen, ModelKind::heisenberg, ModelKind::ising, ModelKind::file}) {
        if (name == model_kind_name(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const {
    if (!(epsilon > 0)) {
        throw std::invalid_argument("experiment: epsilon must be positive");
    }
    if (trials == 0) {
        throw std::invalid_argument("experiment: trials must be at least 1");
    }
    if (n_min > n_max) {
        throw std::invalid_argument("experiment: empty n-range");
    }
    if (n_min < 2 || n_max > 10) {
        throw std::invalid_argument("experiment: n-range must lie within [2, 10]");
    }
    if (formula_order != 1 && formula_order != 2) {
        throw UnsupportedOrderError("experiment: formula order must be 1 or 2");
    }
    if (fixed_t && !(std::isfinite(*fixed_t) && *fixed_t > 0)) {
        throw std::invalid_argument("experiment: t must be positive");
    }
    if (model == ModelKind::file && model_path.empty()) {
        throw std::invalid_argument("experiment: file model needs a path");
    }
    schedule.validate();
}

ExperimentConfig hydrogen_defaults() {
    ExperimentConfig c;
    c.model = ModelKind::hydrogen;
    c.n_min = 4;
    c.n_max = 4;
    c.fixed_t = 4.0;
    c.epsilon = 1e-3;
    c.formula_order = 1;
    c.schedule = AnnealSchedule{10.0, 1.0, 0.95, 0};
    c.trials = 50;
    c.anneal_cost.summation = CostSummation::nested_grid;
    c.search_cost.summation = CostSummation::nested_grid;
    return c;
}

ExperimentConfig heisenberg_defaults() {
    ExperimentConfig c;
    c.model = ModelKind::heisenberg;
    c.n_min = 4;
    c.n_max = 8;
    c.epsilon = 1e-3;
    c.formula_order = 1;
    c.schedule = AnnealSchedule{10.0, 1.0, 0.95, 0};
    c.trials = 1;
    c.anneal_cost.summation = CostSummation::nested_grid;
    c.search_cost.summation = CostSummation::nested_grid;
    return c;
}

std::uint64_t model_seed(std::uint64_t experiment_seed, unsigned n) {
    return mix_seed(experiment_seed ^ (0x6E00000000000000ULL + n));
}

std::uint64_t trial_seed(std::uint64_t experiment_seed, std::size_t trial) {
    return mix_seed(experiment_seed ^ (0x7400000000000000ULL + trial));
}

TrotterSearchResult observation_trotter_number(const ObservationCost &cost, const EvolutionOrder &order,
                                               double epsilon) {
    return trotter_number_search([&](std::uint64_t r) { return cost(order, r); }, epsilon);
}

// ---------------------------------------------------------------------------

HydrogenResult run_hydrogen_experiment(const ExperimentConfig &config) {
    if (!(config.epsilon > 0) || config.trials == 0) {
        throw std::invalid_argument("hydrogen experiment: epsilon > 0 and trials >= 1 required");
    }
    if (config.formula_order != 1 && config.formula_order != 2) {
        throw UnsupportedOrderError("hydrogen experiment: formula order must be 1 or 2");
    }
    config.schedule.validate();
    const HamiltonianModel model = build_hydrogen_sto3g();
    const PauliSum observable(PauliString::single(model.num_qubits(), 0, 'Z'), 1.0);
    const double t = config.fixed_t.value_or(4.0);
    const int fo = config.formula_order;

    HydrogenResult out;
    out.anneal_r = commutator_r_star(model, fo, t, config.epsilon);
    log_line(config, "hydrogen: annealing at r = " + std::to_string(out.anneal_r));

    const ObservationCost anneal_cost(model, observable, fo, t, config.anneal_cost);
    const ObservationCost search_cost(model, observable, fo, t, config.search_cost);
    CachedOrderCost cached([&](const EvolutionOrder &order) { return anneal_cost(order, out.anneal_r); });
    std::map<EvolutionOrder, std::uint64_t> r_star_memo;
    auto r_star_of = [&](const EvolutionOrder &order) {
        auto it = r_star_memo.find(order);
        if (it != r_star_memo.end()) {
            return it->second;
        }
        const auto r = observation_trotter_number(search_cost, order, config.epsilon).r_star;
        r_star_memo.emplace(order, r);
        return r;
    };

    out.trace_rows = CsvTable({"trial", "seed", "iter", "theta", "a", "b", "accepted", "u", "proposed_cost", "cost",
                               "best_cost"});
    out.summary = CsvTable({"trial", "seed", "epsilon", "t", "formula_order", "anneal_r", "initial_order",
                            "final_order", "best_order", "initial_cost", "final_cost", "best_cost", "initial_r_star",
                            "final_r_star", "best_r_star"});
    out.initial_r_star = r_star_of(model.order());

    const std::size_t iterations = config.schedule.iterations();
    std::vector<double> sum_cost(iterations + 1, 0.0);
    std::vector<double> sum_best(iterations + 1, 0.0);
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        AnnealSchedule schedule = config.schedule;
        schedule.seed = trial_seed(config.seed, trial);
        auto result = optimize_order(
            model.num_summands(), [&](const EvolutionOrder &order) { return cached(order); }, schedule);
        const auto &tr = result.trace;

        double best = tr.initial_cost;
        sum_cost[0] += tr.initial_cost;
        sum_best[0] += best;
        out.trace_rows.add_row({std::to_string(trial), std::to_string(schedule.seed), "0",
                                csv_number(schedule.theta0), "", "", "", "", "", csv_number(tr.initial_cost),
                                csv_number(best)});
        for (const auto &s : tr.steps) {
            best = std::min(best, s.cost);
            sum_cost[s.iter] += s.cost;
            sum_best[s.iter] += best;
            out.trace_rows.add_row({std::to_string(trial), std::to_string(schedule.seed), std::to_string(s.iter),
                                    csv_number(s.theta), std::to_string(s.a), std::to_string(s.b),
                                    s.accepted ? "1" : "0", csv_number(s.u), csv_number(s.proposed_cost),
                                    csv_number(s.cost), csv_number(best)});
        }

        const auto final_r = r_star_of(tr.final_order);
        const auto best_r = r_star_of(tr.best_order);
        out.final_r_star.push_back(final_r);
        out.best_r_star.push_back(best_r);
        out.summary.add_row({std::to_string(trial), std::to_string(schedule.seed), csv_number(config.epsilon),
                             csv_number(t), std::to_string(fo), std::to_string(out.anneal_r),
                             format_order(tr.initial_order), format_order(tr.final_order),
                             format_order(tr.best_order), csv_number(tr.initial_cost), csv_number(tr.final_cost),
                             csv_number(tr.best_cost), std::to_string(out.initial_r_star), std::to_string(final_r),
                             std::to_string(best_r)});
        out.mean_initial_cost += tr.initial_cost;
        out.mean_final_cost += tr.final_cost;
        out.mean_best_cost += tr.best_cost;
        out.seeds.push_back(schedule.seed);
        out.traces.push_back(tr);
    }
    const double trials = static_cast<double>(config.trials);
    out.mean_initial_cost /= trials;
    out.mean_final_cost /= trials;
    out.mean_best_cost /= trials;

    out.mean_curve = CsvTable({"iter", "theta", "mean_cost", "mean_best_cost"});
    for (std::size_t i = 0; i <= iterations; ++i) {
        const double theta = i == 0 ? config.schedule.theta0 : config.schedule.temperature(i - 1);
        out.mean_curve.add_row(
            {std::to_string(i), csv_number(theta), csv_number(sum_cost[i] / trials), csv_number(sum_best[i] / trials)});
    }
    log_line(config, "hydrogen: mean initial cost " + csv_number(out.mean_initial_cost) + ", mean final cost " +
                         csv_number(out.mean_final_cost));

    write_table(config, "hydrogen_mean.csv", out.mean_curve);
    write_table(config, "hydrogen_traces.csv", out.trace_rows);
    write_table(config, "hydrogen_summary.csv", out.summary);
    return out;
}

// ---------------------------------------------------------------------------

const std::vector<BoundFamily> &comparison_families() {
    static const std::vector<BoundFamily> families{BoundFamily::lloyd, BoundFamily::commutator,
                                                   BoundFamily::random_input, BoundFamily::observation,
                                                   BoundFamily::empirical};
    return families;
}

std::optional<std::uint64_t> ComparisonResult::r_star(unsigned n, BoundFamily family) const {
    for (const auto &row : rows) {
        if (row.n == n && row.family == family) {
            return row.r_star;
        }
    }
    throw std::out_of_range("comparison: no row for this n and family");
}

CsvTable comparison_table(const std::vector<ComparisonRow> &rows, const ExperimentConfig &config) {
    CsvTable table({"n", "family", "formula_order", "epsilon", "t", "seed", "model_seed", "order", "anneal_r",
                    "r_star", "value", "status", "approx"});
    for (const auto &row : rows) {
        table.add_row({std::to_string(row.n), family_name(row.family), std::to_string(config.formula_order),
                       csv_number(config.epsilon), csv_number(row.t), std::to_string(config.seed),
                       std::to_string(row.model_seed), format_order(row.order), std::to_string(row.anneal_r),
                       row.r_star ? std::to_string(*row.r_star) : "", row.r_star ? csv_number(row.value) : "",
                       row.r_star ? "ok" : "cap_exceeded", row.family == BoundFamily::observation ? "true" : "false"});
    }
    return table;
}

ComparisonResult run_comparison(const ExperimentConfig &config, const ModelFactory &make_model,
                                const ObservableFactory &make_observable) {
    config.validate();
    ComparisonResult out;
    const int fo = config.formula_order;
    for (unsigned n = config.n_min; n <= config.n_max; ++n) {
        const std::uint64_t mseed = model_seed(config.seed, n);
        const HamiltonianModel model = make_model(n, mseed);
        const PauliSum observable = make_observable(model.num_qubits());
        const double t = config.time_for(n);
        const EvolutionOrder default_order = model.order();

        auto row = [&](BoundFamily family, const EvolutionOrder &order, std::uint64_t anneal_r,
                       const std::optional<TrotterSearchResult> &found) {
            ComparisonRow r;
            r.n = n;
            r.family = family;
            r.order = order;
            r.t = t;
            r.model_seed = mseed;
            r.anneal_r = anneal_r;
            if (found) {
                r.r_star = found->r_star;
                r.value = found->value;
            }
            log_line(config, "n=" + std::to_string(n) + " " + family_name(family) + " r*=" +
                                 (found ? std::to_string(found->r_star) : std::string("cap_exceeded")));
            return r;
        };

        const auto spectral = commutator_sums(model, fo, NormKind::spectral);
        const auto frob = commutator_sums(model, fo, NormKind::frobenius);
        const double lambda = model.max_summand_norm();
        const std::size_t length = model.num_summands();

        auto lloyd = search_or_flag(
            [&](std::uint64_t r) { return lloyd_bound(FormulaSpec{fo, t, r}, length, lambda).value; },
            config.epsilon);
        auto comm = search_or_flag([&](std::uint64_t r) { return commutator_bound_value(spectral, t, r); },
                                   config.epsilon);
        auto rand = search_or_flag(
            [&](std::uint64_t r) { return random_input_bound_value(frob, model.num_qubits(), t, r); },
            config.epsilon);
        if (!comm) {
            throw NumericalError("comparison: commutator r* exceeds the cap at n = " + std::to_string(n));
        }
        const std::uint64_t anneal_r = comm->r_star;

        const ObservationCost anneal_cost(model, observable, fo, t, config.anneal_cost);
        AnnealSchedule schedule = config.schedule;
        schedule.seed = mix_seed(mseed);
        const auto annealed = optimize_order(
            length, [&](const EvolutionOrder &order) { return anneal_cost(order, anneal_r); }, schedule);
        const EvolutionOrder best = annealed.order;
        log_line(config, "n=" + std::to_string(n) + " annealed order " + format_order(best) + " cost " +
                             csv_number(annealed.trace.best_cost) + " (initial " +
                             csv_number(annealed.trace.initial_cost) + ")");

        const ObservationCost search_cost(model, observable, fo, t, config.search_cost);
        auto obs = search_or_flag([&](std::uint64_t r) { return search_cost(best, r); }, config.epsilon);
        const EmpiricalObservationError empirical(model, observable, fo, t);
        auto emp = search_or_flag([&](std::uint64_t r) { return empirical(best, r); }, config.epsilon);

        out.rows.push_back(row(BoundFamily::lloyd, default_order, anneal_r, lloyd));
        out.rows.push_back(row(BoundFamily::commutator, default_order, anneal_r, comm));
        out.rows.push_back(row(BoundFamily::random_input, default_order, anneal_r, rand));
        out.rows.push_back(row(BoundFamily::observation, best, anneal_r, obs));
        out.rows.push_back(row(BoundFamily::empirical, best, anneal_r, emp));
        if (config.model == ModelKind::file || config.model == ModelKind::hydrogen) {
            break;
        }
    }
    out.table = comparison_table(out.rows, config);
    write_table(config, "comparison.csv", out.table);
    return out;
}

ComparisonResult run_heisenberg_comparison(const ExperimentConfig &config) {
    ModelFactory factory;
    switch (config.model) {
        case ModelKind::heisenberg:
            factory = [](unsigned n, std::uint64_t seed) { return build_heisenberg_xyz(n, seed); };
            break;
        case ModelKind::ising:
            factory = [](unsigned n, std::uint64_t) {
                std::vector<IsingCoupling> couplings;
                for (unsigned i = 0; i + 1 < n; ++i) {
                    couplings.push_back({i, i + 1, 1.0});
                }
                return build_transverse_ising(n, couplings, std::vector<double>(n, 1.0));
            };
            break;
        case ModelKind::hydrogen:
            factory = [](unsigned, std::uint64_t) { return build_hydrogen_sto3g(); };
            break;
        case ModelKind::file: {
            const HamiltonianModel loaded = load_hamiltonian(config.model_path);
            factory = [loaded](unsigned, std::uint64_t) { return loaded; };
            break;
        }
    }
    return run_comparison(config, factory, [](unsigned n) { return build_observable_z_uniform(n); });
}

}  // namespace trotterobs
