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

// trotterobs command line: bounds, anneal, compare, hydrogen, scaling, plot.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "trotterobs/annealer.h"
#include "trotterobs/bounds.h"
#include "trotterobs/csv.h"
#include "trotterobs/errors.h"
#include "trotterobs/experiments.h"
#include "trotterobs/hamiltonian.h"
#include "trotterobs/product_formula.h"
#include "trotterobs/scaling.h"
#include "trotterobs/svg_plot.h"

namespace tob = trotterobs;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

// {"re": [[...]], "im": [[...]]}, "im" optional.
tob::DenseOperator load_density_matrix(const std::string &path, Eigen::Index dim) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(tob::read_text_file(path));
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument("rho: " + std::string(e.what()));
    }
    auto read_part = [&](const char *key, tob::DenseOperator &rho, bool imag) {
        if (!doc.contains(key)) {
            return;
        }
        const auto &rows = doc.at(key);
        if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim) {
            throw tob::DimensionError(std::string("rho: '") + key + "' must have " + std::to_string(dim) + " rows");
        }
        for (Eigen::Index i = 0; i < dim; ++i) {
            const auto &row = rows.at(static_cast<std::size_t>(i));
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
                throw tob::DimensionError("rho: every row must have " + std::to_string(dim) + " entries");
            }
            for (Eigen::Index j = 0; j < dim; ++j) {
                const double v = row.at(static_cast<std::size_t>(j)).get<double>();
                if (imag) {
                    rho(i, j) += std::complex<double>(0, v);
                } else {
                    rho(i, j) += v;
                }
            }
        }
    };
    if (!doc.is_object() || !doc.contains("re")) {
        throw std::invalid_argument("rho: expected an object with an 're' matrix");
    }
    tob::DenseOperator rho = tob::DenseOperator::Zero(dim, dim);
    try {
        read_part("re", rho, false);
        read_part("im", rho, true);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument("rho: " + std::string(e.what()));
    }
    return rho;
}

void ensure_dir(const std::string &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw tob::IoError("cannot create directory '" + dir + "': " + ec.message());
    }
}

std::string join_path(const std::string &dir, const std::string &name) {
    return (std::filesystem::path(dir) / name).string();
}

struct BoundsArgs {
    std::string hamiltonian, observable, rho;
    double t = 1;
    std::uint64_t r = 1;
    int order = 1;
};

int run_bounds(const BoundsArgs &a) {
    const auto model = tob::load_hamiltonian(a.hamiltonian);
    const auto observable = tob::load_observable(a.observable);
    if (observable.num_qubits() != model.num_qubits()) {
        throw tob::DimensionError("observable and Hamiltonian qubit counts differ");
    }
    const tob::FormulaSpec spec{a.order, a.t, a.r};
    tob::validate(spec);
    const Eigen::Index dim = Eigen::Index{1} << model.num_qubits();
    tob::DenseOperator rho = tob::DenseOperator::Zero(dim, dim);
    if (a.rho.empty()) {
        rho(0, 0) = 1;
    } else {
        rho = load_density_matrix(a.rho, dim);
    }

    std::vector<tob::BoundReport> reports;
    reports.push_back(tob::lloyd_bound(spec, model.num_summands(), model.max_summand_norm()));
    reports.push_back(tob::commutator_bound(model, spec));
    reports.push_back(tob::random_input_bound(model, spec));
    reports.push_back(tob::observation_cost(model, observable, spec));

    const auto o = observable.to_dense();
    const auto u = tob::exact_evolution(model, a.t);
    const auto v = tob::product_formula(model, spec);
    bool numerical_flag = false;
    if (a.t > 0) {
        const auto kernel = tob::error_kernel(u, v, a.t);
        auto rep = tob::make_report(tob::BoundFamily::kernel_exact, spec,
                                    tob::kernel_observation_bound(kernel.e, o, a.t));
        rep.metadata["branch_ambiguous"] = kernel.branch_ambiguous ? "true" : "false";
        reports.push_back(rep);

        const auto eq = tob::equivalent_hamiltonian_dense(model, spec);
        const tob::DenseOperator h_prime = eq.h_tilde - model.dense();
        const auto integral = tob::principal_bound_integral(eq.h_tilde, h_prime, o, a.t);
        const auto principal = tob::principal_observation_error(eq.h_tilde, h_prime, o, rho, a.t);
        auto prep = tob::make_report(tob::BoundFamily::principal_integral, spec, integral.value);
        prep.metadata["converged"] = integral.converged && principal.converged ? "true" : "false";
        prep.metadata["principal_error"] = tob::csv_number(principal.value);
        numerical_flag = !(integral.converged && principal.converged);
        reports.push_back(prep);
    }
    auto emp = tob::make_report(tob::BoundFamily::empirical, spec, tob::observation_error_worst_case(u, v, o));
    emp.metadata["fixed_state"] = tob::csv_number(tob::observation_error_fixed_state(u, v, o, rho));
    reports.push_back(emp);

    tob::CsvTable table({"family", "formula_order", "r", "t", "order", "value", "approx", "details"});
    for (const auto &rep : reports) {
        std::string details;
        for (const auto &[k, val] : rep.metadata) {
            if (k == "approx" || k == "order") {
                continue;
            }
            details += (details.empty() ? "" : ";") + k + "=" + val;
        }
        table.add_row({tob::family_name(rep.family), std::to_string(rep.formula_order), std::to_string(rep.r),
                       tob::csv_number(rep.t), tob::format_order(model.order()), tob::csv_number(rep.value),
                       rep.family == tob::BoundFamily::observation ? "true" : "false", details});
    }
    std::cout << table.to_string();
    if (numerical_flag) {
        std::cerr << "warning: principal-error quadrature did not converge\n";
        return kExitNumerical;
    }
    return 0;
}

struct AnnealArgs {
    std::string hamiltonian, observable, out;
    double t = 1;
    std::uint64_t r = 1;
    int order = 1;
    tob::AnnealSchedule schedule;
    std::size_t trials = 1;
};

int run_anneal(const AnnealArgs &a) {
    const auto model = tob::load_hamiltonian(a.hamiltonian);
    const auto observable = tob::load_observable(a.observable);
    const tob::FormulaSpec spec{a.order, a.t, a.r};
    tob::validate(spec);
    if (a.trials == 0) {
        throw std::invalid_argument("--trials must be at least 1");
    }
    const tob::ObservationCost cost(model, observable, a.order, a.t);
    tob::CachedOrderCost cached([&](const tob::EvolutionOrder &order) { return cost(order, a.r); });
    ensure_dir(a.out);
    tob::CsvTable summary({"trial", "seed", "formula_order", "t", "r", "initial_order", "final_order", "best_order",
                           "initial_cost", "final_cost", "best_cost"});
    for (std::size_t trial = 0; trial < a.trials; ++trial) {
        tob::AnnealSchedule schedule = a.schedule;
        schedule.seed = a.trials == 1 ? a.schedule.seed : tob::trial_seed(a.schedule.seed, trial);
        auto result = tob::optimize_order(
            model.num_summands(), [&](const tob::EvolutionOrder &order) { return cached(order); }, schedule);
        const auto &tr = result.trace;
        tob::write_text_file(join_path(a.out, "trace_" + std::to_string(trial) + ".csv"),
                             tob::trace_table(tr).to_string());
        summary.add_row({std::to_string(trial), std::to_string(schedule.seed), std::to_string(a.order),
                         tob::csv_number(a.t), std::to_string(a.r), tob::format_order(tr.initial_order),
                         tob::format_order(tr.final_order), tob::format_order(tr.best_order),
                         tob::csv_number(tr.initial_cost), tob::csv_number(tr.final_cost),
                         tob::csv_number(tr.best_cost)});
    }
    tob::write_text_file(join_path(a.out, "anneal_summary.csv"), summary.to_string());
    std::cout << summary.to_string();
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Trotter error bounds for observables, evolution-order annealing and benchmarks"};
    app.require_subcommand(1);

    BoundsArgs bounds;
    auto *cmd_bounds = app.add_subcommand("bounds", "Evaluate every error metric for one Hamiltonian");
    cmd_bounds->add_option("--hamiltonian", bounds.hamiltonian, "Hamiltonian file")->required();
    cmd_bounds->add_option("--observable", bounds.observable, "Observable file")->required();
    cmd_bounds->add_option("--t", bounds.t, "Evolution time")->required();
    cmd_bounds->add_option("--r", bounds.r, "Trotter number")->required();
    cmd_bounds->add_option("--order", bounds.order, "Product formula order (1 or 2)")->default_val(1);
    cmd_bounds->add_option("--rho", bounds.rho, "Density matrix JSON {\"re\": [[...]], \"im\": [[...]]}");

    AnnealArgs anneal;
    auto *cmd_anneal = app.add_subcommand("anneal", "Anneal the evolution order against the observation cost");
    cmd_anneal->add_option("--hamiltonian", anneal.hamiltonian, "Hamiltonian file")->required();
    cmd_anneal->add_option("--observable", anneal.observable, "Observable file")->required();
    cmd_anneal->add_option("--t", anneal.t, "Evolution time")->required();
    cmd_anneal->add_option("--r", anneal.r, "Trotter number used inside the cost")->required();
    cmd_anneal->add_option("--order", anneal.order, "Product formula order (1 or 2)")->default_val(1);
    cmd_anneal->add_option("--theta0", anneal.schedule.theta0, "Initial temperature")->default_val(10.0);
    cmd_anneal->add_option("--theta-inf", anneal.schedule.theta_inf, "Final temperature")->default_val(1.0);
    cmd_anneal->add_option("--alpha", anneal.schedule.alpha, "Cooling ratio")->default_val(0.95);
    cmd_anneal->add_option("--seed", anneal.schedule.seed, "Seed")->default_val(0);
    cmd_anneal->add_option("--trials", anneal.trials, "Independent seeded runs")->default_val(1);
    cmd_anneal->add_option("--out", anneal.out, "Output directory")->required();

    tob::ExperimentConfig compare = tob::heisenberg_defaults();
    std::string compare_model = "heisenberg";
    double compare_t = 0;
    auto *cmd_compare = app.add_subcommand("compare", "Trotter numbers of every bound family against n");
    cmd_compare->add_option("--model", compare_model, "heisenberg, ising, hydrogen or a Hamiltonian file")
        ->default_val("heisenberg");
    cmd_compare->add_option("--n-min", compare.n_min, "Smallest n")->default_val(4);
    cmd_compare->add_option("--n-max", compare.n_max, "Largest n")->default_val(8);
    cmd_compare->add_option("--epsilon", compare.epsilon, "Error tolerance")->default_val(1e-3);
    cmd_compare->add_option("--order", compare.formula_order, "Product formula order (1 or 2)")->default_val(1);
    cmd_compare->add_option("--seed", compare.seed, "Experiment seed")->default_val(0);
    cmd_compare->add_option("--t", compare_t, "Fixed evolution time (default t = n)");
    cmd_compare->add_option("--out", compare.out_dir, "Output directory")->required();
    cmd_compare->add_flag("--exact-cost", "Sum every k in the observation cost");

    tob::ExperimentConfig hydrogen = tob::hydrogen_defaults();
    auto *cmd_hydrogen = app.add_subcommand("hydrogen", "Annealing trials on the STO-3G hydrogen model");
    cmd_hydrogen->add_option("--trials", hydrogen.trials, "Trials")->default_val(50);
    cmd_hydrogen->add_option("--seed", hydrogen.seed, "Experiment seed")->default_val(0);
    cmd_hydrogen->add_option("--epsilon", hydrogen.epsilon, "Error tolerance")->default_val(1e-3);
    cmd_hydrogen->add_option("--order", hydrogen.formula_order, "Product formula order (1 or 2)")->default_val(1);
    cmd_hydrogen->add_option("--out", hydrogen.out_dir, "Output directory")->required();
    cmd_hydrogen->add_flag("--exact-cost", "Sum every k in the observation cost");

    std::string scaling_csv, scaling_family;
    auto *cmd_scaling = app.add_subcommand("scaling", "Fit r* ~ n^k for one family of a comparison CSV");
    cmd_scaling->add_option("--csv", scaling_csv, "comparison.csv")->required();
    cmd_scaling->add_option("--family", scaling_family, "Bound family")->required();

    std::string plot_csv, plot_kind, plot_out;
    auto *cmd_plot = app.add_subcommand("plot", "Render a CSV as SVG");
    cmd_plot->add_option("--csv", plot_csv, "Input CSV")->required();
    cmd_plot->add_option("--kind", plot_kind, "anneal or compare")->required()->check(
        CLI::IsMember({"anneal", "compare"}));
    cmd_plot->add_option("--out", plot_out, "Output SVG")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*cmd_bounds) {
            return run_bounds(bounds);
        }
        if (*cmd_anneal) {
            return run_anneal(anneal);
        }
        if (*cmd_compare) {
            if (compare_model == "heisenberg" || compare_model == "ising" || compare_model == "hydrogen") {
                compare.model = tob::parse_model_kind(compare_model);
            } else {
                compare.model = tob::ModelKind::file;
                compare.model_path = compare_model;
            }
            if (compare_t > 0) {
                compare.fixed_t = compare_t;
            }
            if (cmd_compare->count("--exact-cost") > 0) {
                compare.anneal_cost.summation = tob::CostSummation::exact;
                compare.search_cost.summation = tob::CostSummation::exact;
            }
            compare.log = &std::cerr;
            auto result = tob::run_heisenberg_comparison(compare);
            std::cout << result.table.to_string();
            return 0;
        }
        if (*cmd_hydrogen) {
            if (cmd_hydrogen->count("--exact-cost") > 0) {
                hydrogen.anneal_cost.summation = tob::CostSummation::exact;
                hydrogen.search_cost.summation = tob::CostSummation::exact;
            }
            hydrogen.log = &std::cerr;
            auto result = tob::run_hydrogen_experiment(hydrogen);
            std::cout << "anneal_r," << result.anneal_r << "\n"
                      << "mean_initial_cost," << tob::csv_number(result.mean_initial_cost) << "\n"
                      << "mean_final_cost," << tob::csv_number(result.mean_final_cost) << "\n"
                      << "mean_best_cost," << tob::csv_number(result.mean_best_cost) << "\n";
            return 0;
        }
        if (*cmd_scaling) {
            const auto table = tob::parse_csv(tob::read_text_file(scaling_csv));
            const auto fit = tob::scaling_fit(table, scaling_family);
            std::cout << "family,exponent,intercept,r_squared,points\n"
                      << scaling_family << "," << tob::csv_number(fit.exponent) << ","
                      << tob::csv_number(fit.intercept) << "," << tob::csv_number(fit.r_squared) << ","
                      << fit.points << "\n";
            return 0;
        }
        if (*cmd_plot) {
            const auto table = tob::parse_csv(tob::read_text_file(plot_csv));
            tob::write_text_file(plot_out, tob::emit_plot(table, tob::parse_plot_kind(plot_kind)));
            return 0;
        }
    } catch (const tob::IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const tob::NumericalError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const tob::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitInput;
}
