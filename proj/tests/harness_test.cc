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

#include <cmath>
#include <filesystem>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "trotterobs/csv.h"
#include "trotterobs/errors.h"
#include "trotterobs/experiments.h"
#include "trotterobs/scaling.h"
#include "trotterobs/svg_plot.h"

namespace trotterobs {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string &name) {
    const fs::path p = fs::temp_directory_path() / ("trotterobs_harness_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

// ---- csv

TEST(Csv, NumbersUseSeventeenDigits) {
    EXPECT_EQ(csv_number(0.1), "0.10000000000000001");
    EXPECT_EQ(csv_number(1.0), "1");
    EXPECT_EQ(std::stod(csv_number(M_PI)), M_PI);
}

TEST(Csv, RoundTripWithQuoting) {
    CsvTable t({"a", "b", "c"});
    t.add_row({"1", "x,y", "say \"hi\""});
    t.add_row({"", "2", "line"});
    const std::string text = t.to_string();
    EXPECT_EQ(text.find('\r'), std::string::npos);
    EXPECT_EQ(text.back(), '\n');
    const auto back = parse_csv(text);
    ASSERT_EQ(back.num_rows(), 2u);
    EXPECT_EQ(back.cell(0, "b"), "x,y");
    EXPECT_EQ(back.cell(0, "c"), "say \"hi\"");
    EXPECT_EQ(back.cell(1, "a"), "");
    EXPECT_EQ(back.to_string(), text);
}

TEST(Csv, Errors) {
    CsvTable t({"a", "b"});
    EXPECT_THROW(t.add_row({"1"}), std::invalid_argument);
    EXPECT_THROW(t.column("zz"), std::invalid_argument);
    EXPECT_THROW(parse_csv("a,b\n1,2,3\n"), std::invalid_argument);
    EXPECT_THROW(parse_csv("a,b\n\"1,2\n"), std::invalid_argument);
    EXPECT_THROW(read_text_file("/nonexistent/trotterobs/file.csv"), IoError);
    EXPECT_THROW(write_text_file("/nonexistent/trotterobs/file.csv", "x"), IoError);
}

TEST(Csv, FileRoundTrip) {
    const auto dir = scratch_dir("csv");
    const std::string path = (dir / "t.csv").string();
    write_text_file(path, "a\n1\n");
    EXPECT_EQ(read_text_file(path), "a\n1\n");
}

// ---- scaling

CsvTable synthetic_table(const std::vector<double> &r) {
    CsvTable t({"n", "family", "r_star", "status"});
    for (std::size_t i = 0; i < r.size(); ++i) {
        t.add_row({std::to_string(4 + i), "observation", csv_number(r[i]), "ok"});
        t.add_row({std::to_string(4 + i), "lloyd", "", "cap_exceeded"});
    }
    return t;
}

TEST(Scaling, ExactCube) {
    std::vector<double> r;
    for (int n = 4; n <= 8; ++n) {
        r.push_back(std::pow(n, 3));
    }
    const auto fit = scaling_fit(synthetic_table(r), "observation");
    EXPECT_NEAR(fit.exponent, 3.0, 1e-9);
    EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
    EXPECT_EQ(fit.points, 5u);
}

TEST(Scaling, ConstantGivesZero) {
    const auto fit = scaling_fit(synthetic_table({7, 7, 7, 7}), "observation");
    EXPECT_NEAR(fit.exponent, 0.0, 1e-12);
    EXPECT_NEAR(fit.intercept, std::log(7.0), 1e-12);
}

TEST(Scaling, MatchesClosedFormRegression) {
    const std::vector<double> x{2, 3, 5, 7}, y{3, 11, 20, 60};
    double mx = 0, my = 0;
    for (int i = 0; i < 4; ++i) {
        mx += std::log(x[i]) / 4;
        my += std::log(y[i]) / 4;
    }
    double sxy = 0, sxx = 0;
    for (int i = 0; i < 4; ++i) {
        sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
        sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
    }
    const auto fit = fit_power_law(x, y);
    EXPECT_NEAR(fit.exponent, sxy / sxx, 1e-12);
    EXPECT_NEAR(fit.intercept, my - sxy / sxx * mx, 1e-12);
    EXPECT_GT(fit.r_squared, 0.9);
    EXPECT_LT(fit.r_squared, 1.0);
}

TEST(Scaling, Errors) {
    EXPECT_THROW(scaling_fit(synthetic_table({1, 2}), "observation"), std::invalid_argument);
    EXPECT_THROW(scaling_fit(synthetic_table({1, 2, 3}), "lloyd"), std::invalid_argument);
    EXPECT_THROW(fit_power_law({1, 2, 3}, {1, -2, 3}), std::invalid_argument);
    EXPECT_THROW(fit_power_law({2, 2, 2}, {1, 2, 3}), std::invalid_argument);
}

// ---- svg

// Checks element names against the allowed subset and tag nesting.
::testing::AssertionResult lint_svg(const std::string &svg) {
    static const std::set<std::string> allowed{"svg", "g", "path", "polyline", "text", "line"};
    const std::regex tag(R"(<(/?)([a-zA-Z]+)([^>]*?)(/?)>)");
    std::vector<std::string> stack;
    int roots = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tag); it != std::sregex_iterator(); ++it) {
        const auto &m = *it;
        const std::string name = m[2];
        if (!allowed.count(name)) {
            return ::testing::AssertionFailure() << "element <" << name << "> not allowed";
        }
        if (m[1] == "/") {
            if (stack.empty() || stack.back() != name) {
                return ::testing::AssertionFailure() << "unbalanced </" << name << ">";
            }
            stack.pop_back();
        } else if (m[4] != "/") {
            if (stack.empty()) {
                ++roots;
                if (name != "svg") {
                    return ::testing::AssertionFailure() << "root is <" << name << ">";
                }
            }
            stack.push_back(name);
        }
    }
    if (!stack.empty()) {
        return ::testing::AssertionFailure() << "unclosed <" << stack.back() << ">";
    }
    if (roots != 1) {
        return ::testing::AssertionFailure() << roots << " root elements";
    }
    if (svg.find("xmlns=\"http://www.w3.org/2000/svg\"") == std::string::npos) {
        return ::testing::AssertionFailure() << "missing namespace";
    }
    return ::testing::AssertionSuccess();
}

std::vector<std::string> polylines(const std::string &svg) {
    const std::regex re(R"(<polyline points="([^"]*)\")");
    std::vector<std::string> out;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
        out.push_back((*it)[1]);
    }
    return out;
}

TEST(Svg, EmptySeriesShowsNoData) {
    PlotSpec spec{"empty", "x", "y", true, true, {{"s", {}, {}}}};
    const auto svg = render_svg(spec);
    EXPECT_TRUE(lint_svg(svg));
    EXPECT_NE(svg.find(">no data</text>"), std::string::npos);
    EXPECT_TRUE(polylines(svg).empty());
    EXPECT_NE(svg.find("<path"), std::string::npos);
}

TEST(Svg, TwoPointSeries) {
    PlotSpec spec{"two", "n", "r", true, true, {{"obs", {4, 8}, {100, 1000}}}};
    const auto svg = render_svg(spec);
    EXPECT_TRUE(lint_svg(svg));
    const auto lines = polylines(svg);
    ASSERT_EQ(lines.size(), 1u);
    EXPECT_EQ(std::count(lines[0].begin(), lines[0].end(), ','), 2);
    EXPECT_EQ(std::count(lines[0].begin(), lines[0].end(), ' '), 1);
}

TEST(Svg, EscapesText) {
    PlotSpec spec{"a<b & c", "x", "y", false, false, {{"s\"1", {1, 2, 3}, {3, 1, 2}}}};
    const auto svg = render_svg(spec);
    EXPECT_TRUE(lint_svg(svg));
    EXPECT_NE(svg.find("a&lt;b &amp; c"), std::string::npos);
    EXPECT_NE(svg.find("s&quot;1"), std::string::npos);
}

TEST(Svg, CompareCsvGivesOneSeriesPerFamily) {
    CsvTable t({"n", "family", "r_star", "status"});
    for (int n = 4; n <= 6; ++n) {
        t.add_row({std::to_string(n), "commutator", std::to_string(n * n * 10), "ok"});
        t.add_row({std::to_string(n), "observation", std::to_string(n * n * 5), "ok"});
        t.add_row({std::to_string(n), "lloyd", "", "cap_exceeded"});
    }
    const auto spec = plot_from_csv(t, PlotKind::compare);
    EXPECT_TRUE(spec.log_x);
    EXPECT_TRUE(spec.log_y);
    ASSERT_EQ(spec.series.size(), 3u);
    const auto svg = emit_plot(t, PlotKind::compare);
    EXPECT_TRUE(lint_svg(svg));
    EXPECT_EQ(polylines(svg).size(), 2u);
    EXPECT_NE(svg.find(">lloyd</text>"), std::string::npos);
}

TEST(Svg, AnnealCsv) {
    CsvTable t({"iter", "theta", "mean_cost", "mean_best_cost"});
    for (int i = 0; i < 5; ++i) {
        t.add_row({std::to_string(i), "1", csv_number(1.0 / (i + 1)), csv_number(1.0 / (i + 1))});
    }
    const auto svg = emit_plot(t, PlotKind::anneal);
    EXPECT_TRUE(lint_svg(svg));
    EXPECT_EQ(polylines(svg).size(), 2u);
    EXPECT_THROW(emit_plot(CsvTable({"q"}), PlotKind::anneal), std::invalid_argument);
    EXPECT_THROW(parse_plot_kind("pie"), std::invalid_argument);
}

// ---- experiments

TEST(Config, Defaults) {
    const auto h = hydrogen_defaults();
    EXPECT_EQ(h.epsilon, 1e-3);
    ASSERT_TRUE(h.fixed_t.has_value());
    EXPECT_EQ(*h.fixed_t, 4.0);
    EXPECT_EQ(h.schedule.theta0, 10.0);
    EXPECT_EQ(h.schedule.theta_inf, 1.0);
    EXPECT_EQ(h.schedule.alpha, 0.95);
    EXPECT_EQ(h.trials, 50u);
    EXPECT_EQ(h.formula_order, 1);
    const auto c = heisenberg_defaults();
    EXPECT_EQ(c.epsilon, 1e-3);
    EXPECT_FALSE(c.fixed_t.has_value());
    EXPECT_EQ(c.time_for(6), 6.0);
    EXPECT_EQ(c.n_min, 4u);
    EXPECT_EQ(c.n_max, 8u);
    EXPECT_EQ(c.formula_order, 1);
}

TEST(Config, Validation) {
    auto c = heisenberg_defaults();
    c.epsilon = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = heisenberg_defaults();
    c.trials = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = heisenberg_defaults();
    c.n_min = 6;
    c.n_max = 5;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = heisenberg_defaults();
    c.n_max = 11;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Config, SeedsAreDistinct) {
    std::set<std::uint64_t> seen;
    for (unsigned n = 2; n <= 10; ++n) {
        seen.insert(model_seed(0, n));
    }
    for (std::size_t k = 0; k < 50; ++k) {
        seen.insert(trial_seed(0, k));
    }
    EXPECT_EQ(seen.size(), 59u);
    EXPECT_NE(model_seed(0, 4), model_seed(1, 4));
}

TEST(Comparison, CommutingModelGivesUnitTrotterNumbers) {
    auto config = heisenberg_defaults();
    config.n_min = 2;
    config.n_max = 4;
    ModelFactory model = [](unsigned n, std::uint64_t) {
        std::vector<PauliSum> summands;
        for (unsigned q = 0; q < n; ++q) {
            summands.push_back(PauliSum(PauliString::single(n, q, 'Z'), 1e-5));
        }
        return HamiltonianModel(n, summands);
    };
    const auto result = run_comparison(config, model, build_observable_z_uniform);
    ASSERT_EQ(result.rows.size(), 3 * comparison_families().size());
    for (const auto &row : result.rows) {
        ASSERT_TRUE(row.r_star.has_value());
        EXPECT_EQ(*row.r_star, 1u) << family_name(row.family) << " n=" << row.n;
    }
    EXPECT_EQ(result.table.header().front(), "n");
    EXPECT_EQ(result.table.num_rows(), result.rows.size());
}

TEST(Comparison, SmallHeisenbergOrderingAndDeterminism) {
    auto config = heisenberg_defaults();
    config.n_min = 3;
    config.n_max = 3;
    const auto dir = scratch_dir("compare");
    config.out_dir = dir.string();
    const auto a = run_heisenberg_comparison(config);
    const auto b = run_heisenberg_comparison(config);
    EXPECT_EQ(a.table.to_string(), b.table.to_string());
    EXPECT_EQ(read_text_file((dir / "comparison.csv").string()), a.table.to_string());
    const auto r = [&](BoundFamily f) { return a.r_star(3, f).value_or(kTrotterNumberCap + 1); };
    EXPECT_LE(r(BoundFamily::empirical), r(BoundFamily::observation));
    EXPECT_LE(r(BoundFamily::observation), r(BoundFamily::commutator));
    EXPECT_LE(r(BoundFamily::commutator), r(BoundFamily::lloyd));
    EXPECT_LE(r(BoundFamily::random_input), r(BoundFamily::commutator));
    for (const auto &row : a.table.rows()) {
        EXPECT_EQ(row.size(), a.table.header().size());
    }
    EXPECT_EQ(a.table.cell(0, "epsilon"), "0.001");
    EXPECT_EQ(a.table.cell(0, "t"), "3");
}

TEST(Hydrogen, SingleTrialIsReproducible) {
    auto config = hydrogen_defaults();
    config.trials = 2;
    config.seed = 5;
    const auto d1 = scratch_dir("h1");
    const auto d2 = scratch_dir("h2");
    config.out_dir = d1.string();
    const auto a = run_hydrogen_experiment(config);
    config.out_dir = d2.string();
    const auto b = run_hydrogen_experiment(config);
    for (const char *name : {"hydrogen_mean.csv", "hydrogen_traces.csv", "hydrogen_summary.csv"}) {
        EXPECT_EQ(read_text_file((d1 / name).string()), read_text_file((d2 / name).string())) << name;
    }
    EXPECT_EQ(a.traces.size(), 2u);
    EXPECT_EQ(a.anneal_r, b.anneal_r);
    EXPECT_EQ(a.traces[0].steps.size(), 45u);
    // mean best-so-far column never increases
    const auto &curve = a.mean_curve;
    ASSERT_EQ(curve.num_rows(), 46u);
    double prev = std::stod(curve.cell(0, "mean_best_cost"));
    for (std::size_t i = 1; i < curve.num_rows(); ++i) {
        const double v = std::stod(curve.cell(i, "mean_best_cost"));
        EXPECT_LE(v, prev);
        prev = v;
    }
    EXPECT_LE(a.mean_best_cost, a.mean_initial_cost);
    for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_LE(a.best_r_star[k], a.initial_r_star);
    }
}

}  // namespace
}  // namespace trotterobs
