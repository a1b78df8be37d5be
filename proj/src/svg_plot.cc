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

#include "trotterobs/svg_plot.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "trotterobs/hamiltonian.h"

namespace trotterobs {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 80;
constexpr double kRight = 170;
constexpr double kTop = 40;
constexpr double kBottom = 60;

const char *const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2",
                               "#7f7f7f", "#bcbd22", "#17becf"};

std::string escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::string num(double v) {
    // pixel coordinates, 2 decimals
    return format_shortest(std::round(v * 100) / 100);
}

struct Axis {
    bool log = false;
    double lo = 0;
    double hi = 1;
    double pixel_lo = 0;
    double pixel_hi = 1;

    double map(double v) const {
        const double a = log ? std::log10(lo) : lo;
        const double b = log ? std::log10(hi) : hi;
        const double w = log ? std::log10(v) : v;
        const double f = b == a ? 0.5 : (w - a) / (b - a);
        return pixel_lo + f * (pixel_hi - pixel_lo);
    }
};

std::vector<double> linear_ticks(double lo, double hi) {
    if (hi <= lo) {
        return {lo};
    }
    const double raw = (hi - lo) / 5;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) {
            step = m * mag;
            break;
        }
    }
    std::vector<double> ticks;
    for (double v = std::ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
        ticks.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
    }
    return ticks;
}

std::vector<double> log_ticks(double lo, double hi, const std::set<double> &data) {
    if (data.size() <= 12 && !data.empty()) {
        return {data.begin(), data.end()};
    }
    std::vector<double> ticks;
    for (double e = std::ceil(std::log10(lo)); e <= std::floor(std::log10(hi)); e += 1) {
        ticks.push_back(std::pow(10.0, e));
    }
    if (ticks.size() < 2) {
        ticks = {lo, hi};
    }
    return ticks;
}

}  // namespace

PlotKind parse_plot_kind(std::string_view name) {
    if (name == "anneal") {
        return PlotKind::anneal;
    }
    if (name == "compare") {
        return PlotKind::compare;
    }
    throw std::invalid_argument("unknown plot kind '" + std::string(name) + "'");
}

std::string render_svg(const PlotSpec &spec) {
    // Keep only points drawable on the chosen axes.
    std::vector<PlotSeries> series;
    std::set<double> xs, ys;
    for (const auto &s : spec.series) {
        if (s.x.size() != s.y.size()) {
            throw std::invalid_argument("plot: series '" + s.name + "' has mismatched x and y lengths");
        }
        PlotSeries kept{s.name, {}, {}};
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const double x = s.x[i];
            const double y = s.y[i];
            if (!std::isfinite(x) || !std::isfinite(y) || (spec.log_x && x <= 0) || (spec.log_y && y <= 0)) {
                continue;
            }
            kept.x.push_back(x);
            kept.y.push_back(y);
            xs.insert(x);
            ys.insert(y);
        }
        series.push_back(std::move(kept));
    }

    Axis ax{spec.log_x, 1, 10, kLeft, kWidth - kRight};
    Axis ay{spec.log_y, 1, 10, kHeight - kBottom, kTop};
    const bool empty = xs.empty();
    if (!empty) {
        ax.lo = *xs.begin();
        ax.hi = *xs.rbegin();
        ay.lo = *ys.begin();
        ay.hi = *ys.rbegin();
        auto pad = [](Axis &a) {
            if (a.log) {
                if (a.hi == a.lo) {
                    a.lo /= 2;
                    a.hi *= 2;
                }
            } else {
                if (a.hi == a.lo) {
                    a.lo -= 1;
                    a.hi += 1;
                }
            }
        };
        pad(ax);
        pad(ay);
        if (!ay.log && ay.lo > 0 && ay.lo < 0.5 * ay.hi) {
            ay.lo = 0;
        }
    }

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    out += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    out += "<text x=\"" + num(kWidth / 2) + "\" y=\"" + num(kTop / 2 + 4) + "\" text-anchor=\"middle\" font-size=\"14\">" +
           escape(spec.title) + "</text>\n";

    // axes
    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    out += "<path d=\"M" + num(x0) + " " + num(y1) + " L" + num(x0) + " " + num(y0) + " L" + num(x1) + " " +
           num(y0) + "\" fill=\"none\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(kHeight - 15) + "\" text-anchor=\"middle\">" +
           escape(spec.x_label) + "</text>\n";
    out += "<text x=\"18\" y=\"" + num((y0 + y1) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
           num((y0 + y1) / 2) + ")\">" + escape(spec.y_label) + "</text>\n";

    if (empty) {
        out += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num((y0 + y1) / 2) +
               "\" text-anchor=\"middle\">no data</text>\n";
        out += "</g>\n</svg>\n";
        return out;
    }

    const auto xt = ax.log ? log_ticks(ax.lo, ax.hi, xs) : linear_ticks(ax.lo, ax.hi);
    const auto yt = ay.log ? log_ticks(ay.lo, ay.hi, ys.size() <= 6 ? ys : std::set<double>{})
                           : linear_ticks(ay.lo, ay.hi);
    out += "<g stroke=\"black\">\n";
    for (double v : xt) {
        const double px = ax.map(v);
        out += "<line x1=\"" + num(px) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(px) + "\" y2=\"" + num(y0 + 5) +
               "\"/>\n";
    }
    for (double v : yt) {
        const double py = ay.map(v);
        out += "<line x1=\"" + num(x0 - 5) + "\" y1=\"" + num(py) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(py) +
               "\"/>\n";
    }
    out += "</g>\n";
    for (double v : xt) {
        out += "<text x=\"" + num(ax.map(v)) + "\" y=\"" + num(y0 + 18) + "\" text-anchor=\"middle\">" +
               format_shortest(v) + "</text>\n";
    }
    for (double v : yt) {
        out += "<text x=\"" + num(x0 - 8) + "\" y=\"" + num(ay.map(v) + 4) + "\" text-anchor=\"end\">" +
               format_shortest(v) + "</text>\n";
    }

    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto &s = series[i];
        const char *color = kColors[i % (sizeof kColors / sizeof kColors[0])];
        out += "<g stroke=\"" + std::string(color) + "\" fill=\"none\">\n";
        if (!s.x.empty()) {
            out += "<polyline points=\"";
            for (std::size_t k = 0; k < s.x.size(); ++k) {
                if (k > 0) {
                    out += ' ';
                }
                out += num(ax.map(s.x[k])) + "," + num(ay.map(s.y[k]));
            }
            out += "\" stroke-width=\"2\"/>\n";
        }
        const double ly = kTop + 10 + 18 * static_cast<double>(i);
        out += "<line x1=\"" + num(x1 + 15) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(x1 + 40) + "\" y2=\"" +
               num(ly) + "\" stroke-width=\"2\"/>\n";
        out += "</g>\n";
        out += "<text x=\"" + num(x1 + 46) + "\" y=\"" + num(ly + 4) + "\">" + escape(s.name) + "</text>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

PlotSpec plot_from_csv(const CsvTable &table, PlotKind kind) {
    auto has = [&](std::string_view name) {
        return std::find(table.header().begin(), table.header().end(), name) != table.header().end();
    };
    auto number = [](const std::string &cell) {
        if (cell.empty()) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        try {
            std::size_t used = 0;
            const double v = std::stod(cell, &used);
            if (used != cell.size()) {
                throw std::invalid_argument("trailing characters");
            }
            return v;
        } catch (const std::exception &) {
            throw std::invalid_argument("plot: non-numeric cell '" + cell + "'");
        }
    };

    PlotSpec spec;
    if (kind == PlotKind::anneal) {
        spec.title = "Evolution order annealing";
        spec.x_label = "iteration";
        spec.y_label = "cost";
        const std::size_t c_iter = table.column("iter");
        if (has("mean_cost")) {
            for (const char *name : {"mean_cost", "mean_best_cost"}) {
                if (!has(name)) {
                    continue;
                }
                PlotSeries s{name, {}, {}};
                const std::size_t c = table.column(name);
                for (const auto &row : table.rows()) {
                    s.x.push_back(number(row[c_iter]));
                    s.y.push_back(number(row[c]));
                }
                spec.series.push_back(std::move(s));
            }
        } else {
            const std::size_t c_cost = table.column("cost");
            const bool per_trial = has("trial");
            std::map<std::string, PlotSeries> by_trial;
            std::vector<std::string> trial_order;
            for (const auto &row : table.rows()) {
                const std::string key = per_trial ? row[table.column("trial")] : "cost";
                if (!by_trial.count(key)) {
                    trial_order.push_back(key);
                    by_trial[key] = PlotSeries{per_trial ? "trial " + key : key, {}, {}};
                }
                by_trial[key].x.push_back(number(row[c_iter]));
                by_trial[key].y.push_back(number(row[c_cost]));
            }
            for (const auto &k : trial_order) {
                spec.series.push_back(std::move(by_trial[k]));
            }
        }
        return spec;
    }

    spec.title = "Trotter number by bound family";
    spec.x_label = "n";
    spec.y_label = "r*";
    spec.log_x = true;
    spec.log_y = true;
    const std::size_t c_family = table.column("family");
    const std::size_t c_n = table.column("n");
    const std::size_t c_r = table.column("r_star");
    std::map<std::string, std::size_t> index;
    for (const auto &row : table.rows()) {
        const auto &fam = row[c_family];
        if (!index.count(fam)) {
            index[fam] = spec.series.size();
            spec.series.push_back(PlotSeries{fam, {}, {}});
        }
        if (row[c_r].empty()) {
            continue;
        }
        auto &s = spec.series[index[fam]];
        s.x.push_back(number(row[c_n]));
        s.y.push_back(number(row[c_r]));
    }
    return spec;
}

std::string emit_plot(const CsvTable &table, PlotKind kind) {
    return render_svg(plot_from_csv(table, kind));
}

}  // namespace trotterobs
