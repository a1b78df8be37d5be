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

#ifndef TROTTEROBS_SVG_PLOT_H
#define TROTTEROBS_SVG_PLOT_H

#include <string>
#include <string_view>
#include <vector>

#include "trotterobs/csv.h"

namespace trotterobs {

enum class PlotKind { anneal, compare };

PlotKind parse_plot_kind(std::string_view name);

struct PlotSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    std::vector<PlotSeries> series;
};

/// Standalone SVG built from svg, g, path, polyline, text and line elements.
/// Points with non-positive coordinates on a log axis are dropped; with no
/// points left the axes carry a "no data" label.
std::string render_svg(const PlotSpec &spec);

/// anneal: cost against iteration (mean_cost / mean_best_cost columns of a
/// mean curve, or cost per trial of a trace table).
/// compare: r_star against n on log-log axes, one series per family.
PlotSpec plot_from_csv(const CsvTable &table, PlotKind kind);

std::string emit_plot(const CsvTable &table, PlotKind kind);

}  // namespace trotterobs

#endif
