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

#include "trotterobs/scaling.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "trotterobs/errors.h"

namespace trotterobs {

ScalingFit fit_power_law(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size()) {
        throw DimensionError("scaling fit: x and y lengths differ");
    }
    if (x.size() < 3) {
        throw DomainError("scaling fit: need at least 3 points, got " + std::to_string(x.size()));
    }
    const std::size_t m = x.size();
    std::vector<double> lx(m), ly(m);
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (!(x[i] > 0) || !(y[i] > 0)) {
            throw DomainError("scaling fit: coordinates must be positive");
        }
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    if (sxx == 0) {
        throw DomainError("scaling fit: all x values coincide");
    }
    ScalingFit fit;
    fit.points = m;
    fit.exponent = sxy / sxx;
    fit.intercept = my - fit.exponent * mx;
    double ss_res = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double e = ly[i] - (fit.intercept + fit.exponent * lx[i]);
        ss_res += e * e;
    }
    fit.r_squared = syy == 0 ? 1.0 : 1.0 - ss_res / syy;
    return fit;
}

ScalingFit scaling_fit(const CsvTable &table, std::string_view family) {
    const std::size_t c_family = table.column("family");
    const std::size_t c_n = table.column("n");
    const std::size_t c_r = table.column("r_star");
    std::size_t c_status = table.header().size();
    for (std::size_t i = 0; i < table.header().size(); ++i) {
        if (table.header()[i] == "status") {
            c_status = i;
        }
    }
    std::vector<double> x, y;
    for (const auto &row : table.rows()) {
        if (row[c_family] != family) {
            continue;
        }
        if (c_status < row.size() && row[c_status] != "ok") {
            continue;
        }
        if (row[c_r].empty()) {
            continue;
        }
        try {
            x.push_back(std::stod(row[c_n]));
            y.push_back(std::stod(row[c_r]));
        } catch (const std::exception &) {
            throw std::invalid_argument("scaling fit: non-numeric n or r_star in row for " + std::string(family));
        }
    }
    return fit_power_law(x, y);
}

}  // namespace trotterobs
