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

#ifndef TROTTEROBS_SCALING_H
#define TROTTEROBS_SCALING_H

#include <cstddef>
#include <string_view>
#include <vector>

#include "trotterobs/csv.h"

namespace trotterobs {

struct ScalingFit {
    double exponent = 0;
    double intercept = 0;
    double r_squared = 0;
    std::size_t points = 0;
};

/// Least-squares line through (ln x, ln y). Needs at least 3 points with
/// positive coordinates and two distinct x values.
ScalingFit fit_power_law(const std::vector<double> &x, const std::vector<double> &y);

/// Power-law fit of r_star against n over the rows of `family` whose status
/// is ok, in a table shaped like comparison.csv.
ScalingFit scaling_fit(const CsvTable &table, std::string_view family);

}  // namespace trotterobs

#endif
