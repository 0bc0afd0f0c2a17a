// Copyright 2026 The crdd Authors
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

#ifndef _CRDD_STATS_H
#define _CRDD_STATS_H

#include <cstdint>
#include <span>
#include <vector>

namespace crdd {

/// Linear-interpolation quantile (Hyndman-Fan type 7) of sorted data.
double quantile_sorted(std::span<const double> sorted, double q);
double median(std::vector<double> values);
/// Q3 - Q1 with type-7 quantiles.
double iqr(std::vector<double> values);

struct BootstrapCI {
    double mean = 0;
    double lower = 0;
    double upper = 0;
    double level = 0;
    int resamples = 0;
};

/// Percentile bootstrap of the mean. Bounds are widened if needed so that lower <= mean <= upper.
BootstrapCI bootstrap_mean_ci(std::span<const double> samples, int resamples = 10000, double level = 0.95, uint64_t seed = 0);

}  // namespace crdd

#endif
