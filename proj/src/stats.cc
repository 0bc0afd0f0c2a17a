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

#include "crdd/stats.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "crdd/rng.h"

namespace crdd {

double quantile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty()) {
        throw std::invalid_argument("quantile of empty data");
    }
    double h = (sorted.size() - 1) * q;
    size_t lo = (size_t)std::floor(h);
    size_t hi = std::min(lo + 1, sorted.size() - 1);
    // Equal neighbours short-circuit so infinite samples (unbounded tau) do not produce NaN.
    if (h == (double)lo || sorted[hi] == sorted[lo]) {
        return sorted[lo];
    }
    return sorted[lo] + (h - lo) * (sorted[hi] - sorted[lo]);
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    return quantile_sorted(values, 0.5);
}

double iqr(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    return quantile_sorted(values, 0.75) - quantile_sorted(values, 0.25);
}

BootstrapCI bootstrap_mean_ci(std::span<const double> samples, int resamples, double level, uint64_t seed) {
    if (samples.size() < 2) {
        throw std::invalid_argument("bootstrap needs at least 2 samples");
    }
    if (resamples < 1 || !(level > 0 && level < 1)) {
        throw std::invalid_argument("bootstrap needs resamples >= 1 and level in (0, 1)");
    }
    size_t n = samples.size();
    double sum = 0;
    for (double x : samples) {
        sum += x;
    }
    BootstrapCI ci;
    ci.mean = sum / n;
    ci.level = level;
    ci.resamples = resamples;
    std::mt19937_64 rng(seed);
    std::vector<double> means(resamples);
    for (int r = 0; r < resamples; ++r) {
        double s = 0;
        for (size_t k = 0; k < n; ++k) {
            s += samples[uniform_index(rng, n)];
        }
        means[r] = s / n;
    }
    std::sort(means.begin(), means.end());
    ci.lower = std::min(quantile_sorted(means, (1 - level) / 2), ci.mean);
    ci.upper = std::max(quantile_sorted(means, (1 + level) / 2), ci.mean);
    return ci;
}

}  // namespace crdd
