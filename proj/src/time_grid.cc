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

#include "crdd/time_grid.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crdd {

TimeGrid TimeGrid::build(std::span<const Sequence *const> sequences, int samples_per_pulse) {
    if (samples_per_pulse < 16) {
        throw std::invalid_argument("samples per pulse must be at least 16");
    }
    if (sequences.empty()) {
        throw std::invalid_argument("time grid needs at least one sequence");
    }
    double duration = sequences[0]->duration();
    double tau_p = sequences[0]->tau_p_s;
    for (const Sequence *s : sequences) {
        if (std::abs(s->duration() - duration) > 1e-9 * duration) {
            throw std::invalid_argument("sequences on a shared grid must have equal durations");
        }
        tau_p = std::min(tau_p, s->tau_p_s);
    }

    TimeGrid grid;
    grid.samples_per_pulse = samples_per_pulse;
    grid.duration = duration;
    grid.base_step = tau_p / samples_per_pulse;
    double tol = grid.tolerance();

    std::vector<double> points;
    auto add = [&](double t) {
        if (t < tol) {
            t = 0;
        } else if (t > duration - tol) {
            t = duration;
        }
        points.push_back(t);
    };
    double half = duration / 2;
    for (const Sequence *s : sequences) {
        for (double b : s->boundaries()) {
            add(b);
            add(duration - b);
            add(b < half ? b + half : b - half);
            double m = duration - b;
            add(m < half ? m + half : m - half);
        }
    }
    add(0);
    add(duration);
    add(half);
    std::sort(points.begin(), points.end());
    std::vector<double> merged;
    for (double p : points) {
        if (merged.empty() || p - merged.back() > tol) {
            merged.push_back(p);
        }
    }
    merged.back() = duration;

    for (size_t k = 0; k + 1 < merged.size(); ++k) {
        double len = merged[k + 1] - merged[k];
        int steps = (int)std::ceil(len / grid.base_step - 1e-6);
        steps = std::max(steps, 2);
        steps += steps % 2;
        grid.intervals.push_back({merged[k], len, steps});
    }
    return grid;
}

TimeGrid TimeGrid::build(const Sequence &sequence, int samples_per_pulse) {
    const Sequence *one[] = {&sequence};
    return build(one, samples_per_pulse);
}

size_t TimeGrid::node_count() const {
    size_t n = 0;
    for (const auto &iv : intervals) {
        n += iv.steps + 1;
    }
    return n;
}

std::vector<double> TimeGrid::node_times() const {
    std::vector<double> out;
    out.reserve(node_count());
    for (const auto &iv : intervals) {
        for (int k = 0; k <= iv.steps; ++k) {
            out.push_back(iv.time(k));
        }
    }
    return out;
}

double simpson(const TimeGrid &grid, std::span<const double> samples) {
    if (samples.size() != grid.node_count()) {
        throw std::invalid_argument("sample count does not match the grid");
    }
    double total = 0;
    size_t base = 0;
    for (const auto &iv : grid.intervals) {
        double acc = samples[base] + samples[base + iv.steps];
        for (int k = 1; k < iv.steps; ++k) {
            acc += (k % 2 ? 4 : 2) * samples[base + k];
        }
        total += acc * iv.step() / 3;
        base += iv.steps + 1;
    }
    return total;
}

}  // namespace crdd
