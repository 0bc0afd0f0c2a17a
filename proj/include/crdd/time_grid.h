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

#ifndef _CRDD_TIME_GRID_H
#define _CRDD_TIME_GRID_H

#include <span>
#include <vector>

#include "crdd/sequence.h"

namespace crdd {

/// A stretch between consecutive breakpoints, split into an even number of equal steps.
struct GridInterval {
    double start = 0;
    double length = 0;
    int steps = 0;

    double step() const {
        return length / steps;
    }
    double time(int k) const {
        return start + length * k / steps;
    }
    bool operator==(const GridInterval &other) const = default;
};

/// Piecewise-uniform time grid over one cycle.
///
/// Breakpoints are the union of segment boundaries of all given sequences, closed under
/// t -> t + T/2 (mod T) and t -> T - t so that symmetry relations map nodes onto nodes.
/// Each interval gets an even step count with step length as close to tau_p/S as possible
/// without exceeding it.
struct TimeGrid {
    int samples_per_pulse = 0;
    double duration = 0;
    double base_step = 0;
    std::vector<GridInterval> intervals;

    /// Throws std::invalid_argument when S < 16 or the sequences disagree on duration.
    static TimeGrid build(std::span<const Sequence *const> sequences, int samples_per_pulse);
    static TimeGrid build(const Sequence &sequence, int samples_per_pulse);

    size_t node_count() const;
    /// All node times in order; interior breakpoints appear twice (end of one interval, start of the next).
    std::vector<double> node_times() const;
    /// Breakpoint tolerance used for snapping.
    double tolerance() const {
        return 1e-6 * base_step;
    }
    bool operator==(const TimeGrid &other) const = default;
};

/// Composite Simpson integral of per-node samples laid out as in TimeGrid::node_times.
double simpson(const TimeGrid &grid, std::span<const double> samples);

}  // namespace crdd

#endif
