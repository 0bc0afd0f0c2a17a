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

#include "crdd/symmetry.h"

#include <cmath>
#include <stdexcept>

namespace crdd {

std::string_view relation_name(SymmetryRelation r) {
    switch (r) {
        case SymmetryRelation::displacement_symmetric:
            return "displacement_symmetric";
        case SymmetryRelation::displacement_antisymmetric:
            return "displacement_antisymmetric";
        case SymmetryRelation::mirror_symmetric:
            return "mirror_symmetric";
        case SymmetryRelation::mirror_antisymmetric:
            return "mirror_antisymmetric";
    }
    throw std::invalid_argument("unknown symmetry relation");
}

namespace {

// Index of the interval starting at t, or -1.
int find_interval(const TimeGrid &grid, double t) {
    double tol = grid.tolerance();
    for (size_t i = 0; i < grid.intervals.size(); ++i) {
        if (std::abs(grid.intervals[i].start - t) <= tol) {
            return (int)i;
        }
    }
    return -1;
}

// Node permutation realising t -> image(t) on the grid.
std::vector<size_t> node_map(const TimeGrid &grid, bool mirror) {
    const auto &ivs = grid.intervals;
    std::vector<size_t> offset(ivs.size() + 1, 0);
    for (size_t i = 0; i < ivs.size(); ++i) {
        offset[i + 1] = offset[i] + ivs[i].steps + 1;
    }
    double half = grid.duration / 2;
    double tol = grid.tolerance();
    std::vector<size_t> out(offset.back());
    for (size_t i = 0; i < ivs.size(); ++i) {
        double target;
        if (mirror) {
            target = grid.duration - ivs[i].start - ivs[i].length;
        } else {
            target = ivs[i].start + half;
            if (target >= grid.duration - tol) {
                target -= grid.duration;
            }
        }
        int j = find_interval(grid, std::max(target, 0.0));
        if (j < 0 || ivs[j].steps != ivs[i].steps) {
            throw std::invalid_argument("grid is not closed under the symmetry map");
        }
        for (int k = 0; k <= ivs[i].steps; ++k) {
            out[offset[i] + k] = offset[j] + (mirror ? ivs[i].steps - k : k);
        }
    }
    return out;
}

}  // namespace

SymmetryEntry classify_symmetry(const ControlTrace &trace, Axis mu, Axis alpha, double tol) {
    const TimeGrid &grid = trace.grid;
    auto f = trace.component(mu, alpha);
    SymmetryEntry e;
    e.mu = mu;
    e.alpha = alpha;
    e.tolerance = tol;

    std::vector<double> sq(f.size());
    for (size_t k = 0; k < f.size(); ++k) {
        sq[k] = f[k] * f[k];
    }
    double norm = std::sqrt(simpson(grid, sq));
    double peak = 0;
    for (double v : f) {
        peak = std::max(peak, std::abs(v));
    }
    if (peak <= 1e-12) {
        e.identically_zero = true;
        e.flag = {true, true, true, true};
        return e;
    }
    for (bool mirror : {false, true}) {
        auto map = node_map(grid, mirror);
        for (int sign : {-1, +1}) {
            for (size_t k = 0; k < f.size(); ++k) {
                double d = f[map[k]] + sign * f[k];
                sq[k] = d * d;
            }
            int idx = (mirror ? 2 : 0) + (sign > 0 ? 1 : 0);
            e.residual[idx] = std::sqrt(simpson(grid, sq)) / norm;
            e.flag[idx] = e.residual[idx] <= tol;
        }
    }
    return e;
}

std::vector<SymmetryEntry> classify_all(const ControlTrace &trace, double tol) {
    std::vector<SymmetryEntry> out;
    for (int mu = 0; mu < 3; ++mu) {
        for (int alpha = 0; alpha < 3; ++alpha) {
            out.push_back(classify_symmetry(trace, (Axis)mu, (Axis)alpha, tol));
        }
    }
    return out;
}

}  // namespace crdd
