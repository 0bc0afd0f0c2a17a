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

#ifndef _CRDD_SYMMETRY_H
#define _CRDD_SYMMETRY_H

#include <array>
#include <string_view>
#include <vector>

#include "crdd/control.h"

namespace crdd {

enum class SymmetryRelation {
    displacement_symmetric = 0,
    displacement_antisymmetric = 1,
    mirror_symmetric = 2,
    mirror_antisymmetric = 3,
};

std::string_view relation_name(SymmetryRelation r);
constexpr std::array<SymmetryRelation, 4> kAllRelations = {
    SymmetryRelation::displacement_symmetric,
    SymmetryRelation::displacement_antisymmetric,
    SymmetryRelation::mirror_symmetric,
    SymmetryRelation::mirror_antisymmetric,
};

struct SymmetryEntry {
    Axis mu = Axis::x;
    Axis alpha = Axis::x;
    double tolerance = 0;
    /// Relative L2 residual per relation, indexed by SymmetryRelation.
    std::array<double, 4> residual{};
    std::array<bool, 4> flag{};
    bool identically_zero = false;

    bool has(SymmetryRelation r) const {
        return flag[(int)r];
    }
    double residual_of(SymmetryRelation r) const {
        return residual[(int)r];
    }
};

/// Residuals of R(t + T/2) = +-R(t) (periodic continuation) and R(T - t) = +-R(t) on the grid,
/// each normalised by the L2 norm of the component.
SymmetryEntry classify_symmetry(const ControlTrace &trace, Axis mu, Axis alpha, double tol = 1e-6);

/// All nine components in row-major order.
std::vector<SymmetryEntry> classify_all(const ControlTrace &trace, double tol = 1e-6);

}  // namespace crdd

#endif
