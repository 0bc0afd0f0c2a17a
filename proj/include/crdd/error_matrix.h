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

#ifndef _CRDD_ERROR_MATRIX_H
#define _CRDD_ERROR_MATRIX_H

#include <Eigen/Dense>
#include <array>
#include <stdexcept>
#include <string_view>

#include "crdd/control.h"

namespace crdd {

enum class ErrorKind { one_local, two_local };

struct ErrorMatrix {
    ErrorKind kind = ErrorKind::one_local;
    /// chi1: rows mu, columns alpha. chi2: rows alpha (red), columns beta (blue). Seconds.
    Eigen::Matrix3d values = Eigen::Matrix3d::Zero();
    double duration = 0;

    double max_abs() const {
        return values.cwiseAbs().maxCoeff();
    }
};

struct GridMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

ErrorMatrix chi1(const ControlTrace &trace);
/// Integral of R_red^{Z alpha} R_blue^{Z beta}. Throws GridMismatchError unless both traces share a grid.
ErrorMatrix chi2(const ControlTrace &red, const ControlTrace &blue);

struct EntryVerdicts {
    ErrorMatrix chi;
    std::array<std::array<bool, 3>, 3> pass{};

    bool all_pass() const;
};

struct SuppressionReport {
    double tolerance = 0;
    double duration = 0;
    EntryVerdicts chi1_red;
    EntryVerdicts chi1_blue;
    EntryVerdicts chi2;
    /// Largest |entry| / duration over all three matrices.
    double max_residual = 0;

    /// Verdict on the two-local matrix, the quantity staggering is designed to cancel.
    bool passed() const {
        return chi2.all_pass();
    }
};

/// Evaluates chi1 per colour and chi2 for the red-blue pair against tol * tau_c.
SuppressionReport verify_first_order(const ColoredSchedule &schedule, int samples_per_pulse, double tol);
/// Synchronous schedule: the same sequence runs on both colours.
SuppressionReport verify_first_order(const Sequence &sequence, int samples_per_pulse, double tol);
SuppressionReport verify_first_order(const ControlTrace &red, const ControlTrace &blue, double tol);

}  // namespace crdd

#endif
