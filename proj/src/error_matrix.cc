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

#include "crdd/error_matrix.h"

#include <algorithm>

namespace crdd {

ErrorMatrix chi1(const ControlTrace &trace) {
    ErrorMatrix out{ErrorKind::one_local, Eigen::Matrix3d::Zero(), trace.duration()};
    for (int mu = 0; mu < 3; ++mu) {
        for (int alpha = 0; alpha < 3; ++alpha) {
            out.values(mu, alpha) = simpson(trace.grid, trace.component((Axis)mu, (Axis)alpha));
        }
    }
    return out;
}

ErrorMatrix chi2(const ControlTrace &red, const ControlTrace &blue) {
    if (!(red.grid == blue.grid)) {
        throw GridMismatchError("chi2 needs both traces on an identical grid");
    }
    ErrorMatrix out{ErrorKind::two_local, Eigen::Matrix3d::Zero(), red.duration()};
    std::vector<double> product(red.grid.node_count());
    for (int alpha = 0; alpha < 3; ++alpha) {
        auto r = red.component(Axis::z, (Axis)alpha);
        for (int beta = 0; beta < 3; ++beta) {
            auto b = blue.component(Axis::z, (Axis)beta);
            for (size_t k = 0; k < product.size(); ++k) {
                product[k] = r[k] * b[k];
            }
            out.values(alpha, beta) = simpson(red.grid, product);
        }
    }
    return out;
}

bool EntryVerdicts::all_pass() const {
    for (const auto &row : pass) {
        for (bool p : row) {
            if (!p) {
                return false;
            }
        }
    }
    return true;
}

namespace {

EntryVerdicts judge(const ErrorMatrix &chi, double bound) {
    EntryVerdicts v{chi, {}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            v.pass[i][j] = std::abs(chi.values(i, j)) <= bound;
        }
    }
    return v;
}

}  // namespace

SuppressionReport verify_first_order(const ControlTrace &red, const ControlTrace &blue, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    double tau_c = red.duration();
    double bound = tol * tau_c;
    SuppressionReport rep;
    rep.tolerance = tol;
    rep.duration = tau_c;
    rep.chi1_red = judge(chi1(red), bound);
    rep.chi1_blue = judge(chi1(blue), bound);
    rep.chi2 = judge(chi2(red, blue), bound);
    rep.max_residual =
        std::max({rep.chi1_red.chi.max_abs(), rep.chi1_blue.chi.max_abs(), rep.chi2.chi.max_abs()}) / tau_c;
    return rep;
}

SuppressionReport verify_first_order(const ColoredSchedule &schedule, int samples_per_pulse, double tol) {
    schedule.validate();
    const Sequence *both[] = {&schedule.red, &schedule.blue};
    TimeGrid grid = TimeGrid::build(both, samples_per_pulse);
    return verify_first_order(control_trace(schedule.red, grid), control_trace(schedule.blue, grid), tol);
}

SuppressionReport verify_first_order(const Sequence &sequence, int samples_per_pulse, double tol) {
    ControlTrace t = control_trace(sequence, samples_per_pulse);
    return verify_first_order(t, t, tol);
}

}  // namespace crdd
