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

#ifndef _CRDD_DECAY_FIT_H
#define _CRDD_DECAY_FIT_H

#include <array>
#include <optional>
#include <span>
#include <string_view>

namespace crdd {

struct DecayPoint {
    double t = 0;
    double p = 0;
};

enum class FitFlag { ok, degenerate, infinite_tau, not_converged };

std::string_view fit_flag_name(FitFlag f);
FitFlag parse_fit_flag(std::string_view name);

struct DecayParams {
    double amplitude = 0;
    double gamma = 0;
    double offset = 0;
};

struct FitResult {
    double amplitude = 0;
    /// Per second when t is in seconds.
    double gamma = 0;
    double offset = 0;
    double tau_gamma = 0;
    double rss = 0;
    /// Standard errors of (A, gamma, c); NaN when not identifiable.
    std::array<double, 3> std_error{};
    FitFlag flag = FitFlag::ok;
    int iterations = 0;
    /// Projected gradient norm of the scaled problem at exit.
    double gradient_norm = 0;

    DecayParams params() const {
        return {amplitude, gamma, offset};
    }
    double model(double t) const;
};

/// Bounded Levenberg-Marquardt fit of A exp(-gamma t) + c with A, c in [0, 1] and gamma >= 0.
/// Needs at least four points with non-negative, strictly increasing t. All-equal p gives a
/// degenerate fit with A = gamma = 0 and c = p. When start is given it replaces the default
/// initialisation.
FitResult fit_decay(std::span<const DecayPoint> points, std::optional<DecayParams> start = std::nullopt);

/// 1 / gamma, or +infinity when gamma is zero.
double characteristic_time(const FitResult &fit);

}  // namespace crdd

#endif
