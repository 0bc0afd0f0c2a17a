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

#ifndef _CRDD_SPLINE_H
#define _CRDD_SPLINE_H

#include <span>
#include <stdexcept>
#include <vector>

#include "crdd/decay_fit.h"

namespace crdd {

struct ExtrapolationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Interpolating cubic spline with zero second derivative at both ends.
class NaturalCubicSpline {
   public:
    /// Needs at least two knots with strictly increasing x.
    NaturalCubicSpline(std::vector<double> x, std::vector<double> y);

    double value(double t) const;
    /// Exact integral of the piecewise cubic over [a, b] within the knot range.
    double integral(double a, double b) const;
    double front() const {
        return x_.front();
    }
    double back() const {
        return x_.back();
    }

   private:
    size_t piece(double t) const;
    double antiderivative(size_t i, double t) const;

    std::vector<double> x_;
    std::vector<double> y_;
    /// Second derivatives at the knots.
    std::vector<double> m_;
};

/// (1 / T) * integral over [0, T] of the spline through the points, normalised by p(0).
/// The first point must be at t = 0 with p > 0. Throws ExtrapolationError when T lies
/// outside (0, t_last].
double time_avg_survival(std::span<const DecayPoint> points, double T);

}  // namespace crdd

#endif
