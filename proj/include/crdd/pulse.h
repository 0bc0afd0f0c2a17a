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

#ifndef _CRDD_PULSE_H
#define _CRDD_PULSE_H

#include <numbers>
#include <optional>
#include <string>
#include <string_view>

namespace crdd {

enum class ShapeKind { ideal, square, gaussian, drag };

std::string_view shape_kind_name(ShapeKind kind);
/// Accepts "ideal", "square", "gaussian", "drag" (also "gaussian_drag").
ShapeKind parse_shape_kind(std::string_view name);

struct PulseShape {
    ShapeKind kind = ShapeKind::square;
    /// Gaussian standard deviation in seconds. Unset means a quarter of the pulse duration.
    std::optional<double> sigma_s;
    /// Quadrature weight: omega_Q = drag_coefficient * sigma * d(omega_I)/dt.
    double drag_coefficient = 0.5;

    static PulseShape ideal();
    static PulseShape square();
    static PulseShape gaussian(std::optional<double> sigma_s = std::nullopt);
    static PulseShape drag(double coefficient = 0.5, std::optional<double> sigma_s = std::nullopt);

    bool is_ideal() const {
        return kind == ShapeKind::ideal;
    }
    double sigma_for(double tau_p) const;
    /// Throws std::invalid_argument on non-positive widths or non-finite values.
    void validate() const;
    bool operator==(const PulseShape &other) const = default;
};

struct PulseSpec {
    double phase_rad = 0;
    double flip_angle_rad = std::numbers::pi;
    /// Nominal window; zero-duration segments are only allowed for ideal shapes.
    double duration_s = 0;
    PulseShape shape;

    void validate() const;
    bool operator==(const PulseSpec &other) const = default;
};

struct Quadratures {
    double in_phase = 0;
    double quadrature = 0;
};

/// Rabi-rate components in the pulse frame at local time t in [0, tau_p].
/// The in-phase envelope integrates to flip_angle over the window.
/// Outside the window both components are zero. Not defined for ideal pulses.
Quadratures envelope_amplitude(const PulseShape &shape, double flip_angle, double tau_p, double t);

/// Integral of the in-phase component from 0 to t.
double envelope_area(const PulseShape &shape, double flip_angle, double tau_p, double t);

}  // namespace crdd

#endif
