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

#include "crdd/pulse.h"

#include <cmath>
#include <stdexcept>

namespace crdd {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

double gaussian_norm(double sigma, double tau_p) {
    // Integral of exp(-(t - tau_p/2)^2 / (2 sigma^2)) over [0, tau_p].
    return sigma * std::sqrt(2 * std::numbers::pi) * std::erf(tau_p / (2 * kSqrt2 * sigma));
}

}  // namespace

std::string_view shape_kind_name(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::ideal:
            return "ideal";
        case ShapeKind::square:
            return "square";
        case ShapeKind::gaussian:
            return "gaussian";
        case ShapeKind::drag:
            return "drag";
    }
    throw std::invalid_argument("unknown shape kind");
}

ShapeKind parse_shape_kind(std::string_view name) {
    if (name == "ideal") {
        return ShapeKind::ideal;
    }
    if (name == "square") {
        return ShapeKind::square;
    }
    if (name == "gaussian") {
        return ShapeKind::gaussian;
    }
    if (name == "drag" || name == "gaussian_drag") {
        return ShapeKind::drag;
    }
    throw std::invalid_argument("unknown pulse shape '" + std::string(name) + "'");
}

PulseShape PulseShape::ideal() {
    return PulseShape{ShapeKind::ideal, std::nullopt, 0};
}

PulseShape PulseShape::square() {
    return PulseShape{ShapeKind::square, std::nullopt, 0};
}

PulseShape PulseShape::gaussian(std::optional<double> sigma_s) {
    return PulseShape{ShapeKind::gaussian, sigma_s, 0};
}

PulseShape PulseShape::drag(double coefficient, std::optional<double> sigma_s) {
    return PulseShape{ShapeKind::drag, sigma_s, coefficient};
}

double PulseShape::sigma_for(double tau_p) const {
    return sigma_s.value_or(tau_p / 4);
}

void PulseShape::validate() const {
    if (sigma_s.has_value() && !(std::isfinite(*sigma_s) && *sigma_s > 0)) {
        throw std::invalid_argument("pulse shape sigma_s must be positive and finite");
    }
    if (!std::isfinite(drag_coefficient)) {
        throw std::invalid_argument("pulse shape drag_coefficient must be finite");
    }
}

void PulseSpec::validate() const {
    shape.validate();
    if (!std::isfinite(phase_rad) || !std::isfinite(flip_angle_rad)) {
        throw std::invalid_argument("pulse phase and flip angle must be finite");
    }
    if (!std::isfinite(duration_s) || duration_s < 0) {
        throw std::invalid_argument("pulse duration must be non-negative and finite");
    }
    if (shape.is_ideal() != (duration_s == 0)) {
        throw std::invalid_argument("ideal pulses have zero duration and bounded pulses positive duration");
    }
}

Quadratures envelope_amplitude(const PulseShape &shape, double flip_angle, double tau_p, double t) {
    if (shape.is_ideal()) {
        throw std::invalid_argument("envelope_amplitude is undefined for ideal pulses");
    }
    if (!(tau_p > 0)) {
        throw std::invalid_argument("tau_p must be positive");
    }
    if (t < 0 || t > tau_p) {
        return {};
    }
    if (shape.kind == ShapeKind::square) {
        return {flip_angle / tau_p, 0};
    }
    double sigma = shape.sigma_for(tau_p);
    double u = t - tau_p / 2;
    double g = std::exp(-u * u / (2 * sigma * sigma));
    double in_phase = flip_angle * g / gaussian_norm(sigma, tau_p);
    if (shape.kind == ShapeKind::gaussian) {
        return {in_phase, 0};
    }
    double derivative = -u / (sigma * sigma) * in_phase;
    return {in_phase, shape.drag_coefficient * sigma * derivative};
}

double envelope_area(const PulseShape &shape, double flip_angle, double tau_p, double t) {
    if (shape.is_ideal()) {
        throw std::invalid_argument("envelope_area is undefined for ideal pulses");
    }
    if (t <= 0) {
        return 0;
    }
    if (t >= tau_p) {
        return flip_angle;
    }
    if (shape.kind == ShapeKind::square) {
        return flip_angle * t / tau_p;
    }
    double sigma = shape.sigma_for(tau_p);
    double edge = std::erf(tau_p / (2 * kSqrt2 * sigma));
    double here = std::erf((t - tau_p / 2) / (kSqrt2 * sigma));
    return flip_angle * (here + edge) / (2 * edge);
}

}  // namespace crdd
