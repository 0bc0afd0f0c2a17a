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

#include "crdd/transforms.h"

#include <cmath>

namespace crdd {

std::string_view pad_mode_name(PadMode mode) {
    return mode == PadMode::symmetric ? "symmetric" : "asymmetric";
}

PadMode parse_pad_mode(std::string_view name) {
    if (name == "symmetric" || name == "S" || name == "s") {
        return PadMode::symmetric;
    }
    if (name == "asymmetric" || name == "A" || name == "a") {
        return PadMode::asymmetric;
    }
    throw std::invalid_argument("unknown padding mode '" + std::string(name) + "'");
}

LengthMismatchError::LengthMismatchError(size_t red_length, size_t blue_length)
    : std::invalid_argument(
          "phase list lengths differ: red has " + std::to_string(red_length) + ", blue has " +
          std::to_string(blue_length)),
      red_length(red_length),
      blue_length(blue_length) {
}

namespace {

void check_timing(double tau_p, double tau_d) {
    if (!(std::isfinite(tau_p) && tau_p > 0)) {
        throw std::invalid_argument("tau_p must be positive");
    }
    if (!(std::isfinite(tau_d) && tau_d >= 0)) {
        throw std::invalid_argument("tau_d must be non-negative");
    }
}

}  // namespace

Sequence sim_variant(
    std::span<const double> phases, double tau_p, double tau_d, const PulseShape &shape, std::string name) {
    check_timing(tau_p, tau_d);
    if (phases.empty()) {
        throw std::invalid_argument("phase list is empty");
    }
    Sequence seq{std::move(name), tau_p, shape, {}};
    for (double phi : phases) {
        append_pulse_window(seq.segments, phi, tau_p, shape);
        append_delay(seq.segments, tau_d);
    }
    seq.validate();
    return seq;
}

ColoredSchedule staggered(
    std::span<const double> red,
    std::span<const double> blue,
    double tau_p,
    double tau_d,
    PadMode mode,
    const PulseShape &shape) {
    check_timing(tau_p, tau_d);
    if (red.size() != blue.size()) {
        throw LengthMismatchError(red.size(), blue.size());
    }
    if (red.empty()) {
        throw std::invalid_argument("phase list is empty");
    }
    ColoredSchedule out{Sequence{"CR-R", tau_p, shape, {}}, Sequence{"CR-B", tau_p, shape, {}}};
    auto &r = out.red.segments;
    auto &b = out.blue.segments;
    for (size_t k = 0; k < red.size(); ++k) {
        if (mode == PadMode::symmetric) {
            append_delay(r, tau_d / 2 + tau_p + tau_d);
            append_pulse_window(r, red[k], tau_p, shape);
            append_delay(r, tau_d / 2);

            append_delay(b, tau_d / 2);
            append_pulse_window(b, blue[k], tau_p, shape);
            append_delay(b, tau_d + tau_p + tau_d / 2);
        } else {
            append_delay(r, tau_d + tau_p + tau_d);
            append_pulse_window(r, red[k], tau_p, shape);

            append_delay(b, tau_d);
            append_pulse_window(b, blue[k], tau_p, shape);
            append_delay(b, tau_d + tau_p);
        }
    }
    out.validate();
    return out;
}

ColoredSchedule cr_variant(
    std::span<const double> red, std::span<const double> blue, double tau_p, const PulseShape &shape) {
    return staggered(red, blue, tau_p, 0, PadMode::symmetric, shape);
}

ColoredSchedule pad(const ColoredSchedule &schedule, double tau_d, PadMode mode) {
    schedule.validate();
    auto red = schedule.red.phases();
    auto blue = schedule.blue.phases();
    double tau_p = schedule.red.tau_p_s;
    if (red.size() != blue.size()) {
        throw LengthMismatchError(red.size(), blue.size());
    }
    double expected = 2.0 * red.size() * tau_p;
    if (std::abs(schedule.duration() - expected) > 1e-9 * expected) {
        throw std::invalid_argument("pad expects an unpadded staggered schedule of duration 2*L*tau_p");
    }
    auto out = staggered(red, blue, tau_p, tau_d, mode, schedule.red.shape);
    out.red.name = schedule.red.name;
    out.blue.name = schedule.blue.name;
    return out;
}

std::vector<double> repeat_phases(std::span<const double> phases, size_t times) {
    std::vector<double> out;
    out.reserve(phases.size() * times);
    for (size_t k = 0; k < times; ++k) {
        out.insert(out.end(), phases.begin(), phases.end());
    }
    return out;
}

std::pair<std::vector<double>, std::vector<double>> match_lengths(
    std::span<const double> red, std::span<const double> blue) {
    size_t a = red.size();
    size_t b = blue.size();
    if (a == 0 || b == 0 || (a % b != 0 && b % a != 0)) {
        throw LengthMismatchError(a, b);
    }
    if (a >= b) {
        return {std::vector<double>(red.begin(), red.end()), repeat_phases(blue, a / b)};
    }
    return {repeat_phases(red, b / a), std::vector<double>(blue.begin(), blue.end())};
}

}  // namespace crdd
