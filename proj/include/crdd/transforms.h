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

#ifndef _CRDD_TRANSFORMS_H
#define _CRDD_TRANSFORMS_H

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crdd/sequence.h"

namespace crdd {

enum class PadMode { symmetric, asymmetric };

std::string_view pad_mode_name(PadMode mode);
PadMode parse_pad_mode(std::string_view name);

struct LengthMismatchError : std::invalid_argument {
    LengthMismatchError(size_t red_length, size_t blue_length);
    size_t red_length;
    size_t blue_length;
};

/// Simultaneous variant: every slot is (pulse, delay tau_d). Cycle length L*(tau_p + tau_d).
Sequence sim_variant(
    std::span<const double> phases, double tau_p, double tau_d, const PulseShape &shape, std::string name = "SIM");

/// Staggered variant: red slots are (delay tau_p, pulse) and blue slots (pulse, delay tau_p).
/// Cycle length 2*L*tau_p. Throws LengthMismatchError when the phase lists differ in length.
ColoredSchedule cr_variant(
    std::span<const double> red, std::span<const double> blue, double tau_p, const PulseShape &shape);

/// Staggered variant with interpulse padding tau_d. Cycle length 2*L*(tau_p + tau_d).
/// Equals cr_variant at tau_d = 0 for both modes.
ColoredSchedule staggered(
    std::span<const double> red,
    std::span<const double> blue,
    double tau_p,
    double tau_d,
    PadMode mode,
    const PulseShape &shape);

/// Re-pads an unpadded staggered schedule. Phases, tau_p and shape are taken from the input.
ColoredSchedule pad(const ColoredSchedule &schedule, double tau_d, PadMode mode);

std::vector<double> repeat_phases(std::span<const double> phases, size_t times);

/// Repeats the shorter list so both have equal length. Throws LengthMismatchError
/// when neither length divides the other.
std::pair<std::vector<double>, std::vector<double>> match_lengths(
    std::span<const double> red, std::span<const double> blue);

}  // namespace crdd

#endif
