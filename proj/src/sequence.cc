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

#include "crdd/sequence.h"

#include <cmath>
#include <stdexcept>

namespace crdd {

Segment Segment::delay(double duration_s) {
    return Segment{SegmentKind::delay, duration_s, std::nullopt};
}

Segment Segment::make_pulse(const PulseSpec &spec) {
    return Segment{SegmentKind::pulse, spec.duration_s, spec};
}

double Sequence::duration() const {
    double total = 0;
    for (const auto &s : segments) {
        total += s.duration_s;
    }
    return total;
}

size_t Sequence::pulse_count() const {
    size_t n = 0;
    for (const auto &s : segments) {
        n += s.is_pulse();
    }
    return n;
}

std::vector<double> Sequence::phases() const {
    std::vector<double> out;
    for (const auto &s : segments) {
        if (s.is_pulse()) {
            out.push_back(s.pulse->phase_rad);
        }
    }
    return out;
}

std::vector<double> Sequence::boundaries() const {
    std::vector<double> out;
    out.reserve(segments.size() + 1);
    double t = 0;
    for (const auto &s : segments) {
        out.push_back(t);
        t += s.duration_s;
    }
    out.push_back(t);
    return out;
}

void Sequence::validate() const {
    if (!(std::isfinite(tau_p_s) && tau_p_s > 0)) {
        throw std::invalid_argument("sequence '" + name + "': tau_p_s must be positive");
    }
    shape.validate();
    for (size_t k = 0; k < segments.size(); ++k) {
        const auto &s = segments[k];
        if (!std::isfinite(s.duration_s) || s.duration_s < 0) {
            throw std::invalid_argument(
                "sequence '" + name + "': slot " + std::to_string(k) + " has a negative duration");
        }
        if (s.is_pulse() != s.pulse.has_value()) {
            throw std::invalid_argument("sequence '" + name + "': slot " + std::to_string(k) + " is malformed");
        }
        if (s.is_pulse()) {
            s.pulse->validate();
            if (s.pulse->duration_s != s.duration_s) {
                throw std::invalid_argument(
                    "sequence '" + name + "': slot " + std::to_string(k) + " duration disagrees with its pulse");
            }
        }
    }
    if (!(duration() > 0)) {
        throw std::invalid_argument("sequence '" + name + "': total duration must be positive");
    }
}

void ColoredSchedule::validate() const {
    red.validate();
    blue.validate();
    double a = red.duration();
    double b = blue.duration();
    if (std::abs(a - b) > 1e-9 * std::max(a, b)) {
        throw std::invalid_argument("colored schedule: red and blue cycle durations differ");
    }
}

void append_delay(std::vector<Segment> &out, double duration_s) {
    if (!(duration_s > 0)) {
        return;
    }
    if (!out.empty() && !out.back().is_pulse()) {
        out.back().duration_s += duration_s;
        return;
    }
    out.push_back(Segment::delay(duration_s));
}

void append_pulse_window(std::vector<Segment> &out, double phase, double tau_p, const PulseShape &shape) {
    if (shape.is_ideal()) {
        append_delay(out, tau_p / 2);
        out.push_back(Segment::make_pulse(PulseSpec{phase, std::numbers::pi, 0, shape}));
        append_delay(out, tau_p / 2);
        return;
    }
    out.push_back(Segment::make_pulse(PulseSpec{phase, std::numbers::pi, tau_p, shape}));
}

Sequence idle_sequence(double duration_s, double tau_p, std::string name) {
    Sequence seq{std::move(name), tau_p, PulseShape::square(), {}};
    append_delay(seq.segments, duration_s);
    seq.validate();
    return seq;
}

}  // namespace crdd
