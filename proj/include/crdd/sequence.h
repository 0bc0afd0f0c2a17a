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

#ifndef _CRDD_SEQUENCE_H
#define _CRDD_SEQUENCE_H

#include <optional>
#include <string>
#include <vector>

#include "crdd/pulse.h"

namespace crdd {

enum class SegmentKind { pulse, delay };

struct Segment {
    SegmentKind kind = SegmentKind::delay;
    double duration_s = 0;
    /// Present iff kind == pulse.
    std::optional<PulseSpec> pulse;

    static Segment delay(double duration_s);
    static Segment make_pulse(const PulseSpec &spec);

    bool is_pulse() const {
        return kind == SegmentKind::pulse;
    }
    bool operator==(const Segment &other) const = default;
};

/// A single-qubit control timeline. Segments are in temporal order (first applied first).
struct Sequence {
    std::string name;
    double tau_p_s = 0;
    PulseShape shape;
    std::vector<Segment> segments;

    double duration() const;
    size_t pulse_count() const;
    /// Pulse phases in temporal order.
    std::vector<double> phases() const;
    /// Start time of every segment followed by the total duration.
    std::vector<double> boundaries() const;
    /// Throws std::invalid_argument when a segment is malformed.
    void validate() const;
    bool operator==(const Sequence &other) const = default;
};

/// Sequences for the two colour classes of a bipartite device. Both share a cycle duration.
struct ColoredSchedule {
    Sequence red;
    Sequence blue;

    double duration() const {
        return red.duration();
    }
    void validate() const;
    bool operator==(const ColoredSchedule &other) const = default;
};

/// Builds a segment list for one nominal pulse window of length tau_p.
/// Bounded shapes fill the window. Ideal pulses sit at its centre with zero duration.
void append_pulse_window(std::vector<Segment> &out, double phase, double tau_p, const PulseShape &shape);

/// Appends a delay, merging with a trailing delay. Non-positive durations are dropped.
void append_delay(std::vector<Segment> &out, double duration_s);

/// Idle timeline of a given length.
Sequence idle_sequence(double duration_s, double tau_p, std::string name = "IDLE");

}  // namespace crdd

#endif
