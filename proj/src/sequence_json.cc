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

#include "crdd/sequence_json.h"

#include <numbers>
#include <stdexcept>

namespace crdd {

using nlohmann::json;

namespace {

const json &field(const json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        throw std::invalid_argument(std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

double number(const json &j, const char *name) {
    const json &v = field(j, name);
    if (!v.is_number()) {
        throw std::invalid_argument(std::string("field '") + name + "' must be a number");
    }
    return v.get<double>();
}

std::string text(const json &j, const char *name) {
    const json &v = field(j, name);
    if (!v.is_string()) {
        throw std::invalid_argument(std::string("field '") + name + "' must be a string");
    }
    return v.get<std::string>();
}

}  // namespace

json shape_to_json(const PulseShape &shape) {
    json j;
    j["kind"] = std::string(shape_kind_name(shape.kind));
    if (shape.sigma_s.has_value()) {
        j["sigma_s"] = *shape.sigma_s;
    }
    if (shape.kind == ShapeKind::drag) {
        j["drag_coefficient"] = shape.drag_coefficient;
    }
    return j;
}

PulseShape shape_from_json(const json &j) {
    PulseShape shape;
    shape.kind = parse_shape_kind(text(j, "kind"));
    if (j.contains("sigma_s") && !j["sigma_s"].is_null()) {
        shape.sigma_s = number(j, "sigma_s");
    }
    shape.drag_coefficient = shape.kind == ShapeKind::drag ? 0.5 : 0;
    if (j.contains("drag_coefficient") && !j["drag_coefficient"].is_null()) {
        shape.drag_coefficient = number(j, "drag_coefficient");
    }
    shape.validate();
    return shape;
}

json sequence_to_json(const Sequence &seq) {
    json slots = json::array();
    for (const auto &s : seq.segments) {
        json slot;
        slot["kind"] = s.is_pulse() ? "pulse" : "delay";
        slot["duration_s"] = s.duration_s;
        if (s.is_pulse()) {
            slot["phase_rad"] = s.pulse->phase_rad;
            if (s.pulse->flip_angle_rad != std::numbers::pi) {
                slot["flip_angle_rad"] = s.pulse->flip_angle_rad;
            }
        }
        slots.push_back(slot);
    }
    return json{{"name", seq.name}, {"tau_p_s", seq.tau_p_s}, {"shape", shape_to_json(seq.shape)}, {"slots", slots}};
}

Sequence sequence_from_json(const json &j) {
    Sequence seq;
    seq.name = j.contains("name") ? text(j, "name") : "";
    seq.tau_p_s = number(j, "tau_p_s");
    seq.shape = shape_from_json(field(j, "shape"));
    const json &slots = field(j, "slots");
    if (!slots.is_array()) {
        throw std::invalid_argument("field 'slots' must be an array");
    }
    for (const auto &slot : slots) {
        std::string kind = text(slot, "kind");
        double duration = number(slot, "duration_s");
        if (kind == "delay") {
            seq.segments.push_back(Segment::delay(duration));
        } else if (kind == "pulse") {
            PulseSpec spec{number(slot, "phase_rad"), std::numbers::pi, duration, seq.shape};
            if (slot.contains("flip_angle_rad")) {
                spec.flip_angle_rad = number(slot, "flip_angle_rad");
            }
            seq.segments.push_back(Segment::make_pulse(spec));
        } else {
            throw std::invalid_argument("field 'kind' must be \"pulse\" or \"delay\"");
        }
    }
    seq.validate();
    return seq;
}

json schedule_to_json(const ColoredSchedule &schedule) {
    return json{{"red", sequence_to_json(schedule.red)}, {"blue", sequence_to_json(schedule.blue)}};
}

ColoredSchedule schedule_from_json(const json &j) {
    ColoredSchedule out{sequence_from_json(field(j, "red")), sequence_from_json(field(j, "blue"))};
    out.validate();
    return out;
}

json graph_to_json(const QubitGraph &graph) {
    json edges = json::array();
    for (auto [u, v] : graph.edges) {
        edges.push_back(json::array({u, v}));
    }
    json j{{"n", graph.n}, {"edges", edges}};
    if (graph.coloring.has_value()) {
        json c = json::array();
        for (Color col : *graph.coloring) {
            c.push_back(std::string(1, color_letter(col)));
        }
        j["coloring"] = c;
    }
    return j;
}

QubitGraph graph_from_json(const json &j) {
    QubitGraph g;
    const json &n = field(j, "n");
    if (!n.is_number_integer()) {
        throw std::invalid_argument("field 'n' must be an integer");
    }
    g.n = n.get<int>();
    const json &edges = field(j, "edges");
    if (!edges.is_array()) {
        throw std::invalid_argument("field 'edges' must be an array");
    }
    for (const auto &e : edges) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw std::invalid_argument("field 'edges' must hold [u, v] integer pairs");
        }
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("coloring") && !j["coloring"].is_null()) {
        g.coloring.emplace();
        for (const auto &c : j["coloring"]) {
            if (c == "R") {
                g.coloring->push_back(Color::red);
            } else if (c == "B") {
                g.coloring->push_back(Color::blue);
            } else {
                throw std::invalid_argument("field 'coloring' entries must be \"R\" or \"B\"");
            }
        }
    }
    g.validate();
    return g;
}

}  // namespace crdd
