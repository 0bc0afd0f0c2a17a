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

#ifndef _CRDD_SEQUENCE_JSON_H
#define _CRDD_SEQUENCE_JSON_H

#include "crdd/graph.h"
#include "crdd/sequence.h"
#include "json.hpp"

namespace crdd {

nlohmann::json shape_to_json(const PulseShape &shape);
PulseShape shape_from_json(const nlohmann::json &j);

nlohmann::json sequence_to_json(const Sequence &seq);
/// Throws std::invalid_argument naming the offending field.
Sequence sequence_from_json(const nlohmann::json &j);

nlohmann::json schedule_to_json(const ColoredSchedule &schedule);
ColoredSchedule schedule_from_json(const nlohmann::json &j);

nlohmann::json graph_to_json(const QubitGraph &graph);
QubitGraph graph_from_json(const nlohmann::json &j);

}  // namespace crdd

#endif
