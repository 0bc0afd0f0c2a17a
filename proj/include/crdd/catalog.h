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

#ifndef _CRDD_CATALOG_H
#define _CRDD_CATALOG_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crdd/sequence.h"

namespace crdd {

struct UnknownSequenceError : std::invalid_argument {
    explicit UnknownSequenceError(const std::string &name);
};

/// Names accepted by catalog_phases, in canonical spelling.
const std::vector<std::string> &catalog_names();

/// Canonical spelling for a case-insensitive catalog name.
std::string canonical_name(std::string_view name);

/// Pulse phases of a catalog sequence in temporal order.
std::vector<double> catalog_phases(std::string_view name);

/// Back-to-back pulses of a catalog sequence with no interpulse delay.
Sequence build_named(std::string_view name, double tau_p, const PulseShape &shape);

}  // namespace crdd

#endif
