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

#ifndef _CRDD_FORMAT_H
#define _CRDD_FORMAT_H

#include <string>

namespace crdd {

/// Round-trippable, locale-independent decimal text ("%.17g"; "inf"/"nan" for non-finite values).
std::string format_double(double v);

/// Parses text written by format_double. Throws std::invalid_argument on malformed input.
double parse_double(const std::string &text);

}  // namespace crdd

#endif
