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

#ifndef _CRDD_GRAPH_H
#define _CRDD_GRAPH_H

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace crdd {

enum class Color { red, blue };

char color_letter(Color c);

struct QubitGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::optional<std::vector<Color>> coloring;

    /// Rejects out-of-range endpoints, self loops and duplicate edges.
    void validate() const;
    /// Sorted neighbour lists.
    std::vector<std::vector<int>> adjacency() const;
    /// Subgraph on the given vertices, relabelled 0..k-1 in the given order. Coloring is carried over.
    QubitGraph induced(std::span<const int> vertices) const;
    bool operator==(const QubitGraph &other) const = default;
};

struct NotBipartiteError : std::invalid_argument {
    explicit NotBipartiteError(std::vector<int> cycle);
    /// Vertices of an odd cycle, in order around the cycle.
    std::vector<int> cycle;
};

/// Proper two-colouring by breadth-first search. Components are visited in order of their
/// smallest vertex, which is coloured red. Any existing coloring on the input is ignored.
QubitGraph two_color(const QubitGraph &graph);

/// True when every edge joins vertices of different colours.
bool is_proper_coloring(const QubitGraph &graph);

}  // namespace crdd

#endif
