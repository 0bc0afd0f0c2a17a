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

#include "crdd/graph.h"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace crdd {

char color_letter(Color c) {
    return c == Color::red ? 'R' : 'B';
}

void QubitGraph::validate() const {
    if (n < 0) {
        throw std::invalid_argument("graph vertex count must be non-negative");
    }
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument(
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is out of range for n=" +
                std::to_string(n));
        }
        if (u == v) {
            throw std::invalid_argument("self loop at vertex " + std::to_string(u));
        }
        if (!seen.insert(std::minmax(u, v)).second) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
    }
    if (coloring.has_value() && (int)coloring->size() != n) {
        throw std::invalid_argument("coloring length does not match vertex count");
    }
}

std::vector<std::vector<int>> QubitGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto &a : adj) {
        std::sort(a.begin(), a.end());
    }
    return adj;
}

QubitGraph QubitGraph::induced(std::span<const int> vertices) const {
    std::vector<int> index(n, -1);
    for (size_t k = 0; k < vertices.size(); ++k) {
        int v = vertices[k];
        if (v < 0 || v >= n || index[v] >= 0) {
            throw std::invalid_argument("induced subgraph vertex list is invalid");
        }
        index[v] = (int)k;
    }
    QubitGraph out;
    out.n = (int)vertices.size();
    for (auto [u, v] : edges) {
        if (index[u] >= 0 && index[v] >= 0) {
            out.edges.emplace_back(index[u], index[v]);
        }
    }
    if (coloring.has_value()) {
        out.coloring.emplace();
        for (int v : vertices) {
            out.coloring->push_back((*coloring)[v]);
        }
    }
    return out;
}

NotBipartiteError::NotBipartiteError(std::vector<int> cycle_in)
    : std::invalid_argument([&] {
          std::string msg = "graph is not bipartite; odd cycle:";
          for (int v : cycle_in) {
              msg += " " + std::to_string(v);
          }
          return msg;
      }()),
      cycle(std::move(cycle_in)) {
}

QubitGraph two_color(const QubitGraph &graph) {
    graph.validate();
    auto adj = graph.adjacency();
    std::vector<int> side(graph.n, -1);
    std::vector<int> parent(graph.n, -1);
    std::vector<int> depth(graph.n, 0);
    for (int root = 0; root < graph.n; ++root) {
        if (side[root] >= 0) {
            continue;
        }
        side[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    // Walk both tree paths up to their common ancestor.
                    std::vector<int> left{u};
                    std::vector<int> right{v};
                    int a = u;
                    int b = v;
                    while (depth[a] > depth[b]) {
                        a = parent[a];
                        left.push_back(a);
                    }
                    while (depth[b] > depth[a]) {
                        b = parent[b];
                        right.push_back(b);
                    }
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    right.pop_back();
                    left.insert(left.end(), right.rbegin(), right.rend());
                    throw NotBipartiteError(std::move(left));
                }
            }
        }
    }
    QubitGraph out = graph;
    out.coloring.emplace();
    for (int s : side) {
        out.coloring->push_back(s == 0 ? Color::red : Color::blue);
    }
    return out;
}

bool is_proper_coloring(const QubitGraph &graph) {
    if (!graph.coloring.has_value() || (int)graph.coloring->size() != graph.n) {
        return false;
    }
    for (auto [u, v] : graph.edges) {
        if ((*graph.coloring)[u] == (*graph.coloring)[v]) {
            return false;
        }
    }
    return true;
}

}  // namespace crdd
