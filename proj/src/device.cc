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

#include "crdd/device.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "crdd/rng.h"
#include "crdd/sequence_json.h"

namespace crdd {

void DeviceModel::validate() const {
    graph.validate();
    if (coupling.size() != graph.edges.size()) {
        throw std::invalid_argument("device needs one coupling per edge");
    }
    if ((int)local_field.size() != graph.n) {
        throw std::invalid_argument("device needs one local field per qubit");
    }
    for (double j : coupling) {
        if (!std::isfinite(j)) {
            throw std::invalid_argument("device couplings must be finite");
        }
    }
    for (const auto &b : local_field) {
        for (double x : b) {
            if (!std::isfinite(x)) {
                throw std::invalid_argument("device local fields must be finite");
            }
        }
    }
    if (!(std::isfinite(tau_p_s) && tau_p_s > 0)) {
        throw std::invalid_argument("device tau_p_s must be positive");
    }
}

DeviceModel DeviceModel::restricted_to(std::span<const int> vertices) const {
    DeviceModel out;
    out.graph = graph.induced(vertices);
    out.tau_p_s = tau_p_s;
    std::vector<int> index(graph.n, -1);
    for (size_t k = 0; k < vertices.size(); ++k) {
        index[vertices[k]] = (int)k;
    }
    for (size_t e = 0; e < graph.edges.size(); ++e) {
        auto [u, v] = graph.edges[e];
        if (index[u] >= 0 && index[v] >= 0) {
            out.coupling.push_back(coupling[e]);
        }
    }
    for (int v : vertices) {
        out.local_field.push_back(local_field[v]);
    }
    return out;
}

DeviceModel path_device(int n, uint64_t seed, double tau_p, double j_tau_p, double field_fraction) {
    if (n < 1) {
        throw std::invalid_argument("path device needs at least one qubit");
    }
    DeviceModel d;
    d.tau_p_s = tau_p;
    d.graph.n = n;
    double j = j_tau_p / tau_p;
    for (int v = 0; v + 1 < n; ++v) {
        d.graph.edges.emplace_back(v, v + 1);
        d.coupling.push_back(j);
    }
    std::mt19937_64 rng(seed);
    for (int v = 0; v < n; ++v) {
        double bz = field_fraction * j * (2 * uniform01(rng) - 1);
        d.local_field.push_back({0, 0, bz});
    }
    d.graph = two_color(d.graph);
    d.validate();
    return d;
}

DeviceModel default_device(uint64_t seed) {
    return path_device(4, seed);
}

nlohmann::json device_to_json(const DeviceModel &device) {
    nlohmann::json fields = nlohmann::json::array();
    for (const auto &b : device.local_field) {
        fields.push_back({b[0], b[1], b[2]});
    }
    return {
        {"graph", graph_to_json(device.graph)},
        {"coupling_rad_s", device.coupling},
        {"local_field_rad_s", fields},
        {"tau_p_s", device.tau_p_s}};
}

DeviceModel device_from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("field 'device' must be an object");
    }
    for (const char *key : {"graph", "coupling_rad_s", "local_field_rad_s", "tau_p_s"}) {
        if (!j.contains(key)) {
            throw std::invalid_argument(std::string("missing field '") + key + "'");
        }
    }
    DeviceModel d;
    d.graph = graph_from_json(j["graph"]);
    if (!d.graph.coloring.has_value()) {
        d.graph = two_color(d.graph);
    }
    d.coupling = j["coupling_rad_s"].get<std::vector<double>>();
    for (const auto &b : j["local_field_rad_s"]) {
        if (!b.is_array() || b.size() != 3) {
            throw std::invalid_argument("field 'local_field_rad_s' must hold [bx, by, bz] triples");
        }
        d.local_field.push_back({b[0].get<double>(), b[1].get<double>(), b[2].get<double>()});
    }
    d.tau_p_s = j["tau_p_s"].get<double>();
    d.validate();
    return d;
}

std::string pole_name(Pole p) {
    static const char *names[] = {"+z", "-z", "+x", "-x", "+y", "-y"};
    return names[(int)p];
}

std::array<std::complex<double>, 2> pole_vector(Pole p) {
    const double r = std::numbers::sqrt2 / 2;
    const std::complex<double> i{0, 1};
    switch (p) {
        case Pole::plus_z:
            return {1.0, 0.0};
        case Pole::minus_z:
            return {0.0, 1.0};
        case Pole::plus_x:
            return {r, r};
        case Pole::minus_x:
            return {r, -r};
        case Pole::plus_y:
            return {r, r * i};
        case Pole::minus_y:
            return {r, -r * i};
    }
    throw std::invalid_argument("unknown pole");
}

StateSpec StateSpec::type2_from_seed(int n, uint64_t seed) {
    StateSpec s{StateKind::type2, {}, seed};
    std::mt19937_64 rng(seed);
    for (int v = 0; v < n; ++v) {
        s.poles.push_back(kAllPoles[uniform_index(rng, 6)]);
    }
    return s;
}

std::string StateSpec::label() const {
    std::string out;
    for (Pole p : poles) {
        out += pole_name(p);
    }
    return out;
}

std::vector<StateSpec> prepare_states(int n, int count_type1, int count_type2, uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("prepare_states needs n >= 1");
    }
    if (count_type1 < 0 || count_type1 > 6 || count_type2 < 0) {
        throw std::invalid_argument("state counts out of range");
    }
    std::vector<StateSpec> out;
    for (int k = 0; k < count_type1; ++k) {
        out.push_back({StateKind::type1, std::vector<Pole>(n, kAllPoles[k]), 0});
    }
    auto seen = [&](const StateSpec &s) {
        for (const auto &o : out) {
            if (o.poles == s.poles) {
                return true;
            }
        }
        return false;
    };
    int made = 0;
    for (uint64_t attempt = 0; made < count_type2 && attempt < 1000ull * (count_type2 + 1); ++attempt) {
        StateSpec s = StateSpec::type2_from_seed(n, derive_seed(seed, {0x7970e2, attempt}));
        if (!seen(s)) {
            out.push_back(s);
            ++made;
        }
    }
    return out;
}

}  // namespace crdd
