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

#ifndef _CRDD_DEVICE_H
#define _CRDD_DEVICE_H

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "crdd/graph.h"
#include "json.hpp"

namespace crdd {

/// Default single-qubit gate duration, 512/9 ns.
constexpr double kDefaultTauP = 512.0 / 9.0 * 1e-9;

struct DeviceModel {
    QubitGraph graph;
    /// ZZ coupling per edge, rad/s, in graph.edges order.
    std::vector<double> coupling;
    /// Static (b^X, b^Y, b^Z) per qubit, rad/s.
    std::vector<std::array<double, 3>> local_field;
    double tau_p_s = kDefaultTauP;

    int num_qubits() const {
        return graph.n;
    }
    /// Throws std::invalid_argument on size mismatches or non-finite couplings.
    void validate() const;
    /// Device restricted to the given vertices (in that order), keeping couplings on surviving edges.
    DeviceModel restricted_to(std::span<const int> vertices) const;
};

/// Path of n qubits with uniform J = j_tau_p / tau_p and b^Z drawn uniformly from
/// [-field_fraction*J, field_fraction*J] with the given seed. Colored red/blue.
DeviceModel path_device(int n, uint64_t seed, double tau_p = kDefaultTauP, double j_tau_p = 5e-3, double field_fraction = 0.1);

/// The four-qubit crosstalk-dominant default device.
DeviceModel default_device(uint64_t seed);

nlohmann::json device_to_json(const DeviceModel &device);
DeviceModel device_from_json(const nlohmann::json &j);

enum class Pole { plus_z, minus_z, plus_x, minus_x, plus_y, minus_y };
constexpr std::array<Pole, 6> kAllPoles = {
    Pole::plus_z, Pole::minus_z, Pole::plus_x, Pole::minus_x, Pole::plus_y, Pole::minus_y};

std::string pole_name(Pole p);
/// Single-qubit state vector of a pole.
std::array<std::complex<double>, 2> pole_vector(Pole p);

enum class StateKind { type1, type2 };

struct StateSpec {
    StateKind kind = StateKind::type1;
    std::vector<Pole> poles;
    /// Seed that generated the poles (type2 only).
    uint64_t seed = 0;

    /// Poles drawn independently and uniformly from the seed.
    static StateSpec type2_from_seed(int n, uint64_t seed);
    /// e.g. "+z+z-x+y".
    std::string label() const;
    bool operator==(const StateSpec &other) const = default;
};

/// Up to six uniform pole states followed by seeded random pole assignments that differ
/// from every earlier state. Fewer type2 states are returned when n is too small to supply
/// enough distinct assignments.
std::vector<StateSpec> prepare_states(int n, int count_type1 = 6, int count_type2 = 14, uint64_t seed = 0);

}  // namespace crdd

#endif
