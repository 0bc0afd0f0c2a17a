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

#include "crdd/catalog.h"

#include <algorithm>
#include <cctype>
#include <numbers>

#include "crdd/transforms.h"

namespace crdd {

namespace {

constexpr double kPi = std::numbers::pi;

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::vector<double> scaled(double unit, std::initializer_list<int> multiples) {
    std::vector<double> out;
    for (int m : multiples) {
        out.push_back(unit * m);
    }
    return out;
}

std::vector<double> edd() {
    return {0, kPi / 2, 0, kPi / 2, kPi / 2, 0, kPi / 2, 0};
}

std::vector<double> kdd() {
    std::vector<double> kx = {kPi / 6, 0, kPi / 2, 0, kPi / 6};
    std::vector<double> ky = {2 * kPi / 3, kPi / 2, kPi, kPi / 2, 2 * kPi / 3};
    std::vector<double> out;
    for (int rep = 0; rep < 2; ++rep) {
        out.insert(out.end(), kx.begin(), kx.end());
        out.insert(out.end(), ky.begin(), ky.end());
    }
    return out;
}

// Each outer EDD pulse expands into an inner EDD rotated by that pulse's phase.
std::vector<double> rga64c() {
    std::vector<double> out;
    for (double outer : edd()) {
        for (double inner : edd()) {
            out.push_back(inner + outer);
        }
    }
    return out;
}

}  // namespace

UnknownSequenceError::UnknownSequenceError(const std::string &name)
    : std::invalid_argument("unknown sequence name '" + name + "'") {
}

const std::vector<std::string> &catalog_names() {
    static const std::vector<std::string> names = {"XY4", "EDD", "KDD", "UR10", "UR12", "RGA64c"};
    return names;
}

std::string canonical_name(std::string_view name) {
    std::string key = lower(name);
    for (const auto &n : catalog_names()) {
        if (lower(n) == key) {
            return n;
        }
    }
    throw UnknownSequenceError(std::string(name));
}

std::vector<double> catalog_phases(std::string_view name) {
    std::string n = canonical_name(name);
    if (n == "XY4") {
        return {0, kPi / 2, 0, kPi / 2};
    }
    if (n == "EDD") {
        return edd();
    }
    if (n == "KDD") {
        return kdd();
    }
    if (n == "UR10") {
        return scaled(kPi / 5, {0, 4, 2, 4, 0, 0, 4, 2, 4, 0});
    }
    if (n == "UR12") {
        return scaled(kPi / 3, {0, 1, 3, 0, 4, 3, 3, 4, 0, 3, 1, 0});
    }
    return rga64c();
}

Sequence build_named(std::string_view name, double tau_p, const PulseShape &shape) {
    auto phases = catalog_phases(name);
    return sim_variant(phases, tau_p, 0, shape, canonical_name(name));
}

}  // namespace crdd
