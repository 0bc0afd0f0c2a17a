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

#include "crdd/rng.h"

namespace crdd {

uint64_t splitmix64(uint64_t &state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> keys) {
    uint64_t state = master;
    uint64_t out = splitmix64(state);
    for (uint64_t k : keys) {
        state ^= k + 0x632BE59BD9B4E019ull + (out << 6) + (out >> 2);
        out = splitmix64(state);
    }
    return out;
}

uint64_t hash_label(std::string_view label) {
    uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

double uniform01(std::mt19937_64 &rng) {
    return (double)(rng() >> 11) * 0x1.0p-53;
}

uint64_t uniform_index(std::mt19937_64 &rng, uint64_t n) {
    // Rejection keeps the draw unbiased for any n.
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    while (true) {
        uint64_t r = rng();
        if (r < limit) {
            return r % n;
        }
    }
}

}  // namespace crdd
