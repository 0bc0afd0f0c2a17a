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

#ifndef _CRDD_RNG_H
#define _CRDD_RNG_H

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace crdd {

/// Advances state and returns the next SplitMix64 output.
uint64_t splitmix64(uint64_t &state);

/// Deterministic child seed for a task identified by a list of integer keys.
uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> keys);

/// 64-bit FNV-1a hash, used to turn labels into seed keys.
uint64_t hash_label(std::string_view label);

/// Uniform double in [0, 1) from the top 53 bits; identical on every standard library.
double uniform01(std::mt19937_64 &rng);

/// Uniform integer in [0, n).
uint64_t uniform_index(std::mt19937_64 &rng, uint64_t n);

}  // namespace crdd

#endif
