// Copyright 2026 The dynsyn Authors
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


#ifndef DYNSYN_RNG_H
#define DYNSYN_RNG_H

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace dynsyn {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Child seed for a tuple of integer keys:
///   h_0 = mix64(master), h_{k+1} = mix64(h_k ^ mix64(key_k + k + 1)).
/// Keys are hashed in order, so (a, b) and (b, a) give different seeds.
constexpr uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> keys) {
  uint64_t h = mix64(master);
  uint64_t k = 0;
  for (uint64_t key : keys) {
    ++k;
    h = mix64(h ^ mix64(key + k));
  }
  return h;
}

/// Bit pattern of a double, for use as a derive_seed key.
inline uint64_t seed_key(double value) { return std::bit_cast<uint64_t>(value); }

/// FNV-1a over a byte string; used for stable text hashes.
constexpr uint64_t fnv1a64(std::string_view text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Uniform double in [0, 1) with 53 random bits; identical on every platform.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

}  // namespace dynsyn

#endif
