// Copyright 2026 The gdp Authors
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

#ifndef GDP_RANDOM_H_
#define GDP_RANDOM_H_

// Counter-based randomness: every draw is a pure function of its key, so
// streams are reproducible and independent of evaluation order.

#include <cstdint>

namespace gdp {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hash_key(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b) {
  return mix64(mix64(mix64(seed) ^ a) ^ b);
}

// Uniform in [0, 1) with 53 bits of precision.
constexpr double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Bernoulli(p) draw keyed by (seed, a, b).
constexpr bool keyed_bernoulli(std::uint64_t seed, std::uint64_t a,
                               std::uint64_t b, double p) {
  return unit_interval(hash_key(seed, a, b)) < p;
}

// Uniform integer in [0, bound) keyed by (seed, a, b); bound > 0.
constexpr std::uint64_t keyed_below(std::uint64_t seed, std::uint64_t a,
                                    std::uint64_t b, std::uint64_t bound) {
  return static_cast<std::uint64_t>(unit_interval(hash_key(seed, a, b)) *
                                    static_cast<double>(bound));
}

}  // namespace gdp

#endif  // GDP_RANDOM_H_
