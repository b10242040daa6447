// Copyright 2026 The groundiff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

#include "groundiff/util/hash.hpp"

namespace groundiff {

// SplitMix64 generator with named sub-streams. Every consumer derives its own
// stream from (seed, purpose, index), so draws never depend on batch layout,
// thread count, or evaluation order. std::random distributions are avoided on
// purpose: their output is implementation-defined and would break the
// byte-identical reproducibility contracts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng stream(std::uint64_t seed, std::string_view purpose, std::uint64_t index = 0) {
    std::uint64_t h = fnv1a(purpose);
    h = fnv1a_values(&index, 1, h);
    return Rng(seed ^ mix(h));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  std::uint32_t next_u32() { return static_cast<std::uint32_t>(next_u64() >> 32); }

  // Uniform integer in [0, n). Lemire's multiply-shift; deterministic and
  // bias-free enough for corpus work (n is always tiny against 2^64).
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Uniform in [0, 1) as an exact dyadic rational (53 bits).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  float uniform_f() { return static_cast<float>(next_u64() >> 40) * 0x1.0p-24f; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller without caching the second variate, so a stream's n-th normal
  // is a pure function of (seed, n).
  double normal() {
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  float normal_f() { return static_cast<float>(normal()); }

  // Approximate standard normal from 12 dyadic uniforms. Uses only IEEE
  // add/mul, no libm, so rasterised noise textures are byte-identical across
  // platforms.
  double normal_irwin_hall() {
    double s = 0.0;
    for (int i = 0; i < 12; ++i) s += uniform();
    return s - 6.0;
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace groundiff
