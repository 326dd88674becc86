/*
 * This file is part of failsim.
 *
 * Copyright 2026 the failsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>

#include "failsim/types.hpp"

namespace failsim {

/// Deterministic 64-bit stream based on SplitMix64 (Steele, Lea & Flood;
/// reference implementation by Sebastiano Vigna). The algorithm is pinned
/// so that a given seed reproduces the same trace on any platform.
///
/// One stream is shared by all failure scenarios in a simulation and is
/// consumed in probe registration order, so a single seed reproduces an
/// entire run.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  /// Next raw 64-bit output.
  std::uint64_t next_u64();

  /// Uniform integer in [0, n). Unbiased via rejection sampling.
  /// Throws SimError for n = 0.
  std::uint64_t randint(std::uint64_t n);

  /// Number of raw draws consumed so far. Lets tests assert that a probe
  /// left the stream untouched.
  std::uint64_t draw_count() const { return draws_; }

  std::uint64_t seed() const { return seed0_; }

 private:
  std::uint64_t state_;
  std::uint64_t seed0_ = state_;
  std::uint64_t draws_ = 0;
};

}  // namespace failsim
