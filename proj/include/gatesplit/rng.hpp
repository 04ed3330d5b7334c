// Copyright 2026 The gatesplit Authors
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

#include <array>
#include <cstdint>

#include "gatesplit/common.hpp"

namespace gatesplit {

/// One Philox 4x32-10 block (Salmon et al., SC 2011). Exposed for
/// known-answer tests.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Counter-based generator over a (seed, stream) pair. Distinct streams under
/// the same seed are statistically independent, so every consumer can be
/// handed its own stream and the combined program stays reproducible no
/// matter how work is scheduled across threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double();

  /// Standard normal via Box-Muller (pairs are drawn, the spare is cached).
  double next_gaussian();

  /// Complex number with independent standard normal components.
  Complex next_complex_gaussian();

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_{};
  int block_pos_ = 4;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Hierarchical substream label. child(i) derives a fresh independent stream,
/// so nested consumers (restart -> particle, trial -> sample) can each own a
/// generator without any coordination.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  RngStream child(std::uint64_t label) const;
  Rng rng() const { return Rng(seed, stream); }
};

}  // namespace gatesplit
