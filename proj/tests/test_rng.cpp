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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "gatesplit/rng.hpp"

using namespace gatesplit;

TEST_SUITE("rng") {

TEST_CASE("philox known-answer vectors") {
  // Reference values for Philox 4x32-10 (Salmon et al., SC 2011).
  auto out = philox4x32({0, 0, 0, 0}, {0, 0});
  CHECK(out[0] == 0x6627e8d5u);
  CHECK(out[1] == 0xe169c58du);
  CHECK(out[2] == 0xbc57ac4cu);
  CHECK(out[3] == 0x9b00dbd8u);

  out = philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                   {0xffffffffu, 0xffffffffu});
  CHECK(out[0] == 0x408f276du);
  CHECK(out[1] == 0x41c83b0eu);
  CHECK(out[2] == 0xa20bc7c6u);
  CHECK(out[3] == 0x6d5451fdu);

  out = philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                   {0xa4093822u, 0x299f31d0u});
  CHECK(out[0] == 0xd16cfe09u);
  CHECK(out[1] == 0x94fdccebu);
  CHECK(out[2] == 0x5001e420u);
  CHECK(out[3] == 0x24126ea1u);
}

TEST_CASE("same seed and stream reproduce the sequence bitwise") {
  Rng a(0x123456789abcdef0ull, 17);
  Rng b(0x123456789abcdef0ull, 17);
  for (int i = 0; i < 64; ++i) CHECK(a.next_u64() == b.next_u64());

  Rng c(42, 0);
  Rng d(42, 0);
  for (int i = 0; i < 64; ++i) {
    const double x = c.next_double();
    CHECK(x == d.next_double());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("distinct streams and seeds decorrelate") {
  Rng a(42, 0);
  Rng b(42, 1);
  Rng c(43, 0);
  int same_ab = 0, same_ac = 0;
  for (int i = 0; i < 32; ++i) {
    const auto va = a.next_u64();
    if (va == b.next_u64()) ++same_ab;
    if (va == c.next_u64()) ++same_ac;
  }
  CHECK(same_ab == 0);
  CHECK(same_ac == 0);
}

TEST_CASE("substream derivation is stable and label-sensitive") {
  const RngStream root{7, 0};
  CHECK(root.child(3).stream == root.child(3).stream);
  CHECK(root.child(3).stream != root.child(4).stream);
  CHECK(root.child(0).child(1).stream != root.child(1).child(0).stream);
  CHECK(root.child(3).seed == 7);
}

TEST_CASE("uniform and gaussian moments") {
  Rng rng(2026, 0);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += rng.next_double();
  CHECK(std::abs(sum / n - 0.5) < 0.01);

  Rng gauss(2027, 0);
  double mean = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = gauss.next_gaussian();
    mean += g;
    sq += g * g;
  }
  mean /= n;
  sq /= n;
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(sq - mean * mean - 1.0) < 0.05);
}

}  // TEST_SUITE
