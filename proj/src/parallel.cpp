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

#include "gatesplit/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace gatesplit::par {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() { return g_max_threads.load(); }

int resolved_threads() {
#ifdef _OPENMP
  const int cap = g_max_threads.load();
  const int def = omp_get_max_threads();
  return cap == 0 ? def : std::min(cap, def > 0 ? def : cap);
#else
  return 1;
#endif
}

}  // namespace gatesplit::par
