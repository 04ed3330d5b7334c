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

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gatesplit::par {

/// Caps the thread count used by the OpenMP kernels. 0 restores the
/// OpenMP runtime default. Thread-count changes never change results:
/// kernels only write disjoint per-index slots and all reductions run
/// serially afterwards.
void set_max_threads(int n);
int max_threads();

/// Threads the next kernel launch will actually use.
int resolved_threads();

/// Runs fn(i) for i in [0, n). Iterations must be independent. Falls back to
/// a plain loop when already inside a parallel region, when the cap is 1, or
/// when OpenMP is unavailable.
template <class F>
void for_index(std::int64_t n, F&& fn) {
#ifdef _OPENMP
  if (n > 1 && resolved_threads() > 1 && !omp_in_parallel()) {
#pragma omp parallel for schedule(static) num_threads(resolved_threads())
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
#endif
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}

}  // namespace gatesplit::par
