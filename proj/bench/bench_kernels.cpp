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

// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce bitwise-identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "gatesplit/experiments.hpp"
#include "gatesplit/fixtures.hpp"
#include "gatesplit/parallel.hpp"

using namespace gatesplit;

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void print_row(const char* kernel, std::int64_t n, double serial_s,
               double parallel_s, bool identical) {
  std::printf("%-24s n=%-8lld serial=%8.3f ms  parallel=%8.3f ms  "
              "speedup=%5.2fx  identical=%s\n",
              kernel, static_cast<long long>(n), serial_s * 1e3,
              parallel_s * 1e3, serial_s / parallel_s,
              identical ? "yes" : "NO");
}

void bench_state_fidelity(std::int64_t n) {
  const ComplexMatrix form = fixtures::cnot_approx().matrix().adjoint() *
                             fixtures::cnot().matrix();
  const RngStream stream{1234, 0};
  std::vector<double> serial_out(static_cast<std::size_t>(n));
  std::vector<double> parallel_out(static_cast<std::size_t>(n));

  double t0 = now_seconds();
  state_fidelity_kernel_serial(form, n, stream, serial_out);
  const double serial_s = now_seconds() - t0;

  t0 = now_seconds();
  state_fidelity_kernel(form, n, stream, parallel_out);
  const double parallel_s = now_seconds() - t0;

  print_row("state_fidelity", n, serial_s, parallel_s,
            serial_out == parallel_out);
}

void bench_qform_scan(int n) {
  const ComplexMatrix a = fixtures::cnot_approx().matrix().adjoint() *
                          fixtures::cnot().matrix();
  const RngStream stream{77, 0};
  ComplexVector s1, s2;

  double t0 = now_seconds();
  const double serial_value = min_sampled_qform_serial(a, n, stream, s1);
  const double serial_s = now_seconds() - t0;

  t0 = now_seconds();
  const double parallel_value = min_sampled_qform(a, n, stream, s2);
  const double parallel_s = now_seconds() - t0;

  print_row("min_qform_scan", n, serial_s, parallel_s,
            serial_value == parallel_value &&
                (s1.array() == s2.array()).all());
}

void bench_swarm_eval(int swarm, int rounds) {
  const Objective objective = build_objective(
      fixtures::cnot(), ProductAnsatz::for_partition({2, 2}));
  std::vector<std::vector<double>> positions;
  Rng rng(99, 0);
  for (int p = 0; p < swarm; ++p) {
    std::vector<double> x(8);
    for (double& v : x) v = kTwoPi * rng.next_double();
    positions.push_back(std::move(x));
  }
  std::vector<double> serial_vals(positions.size());
  std::vector<double> parallel_vals(positions.size());

  double t0 = now_seconds();
  for (int r = 0; r < rounds; ++r)
    evaluate_swarm_serial(objective, positions, serial_vals);
  const double serial_s = now_seconds() - t0;

  t0 = now_seconds();
  for (int r = 0; r < rounds; ++r)
    evaluate_swarm(objective, positions, parallel_vals);
  const double parallel_s = now_seconds() - t0;

  print_row("evaluate_swarm", static_cast<std::int64_t>(swarm) * rounds,
            serial_s, parallel_s, serial_vals == parallel_vals);
}

}  // namespace

int main(int argc, char** argv) {
  const int scale = argc > 1 ? std::atoi(argv[1]) : 1;
  std::printf("threads: %d\n", par::resolved_threads());
  bench_state_fidelity(200000LL * scale);
  bench_qform_scan(100000 * scale);
  bench_swarm_eval(64, 400 * scale);
  return 0;
}
