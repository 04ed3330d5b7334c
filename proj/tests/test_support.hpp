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

// Test-only oracles, independent of the library paths they check.

#pragma once

#include <array>
#include <cmath>
#include <cstdlib>

#include "gatesplit/linalg.hpp"
#include "gatesplit/parallel.hpp"

namespace gatesplit::testing {

/// Determinant by Gaussian elimination with partial pivoting. Kept separate
/// from any eigenvalue machinery so spectral identities are checked against
/// an independent route.
inline Complex det_lu(ComplexMatrix m) {
  const auto n = m.rows();
  Complex det(1.0, 0.0);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    for (Eigen::Index r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    if (std::abs(m(pivot, col)) == 0.0) return Complex(0.0, 0.0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const Complex factor = m(r, col) / m(col, col);
      m.row(r).tail(n - col) -= factor * m.row(col).tail(n - col);
    }
  }
  return det;
}

inline double max_entry_distance(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Numerically inverts the four-angle chart for a 2x2 unitary. The entry
/// phases satisfy arg(w00) = a-b-d, arg(w10) = a+b-d, arg(w11) = a+b+d up to
/// multiples of 2*pi, which the chart cannot observe, so solving that chain
/// reproduces the input exactly.
inline std::array<double, 4> invert_zyz(const ComplexMatrix& w) {
  const double c = std::abs(w(0, 0));
  const double s = std::abs(w(1, 0));
  const double gamma = 2.0 * std::atan2(s, c);
  double alpha = 0.0, beta = 0.0, delta = 0.0;
  if (s < 1e-12) {  // diagonal: gamma == 0
    const double a00 = std::arg(w(0, 0));
    const double a11 = std::arg(w(1, 1));
    beta = (a11 - a00) / 2.0;
    alpha = (a00 + a11) / 2.0;
  } else if (c < 1e-12) {  // antidiagonal: gamma == pi
    const double a10 = std::arg(w(1, 0));
    const double a01 = std::arg(-w(0, 1));
    beta = (a10 - a01) / 2.0;
    alpha = (a10 + a01) / 2.0;
  } else {
    const double a00 = std::arg(w(0, 0));
    const double a10 = std::arg(w(1, 0));
    const double a11 = std::arg(w(1, 1));
    beta = (a10 - a00) / 2.0;
    delta = (a11 - a10) / 2.0;
    alpha = a00 + beta + delta;
  }
  return {alpha, beta, gamma, delta};
}

/// Scoped thread-cap override for the OpenMP kernels.
class ThreadCapGuard {
 public:
  explicit ThreadCapGuard(int cap) : previous_(par::max_threads()) {
    par::set_max_threads(cap);
  }
  ~ThreadCapGuard() { par::set_max_threads(previous_); }

 private:
  int previous_;
};

}  // namespace gatesplit::testing
