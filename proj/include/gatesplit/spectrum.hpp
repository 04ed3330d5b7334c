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

#include <span>
#include <vector>

#include "gatesplit/linalg.hpp"

namespace gatesplit {

/// Unit-circle geometry of a unitary spectrum. The numerical range of a
/// unitary is the convex polygon of its eigenvalues, so every quantity here
/// reduces to circular-gap arithmetic on the eigenvalue angles.
struct SpectrumSummary {
  std::vector<double> angles;  // sorted eigenvalue arguments in [0, 2*pi)
  double d_max = 0.0;          // max pairwise chord length, in [0, 2]
  double max_gap = 0.0;        // largest circular gap, wrap-around included
  bool fits_semicircle = false;  // max_gap >= pi - 1e-9
  double w_min_exact = 0.0;    // distance from 0 to the eigenvalue polygon
  double numerical_radius = 0.0;  // max eigenvalue modulus, 1 for unitaries
};

SpectrumSummary summarize_eigenvalues(std::span<const Complex> values);
SpectrumSummary spectrum_summary(const ComplexMatrix& m);
SpectrumSummary spectrum_summary(const UnitaryGate& g);

/// Chord formula sqrt(1 - (d/2)^2). Only meaningful when the spectrum fits a
/// closed semicircle; the caller owns that check. Throws on d outside [0, 2].
double f_min_formula(double d_max);

struct FidelityReport {
  double f_min = 0.0;
  double d_max = 0.0;
  bool formula_valid = false;  // the semicircle condition held
  double epsilon_achieved = 0.0;  // 1 - f_min
};

/// Minimum gate fidelity F_min(u, v) = w_min(v^dagger u), computed from the
/// exact polygon geometry. When the spectrum does not fit a semicircle the
/// chord formula overestimates; f_min is then 0 and formula_valid is false.
FidelityReport gate_fidelity_min(const UnitaryGate& u, const UnitaryGate& v);

/// Largest d_max compatible with an epsilon-approximate separation:
/// 2*sqrt(2*eps - eps^2) for eps in [0, 1].
double epsilon_to_dmax(double eps);

/// Inverse map: 1 - sqrt(1 - (d/2)^2) for d in [0, 2].
double dmax_to_epsilon(double d);

/// |<x|y>| for unit vectors of equal dimension.
double pure_state_fidelity(const StateVector& x, const StateVector& y);

/// Sampled minimum of |<x| a |x>| over Haar states, one substream per sample
/// index, followed by coordinate descent on the sphere from the best sample.
/// Always an upper bound on the exact minimum. The `_serial` variant is the
/// reference implementation for the OpenMP scan.
double min_sampled_qform(const ComplexMatrix& a, int samples, RngStream stream,
                         ComplexVector& best_state);
double min_sampled_qform_serial(const ComplexMatrix& a, int samples,
                                RngStream stream, ComplexVector& best_state);
double refine_min_qform(const ComplexMatrix& a, ComplexVector state,
                        double value);

/// Independent minimization oracle for gate_fidelity_min: Haar sampling plus
/// local refinement of min |<x| v^dagger u |x>|.
double f_min_bruteforce(const UnitaryGate& u, const UnitaryGate& v,
                        int samples, RngStream stream);
double f_min_bruteforce(const ComplexMatrix& vdag_u, int samples,
                        RngStream stream);

}  // namespace gatesplit
