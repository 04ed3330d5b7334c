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

#include "gatesplit/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gatesplit/parallel.hpp"

namespace gatesplit {

SpectrumSummary summarize_eigenvalues(std::span<const Complex> values) {
  if (values.empty())
    throw std::invalid_argument("summarize_eigenvalues: empty spectrum");
  SpectrumSummary s;
  s.angles.reserve(values.size());
  s.numerical_radius = 0.0;
  for (const Complex& v : values) {
    s.numerical_radius = std::max(s.numerical_radius, std::abs(v));
    double a = std::arg(v);  // (-pi, pi]
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    s.angles.push_back(a);
  }
  std::sort(s.angles.begin(), s.angles.end());

  const std::size_t n = s.angles.size();
  s.max_gap = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    s.max_gap = std::max(s.max_gap, s.angles[i + 1] - s.angles[i]);
  // wrap-around gap; for a single eigenvalue this is the full circle
  s.max_gap = std::max(s.max_gap, s.angles.front() + kTwoPi - s.angles.back());

  s.d_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double delta = s.angles[j] - s.angles[i];
      if (delta > kPi) delta = kTwoPi - delta;
      s.d_max = std::max(s.d_max, 2.0 * std::sin(delta / 2.0));
    }
  }

  s.fits_semicircle = s.max_gap >= kPi - 1e-9;
  // With all vertices on the unit circle, the nearest polygon point lies on
  // the edge spanning the largest gap; its distance is -cos(max_gap / 2).
  // When no gap reaches pi the origin is inside the polygon.
  s.w_min_exact = s.fits_semicircle ? -std::cos(s.max_gap / 2.0) : 0.0;
  if (s.w_min_exact < 0.0) s.w_min_exact = 0.0;
  return s;
}

SpectrumSummary spectrum_summary(const ComplexMatrix& m) {
  const auto values = eig_unitary(m);
  return summarize_eigenvalues(values);
}

SpectrumSummary spectrum_summary(const UnitaryGate& g) {
  return spectrum_summary(g.matrix());
}

double f_min_formula(double d_max) {
  if (!(d_max >= 0.0) || d_max > 2.0) {
    std::ostringstream os;
    os << "f_min_formula: d_max " << d_max << " outside [0, 2]";
    throw std::invalid_argument(os.str());
  }
  const double half = d_max / 2.0;
  return std::sqrt(std::max(0.0, 1.0 - half * half));
}

FidelityReport gate_fidelity_min(const UnitaryGate& u, const UnitaryGate& v) {
  if (u.dim() != v.dim()) {
    std::ostringstream os;
    os << "gate_fidelity_min: dimension mismatch " << u.dim() << " vs "
       << v.dim();
    throw std::invalid_argument(os.str());
  }
  const SpectrumSummary s = spectrum_summary(
      ComplexMatrix(v.matrix().adjoint() * u.matrix()));
  FidelityReport report;
  report.d_max = s.d_max;
  report.formula_valid = s.fits_semicircle;
  report.f_min = s.w_min_exact;
  report.epsilon_achieved = 1.0 - report.f_min;
  return report;
}

double epsilon_to_dmax(double eps) {
  if (!(eps >= 0.0) || eps > 1.0) {
    std::ostringstream os;
    os << "epsilon_to_dmax: epsilon " << eps << " outside [0, 1]";
    throw std::invalid_argument(os.str());
  }
  return 2.0 * std::sqrt(eps * (2.0 - eps));
}

double dmax_to_epsilon(double d) {
  if (!(d >= 0.0) || d > 2.0) {
    std::ostringstream os;
    os << "dmax_to_epsilon: d_max " << d << " outside [0, 2]";
    throw std::invalid_argument(os.str());
  }
  return 1.0 - f_min_formula(d);
}

double pure_state_fidelity(const StateVector& x, const StateVector& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("pure_state_fidelity: dimension mismatch");
  return std::abs(x.amplitudes().dot(y.amplitudes()));
}

namespace {

double qform_modulus(const ComplexMatrix& a, const ComplexVector& x) {
  return std::abs((x.adjoint() * a * x)(0, 0));
}

ComplexVector sample_state(int dim, RngStream stream, std::int64_t index) {
  Rng rng = stream.child(static_cast<std::uint64_t>(index)).rng();
  ComplexVector v(dim);
  double norm = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v(i) = rng.next_complex_gaussian();
    norm = v.norm();
  } while (norm < 1e-8);
  return v / norm;
}

// Deterministic argmin over the sampled objective values: the values are
// written per index and folded serially, so the result does not depend on
// the thread schedule.
template <class Scan>
double min_scan(const ComplexMatrix& a, int samples, RngStream stream,
                ComplexVector& best_state, Scan&& scan) {
  if (samples < 1)
    throw std::invalid_argument("min_sampled_qform: samples < 1");
  std::vector<double> values(static_cast<std::size_t>(samples));
  scan(values);
  std::int64_t best_index = 0;
  for (std::int64_t i = 1; i < samples; ++i)
    if (values[static_cast<std::size_t>(i)] <
        values[static_cast<std::size_t>(best_index)])
      best_index = i;
  best_state = sample_state(static_cast<int>(a.rows()), stream, best_index);
  return values[static_cast<std::size_t>(best_index)];
}

}  // namespace

double min_sampled_qform(const ComplexMatrix& a, int samples, RngStream stream,
                         ComplexVector& best_state) {
  const int dim = static_cast<int>(a.rows());
  return min_scan(a, samples, stream, best_state, [&](std::vector<double>& values) {
    par::for_index(samples, [&](std::int64_t i) {
      values[static_cast<std::size_t>(i)] =
          qform_modulus(a, sample_state(dim, stream, i));
    });
  });
}

double min_sampled_qform_serial(const ComplexMatrix& a, int samples,
                                RngStream stream, ComplexVector& best_state) {
  const int dim = static_cast<int>(a.rows());
  return min_scan(a, samples, stream, best_state, [&](std::vector<double>& values) {
    for (std::int64_t i = 0; i < samples; ++i)
      values[static_cast<std::size_t>(i)] =
          qform_modulus(a, sample_state(dim, stream, i));
  });
}

double refine_min_qform(const ComplexMatrix& a, ComplexVector state,
                        double value) {
  const int dim = static_cast<int>(state.size());
  // Coordinate descent on the sphere: nudge one coordinate by +-step along
  // the real or imaginary axis, renormalize, accept improvements, halve the
  // step once a full sweep stalls. |<x|a|x>| is the modulus of a convex
  // combination of the eigenvalues, so there are no spurious basins to fall
  // into on the way down.
  for (double step = 0.5; step > 1e-7; step *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (int k = 0; k < dim; ++k) {
        const Complex deltas[4] = {Complex(step, 0.0), Complex(-step, 0.0),
                                   Complex(0.0, step), Complex(0.0, -step)};
        for (const Complex& delta : deltas) {
          ComplexVector trial = state;
          trial(k) += delta;
          trial /= trial.norm();
          const double v = qform_modulus(a, trial);
          if (v < value - 1e-15) {
            value = v;
            state = std::move(trial);
            improved = true;
          }
        }
      }
    }
  }
  return value;
}

double f_min_bruteforce(const ComplexMatrix& vdag_u, int samples,
                        RngStream stream) {
  ComplexVector best_state;
  const double sampled = min_sampled_qform(vdag_u, samples, stream, best_state);
  return refine_min_qform(vdag_u, std::move(best_state), sampled);
}

double f_min_bruteforce(const UnitaryGate& u, const UnitaryGate& v,
                        int samples, RngStream stream) {
  if (u.dim() != v.dim())
    throw std::invalid_argument("f_min_bruteforce: dimension mismatch");
  return f_min_bruteforce(ComplexMatrix(v.matrix().adjoint() * u.matrix()),
                          samples, stream);
}

}  // namespace gatesplit
