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

#include "gatesplit/common.hpp"
#include "gatesplit/rng.hpp"

namespace gatesplit {

struct UnitarityCheck {
  bool unitary;
  double defect;
};

/// Max-entry magnitude of M^dagger M - I.
double unitarity_defect(const ComplexMatrix& m);

/// Checks the defect against tol; the defect is always reported.
UnitarityCheck is_unitary(const ComplexMatrix& m, double tol);

/// Kronecker product. Entry (i*b.rows()+j, k*b.cols()+l) = a(i,k) * b(j,l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Left fold of the binary tensor over one or more factors.
ComplexMatrix tensor_all(std::span<const ComplexMatrix> factors);

/// A square matrix validated unitary within a tolerance, tagged with the
/// tensor-factor partition of its underlying space (dims m_1..m_n with
/// product equal to the matrix dimension). Immutable after construction.
class UnitaryGate {
 public:
  static constexpr double kDefaultTolerance = 1e-8;

  UnitaryGate(ComplexMatrix matrix, std::vector<int> partition,
              double tolerance = kDefaultTolerance);

  const ComplexMatrix& matrix() const { return matrix_; }
  const std::vector<int>& partition() const { return partition_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  double unitarity_defect() const { return defect_; }
  double tolerance() const { return tolerance_; }

 private:
  ComplexMatrix matrix_;
  std::vector<int> partition_;
  double defect_;
  double tolerance_;
};

/// Tensor product of gates; partitions concatenate.
UnitaryGate tensor(const UnitaryGate& a, const UnitaryGate& b);
UnitaryGate tensor_all(std::span<const UnitaryGate> factors);

/// Unit vector (Euclidean norm 1 within 1e-12).
class StateVector {
 public:
  explicit StateVector(ComplexVector amplitudes);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  int dim() const { return static_cast<int>(amplitudes_.size()); }

 private:
  ComplexVector amplitudes_;
};

/// Eigenvalues of a (near-)unitary matrix. The input is normal, so the Schur
/// form is diagonal and the computed values sit on the unit circle up to the
/// unitarity defect. Throws NumericalError if the iteration fails.
std::vector<Complex> eig_unitary(const ComplexMatrix& m);
std::vector<Complex> eig_unitary(const UnitaryGate& g);

/// 2x2 unitary from the four-angle chart
///   e^{i alpha} * diag(e^{-i beta}, e^{i beta})
///               * [[cos(g/2), -sin(g/2)], [sin(g/2), cos(g/2)]]
///               * diag(e^{-i delta}, e^{i delta}).
/// Angles are reduced mod 2*pi before use; the reduction can flip the global
/// sign, which no spectral quantity in this library observes.
ComplexMatrix zyz_matrix(double alpha, double beta, double gamma, double delta);
UnitaryGate zyz_unitary(double alpha, double beta, double gamma, double delta);

/// U(m) chart for factors larger than 2: the m*m reals fill a Hermitian H
/// (m diagonal entries first, then re/im pairs for each upper off-diagonal
/// entry in row-major order) and the result is exp(iH).
ComplexMatrix hermitian_exp_matrix(std::span<const double> params, int dim);
UnitaryGate param_unitary(std::span<const double> params, int dim);

struct UnitaryProjection {
  UnitaryGate gate;
  double distance;  // Frobenius distance from the input to its polar factor
  bool flagged;     // distance exceeded 1e-2
};

/// Unitary polar factor (closest unitary in Frobenius norm). Throws
/// std::invalid_argument on singular input.
UnitaryProjection nearest_unitary(const ComplexMatrix& m,
                                  std::vector<int> partition = {});

/// Haar-random pure state: normalized vector of iid standard complex
/// Gaussians. Deterministic given the generator state.
StateVector haar_state(int dim, Rng& rng);

/// Haar-random unitary: QR of a complex Ginibre matrix with the R diagonal
/// phases folded into Q (Mezzadri's recipe). Partition defaults to {dim}.
UnitaryGate haar_unitary(int dim, Rng& rng);

}  // namespace gatesplit
