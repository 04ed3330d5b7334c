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

#include "gatesplit/linalg.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace gatesplit {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": matrix must be square and non-empty, got " << m.rows()
       << "x" << m.cols();
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

bool all_finite(const ComplexMatrix& m) {
  return m.array().real().isFinite().all() &&
         m.array().imag().isFinite().all();
}

bool all_finite(const ComplexVector& v) {
  return v.array().real().isFinite().all() &&
         v.array().imag().isFinite().all();
}

double unitarity_defect(const ComplexMatrix& m) {
  require_square(m, "unitarity_defect");
  const ComplexMatrix gram = m.adjoint() * m;
  return (gram - ComplexMatrix::Identity(m.rows(), m.cols()))
      .cwiseAbs()
      .maxCoeff();
}

UnitarityCheck is_unitary(const ComplexMatrix& m, double tol) {
  const double defect = unitarity_defect(m);
  return {defect <= tol, defect};
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "tensor");
  require_square(b, "tensor");
  const auto ad = a.rows();
  const auto bd = b.rows();
  ComplexMatrix out(ad * bd, ad * bd);
  for (Eigen::Index i = 0; i < ad; ++i)
    for (Eigen::Index k = 0; k < ad; ++k)
      out.block(i * bd, k * bd, bd, bd) = a(i, k) * b;
  return out;
}

ComplexMatrix tensor_all(std::span<const ComplexMatrix> factors) {
  if (factors.empty())
    throw std::invalid_argument("tensor_all: need at least one factor");
  ComplexMatrix acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i)
    acc = tensor(acc, factors[i]);
  return acc;
}

UnitaryGate::UnitaryGate(ComplexMatrix matrix, std::vector<int> partition,
                         double tolerance)
    : matrix_(std::move(matrix)),
      partition_(std::move(partition)),
      tolerance_(tolerance) {
  require_square(matrix_, "UnitaryGate");
  if (!all_finite(matrix_))
    throw std::invalid_argument("UnitaryGate: non-finite entries");
  long long prod = 1;
  for (int p : partition_) {
    if (p <= 0) throw std::invalid_argument("UnitaryGate: partition entries must be positive");
    prod *= p;
  }
  if (partition_.empty() || prod != matrix_.rows()) {
    std::ostringstream os;
    os << "UnitaryGate: partition product " << prod
       << " does not match dimension " << matrix_.rows();
    throw std::invalid_argument(os.str());
  }
  defect_ = gatesplit::unitarity_defect(matrix_);
  if (defect_ > tolerance_) {
    std::ostringstream os;
    os << "UnitaryGate: unitarity defect " << defect_ << " exceeds tolerance "
       << tolerance_;
    throw std::invalid_argument(os.str());
  }
}

UnitaryGate tensor(const UnitaryGate& a, const UnitaryGate& b) {
  std::vector<int> partition = a.partition();
  partition.insert(partition.end(), b.partition().begin(),
                   b.partition().end());
  const double tol = a.tolerance() + b.tolerance();
  return UnitaryGate(tensor(a.matrix(), b.matrix()), std::move(partition), tol);
}

UnitaryGate tensor_all(std::span<const UnitaryGate> factors) {
  if (factors.empty())
    throw std::invalid_argument("tensor_all: need at least one factor");
  UnitaryGate acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i)
    acc = tensor(acc, factors[i]);
  return acc;
}

StateVector::StateVector(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0)
    throw std::invalid_argument("StateVector: empty");
  if (!all_finite(amplitudes_))
    throw std::invalid_argument("StateVector: non-finite amplitudes");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "StateVector: norm " << norm << " is not 1 within 1e-12";
    throw std::invalid_argument(os.str());
  }
}

std::vector<Complex> eig_unitary(const ComplexMatrix& m) {
  require_square(m, "eig_unitary");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, false);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "eig_unitary: eigenvalue iteration did not converge (dim "
       << m.rows() << ", unitarity defect " << unitarity_defect(m) << ")";
    throw NumericalError(os.str());
  }
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

std::vector<Complex> eig_unitary(const UnitaryGate& g) {
  return eig_unitary(g.matrix());
}

ComplexMatrix zyz_matrix(double alpha, double beta, double gamma,
                         double delta) {
  alpha = std::remainder(alpha, kTwoPi);
  beta = std::remainder(beta, kTwoPi);
  gamma = std::remainder(gamma, kTwoPi);
  delta = std::remainder(delta, kTwoPi);
  const Complex phase = std::polar(1.0, alpha);
  const Complex eb = std::polar(1.0, beta);
  const Complex ed = std::polar(1.0, delta);
  const double c = std::cos(gamma / 2.0);
  const double s = std::sin(gamma / 2.0);
  ComplexMatrix m(2, 2);
  m(0, 0) = phase * std::conj(eb) * c * std::conj(ed);
  m(0, 1) = -phase * std::conj(eb) * s * ed;
  m(1, 0) = phase * eb * s * std::conj(ed);
  m(1, 1) = phase * eb * c * ed;
  return m;
}

UnitaryGate zyz_unitary(double alpha, double beta, double gamma,
                        double delta) {
  return UnitaryGate(zyz_matrix(alpha, beta, gamma, delta), {2});
}

ComplexMatrix hermitian_exp_matrix(std::span<const double> params, int dim) {
  if (dim < 1) throw std::invalid_argument("hermitian_exp_matrix: dim < 1");
  if (std::ssize(params) != static_cast<std::ptrdiff_t>(dim) * dim) {
    std::ostringstream os;
    os << "hermitian_exp_matrix: expected " << dim * dim << " parameters, got "
       << params.size();
    throw std::invalid_argument(os.str());
  }
  ComplexMatrix h(dim, dim);
  std::size_t next = 0;
  for (int i = 0; i < dim; ++i) h(i, i) = params[next++];
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      const double re = params[next++];
      const double im = params[next++];
      h(i, j) = Complex(re, im);
      h(j, i) = Complex(re, -im);
    }
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw NumericalError("hermitian_exp_matrix: eigendecomposition failed");
  ComplexVector phases(dim);
  for (int k = 0; k < dim; ++k)
    phases(k) = std::polar(1.0, solver.eigenvalues()(k));
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

UnitaryGate param_unitary(std::span<const double> params, int dim) {
  return UnitaryGate(hermitian_exp_matrix(params, dim), {dim});
}

UnitaryProjection nearest_unitary(const ComplexMatrix& m,
                                  std::vector<int> partition) {
  require_square(m, "nearest_unitary");
  if (!all_finite(m))
    throw std::invalid_argument("nearest_unitary: non-finite entries");
  Eigen::JacobiSVD<ComplexMatrix> svd(m,
                                      Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma.maxCoeff() <= 0.0 ||
      sigma.minCoeff() < 1e-12 * sigma.maxCoeff())
    throw std::invalid_argument("nearest_unitary: singular input");
  ComplexMatrix polar = svd.matrixU() * svd.matrixV().adjoint();
  const double distance = (m - polar).norm();
  if (partition.empty()) partition = {static_cast<int>(m.rows())};
  return {UnitaryGate(std::move(polar), std::move(partition)), distance,
          distance > 1e-2};
}

StateVector haar_state(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("haar_state: dim < 1");
  ComplexVector v(dim);
  double norm = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v(i) = rng.next_complex_gaussian();
    norm = v.norm();
  } while (norm < 1e-8);
  return StateVector(v / norm);
}

UnitaryGate haar_unitary(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("haar_unitary: dim < 1");
  ComplexMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = rng.next_complex_gaussian();
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  ComplexMatrix q = qr.householderQ();
  ComplexVector phases(dim);
  for (int k = 0; k < dim; ++k) {
    const Complex r = qr.matrixQR()(k, k);
    const double mag = std::abs(r);
    phases(k) = mag > 0.0 ? r / mag : Complex(1.0, 0.0);
  }
  return UnitaryGate(q * phases.asDiagonal(), {dim});
}

}  // namespace gatesplit
