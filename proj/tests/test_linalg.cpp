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

#include <algorithm>
#include <complex>
#include <vector>

#include <doctest.h>

#include "gatesplit/fixtures.hpp"
#include "gatesplit/linalg.hpp"
#include "test_support.hpp"

using namespace gatesplit;
using testing::det_lu;
using testing::max_entry_distance;

namespace {

std::vector<Complex> sorted_by_angle(std::vector<Complex> values) {
  std::sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
    return std::arg(a) < std::arg(b);
  });
  return values;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("tensor: identity and diagonal cases") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK(max_entry_distance(tensor(i2, i2), ComplexMatrix::Identity(4, 4)) == 0.0);

  ComplexMatrix z(2, 2);
  z << 1, 0, 0, -1;
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 1;
  expected(1, 1) = 1;
  expected(2, 2) = -1;
  expected(3, 3) = -1;
  CHECK(max_entry_distance(tensor(z, i2), expected) == 0.0);
}

TEST_CASE("tensor: top-left entry of the reference local pair") {
  const ComplexMatrix prod = tensor(fixtures::cnot_local_b().matrix(),
                                    fixtures::cnot_local_a().matrix());
  // direct complex multiplication of the stored 4-decimal entries, up to the
  // unitarity projection applied on load
  const Complex expected =
      Complex(0.4057, -0.5795) * Complex(0.6724, 0.7402);
  CHECK(std::abs(expected - Complex(0.70173858, -0.08935666)) < 1e-12);
  CHECK(std::abs(prod(0, 0) - expected) < 2e-4);
}

TEST_CASE("tensor: left fold is the n-fold product") {
  Rng rng(11, 0);
  const ComplexMatrix a = haar_unitary(2, rng).matrix();
  const ComplexMatrix b = haar_unitary(2, rng).matrix();
  const ComplexMatrix c = haar_unitary(2, rng).matrix();
  const ComplexMatrix factors[] = {a, b, c};
  CHECK(max_entry_distance(tensor_all(factors), tensor(tensor(a, b), c)) == 0.0);
}

TEST_CASE("tensor: mixed product and adjoint identities") {
  Rng rng(12, 0);
  for (int round = 0; round < 50; ++round) {
    const ComplexMatrix a = haar_unitary(2, rng).matrix();
    const ComplexMatrix b = haar_unitary(2, rng).matrix();
    const ComplexMatrix c = haar_unitary(2, rng).matrix();
    const ComplexMatrix d = haar_unitary(2, rng).matrix();
    CHECK(max_entry_distance(tensor(a, b) * tensor(c, d),
                             tensor(a * c, b * d)) < 1e-12);
    CHECK(max_entry_distance(tensor(a, b).adjoint(),
                             tensor(a.adjoint(), b.adjoint())) < 1e-14);
  }
}

TEST_CASE("is_unitary: identity, scaled diagonal, reference table") {
  const auto identity = is_unitary(ComplexMatrix::Identity(4, 4), 1e-12);
  CHECK(identity.unitary);
  CHECK(identity.defect == 0.0);

  ComplexMatrix d(2, 2);
  d << 1, 0, 0, 2;
  const auto scaled = is_unitary(d, 1e-6);
  CHECK_FALSE(scaled.unitary);
  CHECK(scaled.defect == doctest::Approx(3.0).epsilon(1e-12));

  // the raw 4-decimal table misses unitarity at the 1e-4 scale
  ComplexMatrix table(2, 2);
  table << Complex(0.6724, 0.7402), Complex(0.0, -0.0016),
      Complex(0.0002, -0.0016), Complex(0.7386, -0.6741);
  const auto check = is_unitary(table, 1e-3);
  CHECK(check.unitary);
  CHECK(check.defect > 1e-5);
  CHECK(check.defect < 2e-4);
}

TEST_CASE("UnitaryGate: validation") {
  CHECK_THROWS_AS(UnitaryGate(ComplexMatrix::Identity(4, 4), {3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(UnitaryGate(ComplexMatrix::Identity(4, 4), {}),
                  std::invalid_argument);
  ComplexMatrix off = ComplexMatrix::Identity(2, 2) * 1.001;
  CHECK_THROWS_AS(UnitaryGate(off, {2}), std::invalid_argument);
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(0, 1) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(UnitaryGate(bad, {2}), std::invalid_argument);

  const UnitaryGate gate(ComplexMatrix::Identity(6, 6), {2, 3});
  CHECK(gate.dim() == 6);
  CHECK(gate.unitarity_defect() == 0.0);
}

TEST_CASE("tensor of gates concatenates partitions") {
  Rng rng(13, 0);
  const UnitaryGate a = haar_unitary(2, rng);
  const UnitaryGate b = haar_unitary(3, rng);
  const UnitaryGate ab = tensor(a, b);
  CHECK(ab.partition() == std::vector<int>{2, 3});
  CHECK(ab.dim() == 6);
}

TEST_CASE("eig_unitary: CNOT and a diagonal gate") {
  const auto cnot_values = sorted_by_angle(eig_unitary(fixtures::cnot()));
  REQUIRE(cnot_values.size() == 4);
  // spectrum {1, 1, 1, -1}: the bit-flip block contributes +-1
  int plus = 0, minus = 0;
  for (const Complex& v : cnot_values) {
    if (std::abs(v - Complex(1, 0)) < 1e-9) ++plus;
    if (std::abs(v - Complex(-1, 0)) < 1e-9) ++minus;
  }
  CHECK(plus == 3);
  CHECK(minus == 1);

  ComplexMatrix diag = ComplexMatrix::Zero(4, 4);
  diag(0, 0) = Complex(1, 0);
  diag(1, 1) = Complex(0, 1);
  diag(2, 2) = Complex(-1, 0);
  diag(3, 3) = Complex(0, -1);
  const auto values = sorted_by_angle(eig_unitary(UnitaryGate(diag, {4})));
  const auto expected =
      sorted_by_angle({Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)});
  for (std::size_t i = 0; i < values.size(); ++i)
    CHECK(std::abs(values[i] - expected[i]) < 1e-12);
}

TEST_CASE("eig_unitary: Haar gates have modulus-1 spectra matching trace and det") {
  Rng rng(14, 0);
  for (int round = 0; round < 20; ++round) {
    const UnitaryGate g = haar_unitary(4, rng);
    const auto values = eig_unitary(g);
    Complex product(1, 0), sum(0, 0);
    for (const Complex& v : values) {
      CHECK(std::abs(std::abs(v) - 1.0) < 1e-8);
      product *= v;
      sum += v;
    }
    CHECK(std::abs(product - det_lu(g.matrix())) < 1e-8);
    CHECK(std::abs(sum - g.matrix().trace()) < 1e-8);
  }
}

TEST_CASE("zyz_unitary: closed-form cases") {
  CHECK(max_entry_distance(zyz_matrix(0, 0, 0, 0),
                           ComplexMatrix::Identity(2, 2)) < 1e-15);

  ComplexMatrix rot(2, 2);
  rot << 0, -1, 1, 0;
  CHECK(max_entry_distance(zyz_matrix(0, 0, kPi, 0), rot) < 1e-12);

  CHECK(max_entry_distance(zyz_matrix(kPi / 2, 0, 0, 0),
                           Complex(0, 1) * ComplexMatrix::Identity(2, 2)) <
        1e-12);
}

TEST_CASE("zyz_unitary: unitary for 1000 random parameter draws") {
  Rng rng(15, 0);
  for (int i = 0; i < 1000; ++i) {
    const double a = kTwoPi * rng.next_double();
    const double b = kTwoPi * rng.next_double();
    const double g = kTwoPi * rng.next_double();
    const double d = kTwoPi * rng.next_double();
    CHECK(zyz_unitary(a, b, g, d).unitarity_defect() <= 1e-12);
  }
}

TEST_CASE("param_unitary: identity, phase, random Hermitian") {
  const double zeros[9] = {};
  CHECK(max_entry_distance(param_unitary(std::span(zeros, 9), 3).matrix(),
                           ComplexMatrix::Identity(3, 3)) < 1e-12);

  const double theta = 0.9;
  const UnitaryGate phase = param_unitary(std::span(&theta, 1), 1);
  CHECK(std::abs(phase.matrix()(0, 0) - std::polar(1.0, theta)) < 1e-15);

  Rng rng(16, 0);
  for (int round = 0; round < 20; ++round) {
    double params[9];
    for (double& p : params) p = 4.0 * rng.next_double() - 2.0;
    CHECK(param_unitary(std::span(params, 9), 3).unitarity_defect() <= 1e-10);
  }

  CHECK_THROWS_AS(param_unitary(std::span(zeros, 4), 3), std::invalid_argument);
}

TEST_CASE("nearest_unitary: projection behavior") {
  Rng rng(17, 0);
  const ComplexMatrix u = haar_unitary(3, rng).matrix();
  const auto self = nearest_unitary(u);
  CHECK(max_entry_distance(self.gate.matrix(), u) < 1e-12);
  CHECK_FALSE(self.flagged);

  const auto scaled = nearest_unitary(2.0 * ComplexMatrix::Identity(2, 2));
  CHECK(max_entry_distance(scaled.gate.matrix(), ComplexMatrix::Identity(2, 2)) <
        1e-12);
  CHECK(scaled.flagged);  // Frobenius correction 2 > 1e-2

  ComplexMatrix table(2, 2);
  table << Complex(0.6724, 0.7402), Complex(0.0, -0.0016),
      Complex(0.0002, -0.0016), Complex(0.7386, -0.6741);
  const auto projected = nearest_unitary(table, {2});
  CHECK(projected.distance <= 1e-3);
  CHECK_FALSE(projected.flagged);
  CHECK(projected.gate.unitarity_defect() <= 1e-12);

  ComplexMatrix singular = ComplexMatrix::Zero(2, 2);
  singular(0, 0) = 1.0;
  CHECK_THROWS_AS(nearest_unitary(singular), std::invalid_argument);
}

TEST_CASE("haar_state: normalization, determinism, first-moment") {
  Rng rng(18, 0);
  for (int i = 0; i < 10; ++i)
    CHECK(std::abs(haar_state(4, rng).amplitudes().norm() - 1.0) <= 1e-12);

  Rng r1(19, 3), r2(19, 3);
  const StateVector s1 = haar_state(5, r1);
  const StateVector s2 = haar_state(5, r2);
  CHECK((s1.amplitudes().array() == s2.amplitudes().array()).all());

  // Haar moment: E |<psi|e1>|^2 = 1/dim
  Rng moments(20, 0);
  double acc = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const Complex first = haar_state(4, moments).amplitudes()(0);
    acc += std::norm(first);
  }
  CHECK(std::abs(acc / n - 0.25) < 0.01);
}

TEST_CASE("haar_unitary: determinism and validity") {
  Rng r1(21, 9), r2(21, 9);
  const UnitaryGate u1 = haar_unitary(4, r1);
  const UnitaryGate u2 = haar_unitary(4, r2);
  CHECK((u1.matrix().array() == u2.matrix().array()).all());
  CHECK(u1.partition() == std::vector<int>{4});
  CHECK(u1.unitarity_defect() <= 1e-12);
}

TEST_CASE("StateVector: rejects non-unit vectors") {
  ComplexVector v(2);
  v << Complex(1, 0), Complex(1, 0);
  CHECK_THROWS_AS(StateVector{v}, std::invalid_argument);
}

}  // TEST_SUITE
