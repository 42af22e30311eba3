// Copyright 2026 The hybridbell Authors
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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "hybridbell/errors.hpp"
#include "hybridbell/hilbert.hpp"
#include "hybridbell/model.hpp"

namespace hybridbell::hilbert {
namespace {

ComplexMatrix pauli_z() {
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return z;
}

ComplexMatrix random_integer_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> d(-4, 4);
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(d(rng), d(rng));
  return m;
}

ComplexMatrix random_density(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(n(rng), n(rng));
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace();
}

ComplexMatrix random_hermitian(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(n(rng), n(rng));
  return 0.5 * (g + g.adjoint());
}

TEST(Kron, IdentityTimesIdentity) {
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  EXPECT_TRUE(kron(id2, id2).isApprox(ComplexMatrix::Identity(4, 4)));
}

TEST(Kron, BasisBookkeeping) {
  const ComplexMatrix p =
      kron(projector(basis_vector(2, 0)), projector(basis_vector(2, 1)));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(1, 1) = 1.0;
  EXPECT_EQ(p, expected);
}

TEST(Kron, SigmaZTensorIdentityDiagonal) {
  const ComplexMatrix m = kron(pauli_z(), ComplexMatrix::Identity(2, 2));
  const Eigen::VectorXcd diag = m.diagonal();
  EXPECT_EQ(diag(0), Complex(1.0));
  EXPECT_EQ(diag(1), Complex(1.0));
  EXPECT_EQ(diag(2), Complex(-1.0));
  EXPECT_EQ(diag(3), Complex(-1.0));
}

TEST(Kron, DimensionsMultiply) {
  std::mt19937_64 rng(3);
  const auto m = kron(random_integer_matrix(rng, 2, 3), random_integer_matrix(rng, 3, 1));
  EXPECT_EQ(m.rows(), 6);
  EXPECT_EQ(m.cols(), 3);
}

TEST(Kron, AssociativeOnIntegerMatrices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_integer_matrix(rng, 2, 2);
    const auto b = random_integer_matrix(rng, 1 + trial % 3, 2);
    const auto c = random_integer_matrix(rng, 2, 1 + trial % 2);
    EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
  }
}

TEST(Expectation, MaximallyMixedSigmaZ) {
  const ComplexMatrix rho = 0.5 * ComplexMatrix::Identity(2, 2);
  EXPECT_NEAR(std::abs(expectation(rho, pauli_z())), 0.0, 1e-15);
}

TEST(Expectation, ProjectorOnOwnState) {
  const ComplexMatrix p = projector(basis_vector(2, 0));
  EXPECT_NEAR(expectation(p, p).real(), 1.0, 1e-15);
}

TEST(Expectation, GroundPopulationOfMaximallyEntangledState) {
  const auto s = model::ideal_state({std::numbers::pi / 4, 0.0});
  const ComplexMatrix g0 = projector(basis_vector(4, basis_index(AtomLevel::g, 0)));
  const Complex e = expectation(s.rho(), g0);
  EXPECT_NEAR(e.real(), 0.5, 1e-12);
  EXPECT_NEAR(e.imag(), 0.0, 1e-12);
}

TEST(Expectation, DimensionMismatchThrows) {
  EXPECT_THROW(expectation(ComplexMatrix::Identity(4, 4), ComplexMatrix::Identity(2, 2)),
               DomainError);
  EXPECT_THROW(expectation(ComplexMatrix::Identity(2, 3), ComplexMatrix::Identity(2, 2)),
               DomainError);
}

TEST(Expectation, LinearAndRealForHermitianObservables) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = trial % 2 == 0 ? 4 : 6;
    const auto rho = random_density(rng, dim);
    const auto a = random_hermitian(rng, dim);
    const auto b = random_hermitian(rng, dim);
    const Complex lhs = expectation(rho, a + b);
    const Complex rhs = expectation(rho, a) + expectation(rho, b);
    EXPECT_LT(std::abs(lhs - rhs), 1e-12);
    EXPECT_LT(std::abs(expectation(rho, a).imag()), 1e-12);
  }
}

TEST(ValidateState, PureStatePasses) {
  const auto s = model::ideal_state({0.3, 1.1});
  const auto r = validate_state(s);
  EXPECT_TRUE(r.ok()) << r.describe();
}

TEST(ValidateState, ReportsTraceDeviation) {
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  rho(0, 0) = 0.9;
  const auto r = validate_state(HybridState(2, rho));
  EXPECT_FALSE(r.unit_trace);
  EXPECT_TRUE(r.hermitian);
  EXPECT_TRUE(r.positive);
  EXPECT_NEAR(r.trace_deviation, 0.1, 1e-15);
  EXPECT_FALSE(r.ok());
}

TEST(ValidateState, FlagsNonHermitianPerturbation) {
  ComplexMatrix rho = model::ideal_state({std::numbers::pi / 4, 0.0}).rho();
  rho(0, 3) += 1e-6;
  const auto r = validate_state(rho);
  EXPECT_FALSE(r.hermitian);
  EXPECT_NEAR(r.hermiticity_deviation, 1e-6, 1e-12);
}

TEST(ValidateState, FlagsNegativeEigenvalue) {
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  rho(0, 0) = 1.2;
  rho(1, 1) = -0.2;
  const auto r = validate_state(rho);
  EXPECT_TRUE(r.unit_trace);
  EXPECT_FALSE(r.positive);
  EXPECT_NEAR(r.min_eigenvalue, -0.2, 1e-12);
}

TEST(ValidateState, FlagsNonFinite) {
  ComplexMatrix rho = ComplexMatrix::Identity(4, 4) / 4.0;
  rho(2, 2) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_FALSE(validate_state(rho).finite);
}

TEST(HybridState, RejectsWrongShapes) {
  EXPECT_THROW(HybridState(2, ComplexMatrix::Identity(6, 6)), DomainError);
  EXPECT_THROW(HybridState(4, ComplexMatrix::Identity(8, 8)), DomainError);
  EXPECT_NO_THROW(HybridState(3, ComplexMatrix::Identity(6, 6) / 6.0));
}

TEST(IsPsd, ZeroEigenvaluesAccepted) {
  ComplexMatrix p = ComplexMatrix::Zero(3, 3);
  p(1, 1) = 1.0;
  EXPECT_TRUE(is_psd(p));
  p(2, 2) = -1e-9;
  EXPECT_FALSE(is_psd(p));
}

}  // namespace
}  // namespace hybridbell::hilbert
