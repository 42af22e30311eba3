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
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "hybridbell/errors.hpp"
#include "hybridbell/fock.hpp"

namespace hybridbell::fock {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Phi, VacuumAtOrigin) { EXPECT_NEAR(phi(0, 0.0), 0.7511255444649425, 1e-15); }

TEST(Phi, SinglePhotonVanishesAtOrigin) { EXPECT_EQ(phi(1, 0.0), 0.0); }

TEST(Phi, Parity) {
  for (double x : {0.1, 0.7, 1.3, 2.9, 5.0}) {
    EXPECT_DOUBLE_EQ(phi(0, x), phi(0, -x));
    EXPECT_DOUBLE_EQ(phi(1, x), -phi(1, -x));
  }
}

TEST(Phi, MatchesExplicitGaussianForms) {
  for (double x : {-2.0, -0.5, 0.25, 1.5}) {
    const double g = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    EXPECT_NEAR(phi(0, x), g, 1e-15);
    EXPECT_NEAR(phi(1, x), std::sqrt(2.0) * x * g, 1e-15);
  }
}

TEST(Phi, RejectsUnsupportedPhotonNumber) {
  EXPECT_THROW(phi(2, 0.0), DomainError);
  EXPECT_THROW(phi(-1, 0.0), DomainError);
  EXPECT_THROW(phi(0, std::nan("")), DomainError);
}

TEST(Phi, NormalizedAccordingToOracle) {
  // Each half-line carries half the norm for both wavefunctions.
  for (int n : {0, 1}) {
    EXPECT_NEAR(2.0 * oracle_halfline(n, n, 0.0).value.real(), 1.0, 1e-10);
  }
}

TEST(HalfLineOverlap, DiagonalHalves) {
  EXPECT_EQ(halfline_overlap(0, 0), 0.5);
  EXPECT_EQ(halfline_overlap(1, 1), 0.5);
}

TEST(HalfLineOverlap, CrossTermAgreesWithOracle) {
  EXPECT_NEAR(halfline_overlap(0, 1), -0.3989422804014327, 1e-15);
  EXPECT_NEAR(halfline_overlap(1, 0), halfline_overlap(0, 1), 0.0);
  EXPECT_NEAR(oracle_halfline(0, 1, 0.0).value.real(), halfline_overlap(0, 1), 1e-10);
}

TEST(HalfLineOverlap, RejectsUnsupportedIndex) {
  EXPECT_THROW(halfline_overlap(0, 2), DomainError);
  EXPECT_THROW(oracle_halfline(3, 0, 0.0), DomainError);
}

TEST(QuadratureAngle, Canonicalized) {
  EXPECT_NEAR(QuadratureAngle(-kPi / 2).radians(), 3 * kPi / 2, 1e-15);
  EXPECT_NEAR(QuadratureAngle(5 * kPi).radians(), kPi, 1e-12);
  EXPECT_EQ(QuadratureAngle(0.0).radians(), 0.0);
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(QuadratureAngle{inf}, DomainError);
}

TEST(QuadraturePovm, XQuadratureOffDiagonal) {
  const auto povm = quadrature_povm(QuadratureAngle(0.0));
  EXPECT_NEAR(povm.e_minus(0, 1).real(), -1.0 / std::sqrt(2 * kPi), 1e-15);
  EXPECT_NEAR(povm.e_minus(0, 1).imag(), 0.0, 1e-15);
}

TEST(QuadraturePovm, CompleteHalfDiagonalAndPositive) {
  for (int k = 0; k < 16; ++k) {
    const double zeta = 2 * kPi * k / 16 + 0.01;
    const auto povm = quadrature_povm(QuadratureAngle(zeta));
    EXPECT_TRUE((povm.e_minus + povm.e_plus).isApprox(ComplexMatrix::Identity(2, 2), 1e-12));
    EXPECT_NEAR(povm.e_minus(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(povm.e_minus(1, 1).real(), 0.5, 1e-15);
    EXPECT_TRUE(hilbert::is_psd(povm.e_minus));
    EXPECT_TRUE(hilbert::is_psd(povm.e_plus));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(povm.e_minus);
    EXPECT_NEAR(es.eigenvalues()(0), 0.5 - 1 / std::sqrt(2 * kPi), 1e-12);
    EXPECT_NEAR(es.eigenvalues()(1), 0.5 + 1 / std::sqrt(2 * kPi), 1e-12);
  }
}

TEST(QuadraturePovm, VisibilityIsSqrtTwoOverPi) {
  for (int k = 0; k < 16; ++k) {
    const auto povm = quadrature_povm(QuadratureAngle(2 * kPi * k / 16));
    EXPECT_NEAR(2.0 * std::abs(povm.e_minus(0, 1)), std::sqrt(2 / kPi), 1e-10);
  }
  EXPECT_NEAR(homodyne_visibility(), std::sqrt(2 / kPi), 1e-15);
}

TEST(QuadraturePovm, MatchesOracleEntrywise) {
  for (int k = 0; k < 16; ++k) {
    const double zeta = 2 * kPi * k / 16;
    const auto povm = quadrature_povm(QuadratureAngle(zeta));
    for (int m = 0; m < 2; ++m) {
      for (int n = 0; n < 2; ++n) {
        const auto o = oracle_halfline(m, n, zeta);
        EXPECT_LT(std::abs(o.value - povm.e_minus(m, n)), 1e-9)
            << "zeta=" << zeta << " m=" << m << " n=" << n;
        EXPECT_LE(o.abs_error, 1e-10);
      }
    }
  }
}

TEST(Oracle, Hermitian) {
  for (double zeta : {0.0, 0.4, 2.2, 5.9}) {
    const auto a = oracle_halfline(1, 0, zeta).value;
    const auto b = oracle_halfline(0, 1, zeta).value;
    EXPECT_NEAR(std::abs(a - std::conj(b)), 0.0, 1e-12);
    EXPECT_NEAR(oracle_halfline(0, 0, zeta).value.real(), 0.5, 1e-10);
  }
}

}  // namespace
}  // namespace hybridbell::fock
