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
#include "hybridbell/model.hpp"

namespace hybridbell::model {
namespace {

using hilbert::AtomLevel;
using hilbert::Complex;
using hilbert::ComplexMatrix;
using hilbert::ComplexVector;

constexpr double kPi = std::numbers::pi;
constexpr auto g = AtomLevel::g;
constexpr auto s = AtomLevel::s;
constexpr auto aux = AtomLevel::aux;

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// N|ψ_η><ψ_η| + sin²θ(1-η)|s,0><s,0| written out term by term.
ComplexMatrix lossy_state_by_hand(double theta, double phi, double eta) {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = std::cos(theta);
  psi(3) = std::polar(std::sin(theta) * std::sqrt(eta), phi);
  ComplexMatrix rho = psi * psi.adjoint();
  rho(2, 2) += std::sin(theta) * std::sin(theta) * (1.0 - eta);
  return rho;
}

TEST(IdealState, NoExcitation) {
  const auto st = ideal_state({0.0, 0.0});
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  EXPECT_LT(max_abs_diff(st.rho(), expected), 1e-15);
}

TEST(IdealState, MaximallyEntangled) {
  const auto st = ideal_state({kPi / 4, 0.0});
  EXPECT_NEAR(st.population(g, 0), 0.5, 1e-15);
  EXPECT_NEAR(st.population(g, 1), 0.0, 1e-15);
  EXPECT_NEAR(st.population(s, 0), 0.0, 1e-15);
  EXPECT_NEAR(st.population(s, 1), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(st.element(g, 0, s, 1) - Complex(0.5)), 0.0, 1e-15);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(st.rho());
  EXPECT_NEAR(es.eigenvalues()(3), 1.0, 1e-12);  // rank one
  EXPECT_NEAR(es.eigenvalues()(2), 0.0, 1e-12);
}

TEST(IdealState, PhaseFlip) {
  const auto st = ideal_state({kPi / 4, kPi});
  EXPECT_NEAR(st.element(g, 0, s, 1).real(), -0.5, 1e-15);
}

TEST(StateParams, Domain) {
  EXPECT_THROW((StateParams{-0.1, 0.0}.validate()), DomainError);
  EXPECT_THROW((StateParams{kPi, 0.0}.validate()), DomainError);
  EXPECT_THROW((StateParams{0.2, 2 * kPi}.validate()), DomainError);
  EXPECT_NO_THROW((StateParams{kPi / 2, 0.0}.validate()));
}

TEST(ApplyLoss, UnitTransmissionIsIdentity) {
  const auto st = ideal_state({0.6, 1.2});
  EXPECT_LT(max_abs_diff(apply_loss(st, 1.0).rho(), st.rho()), 1e-15);
}

TEST(ApplyLoss, FullLossKillsPhotonAndCoherence) {
  const auto out = apply_loss(ideal_state({kPi / 4, 0.0}), 0.0);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 0.5;
  expected(2, 2) = 0.5;
  EXPECT_LT(max_abs_diff(out.rho(), expected), 1e-15);
}

TEST(ApplyLoss, HalfTransmission) {
  const auto out = apply_loss(ideal_state({kPi / 4, 0.0}), 0.5);
  EXPECT_NEAR(out.population(s, 1), 0.25, 1e-15);
  EXPECT_NEAR(out.population(s, 0), 0.25, 1e-15);
  EXPECT_NEAR(out.element(g, 0, s, 1).real(), 0.5 * std::sqrt(0.5), 1e-15);
}

TEST(ApplyLoss, ReproducesTwoTermMixtureOnPureInputs) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> th(0.0, kPi / 2), ph(0.0, 2 * kPi), et(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double theta = th(rng), phi = ph(rng), eta = et(rng);
    const auto out = apply_loss(ideal_state({theta, phi}), eta);
    EXPECT_LT(max_abs_diff(out.rho(), lossy_state_by_hand(theta, phi, eta)), 1e-12);
    EXPECT_TRUE(hilbert::validate_state(out).ok());
  }
}

TEST(ApplyLoss, ComposesMultiplicatively) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto st = trial % 2 == 0
                        ? ideal_state({u(rng) * kPi / 2, u(rng) * 2 * kPi})
                        : branching_state({u(rng) * kPi / 2, u(rng) * 2 * kPi}, 0.5, 0.3, 0.2);
    const double a = u(rng), b = u(rng);
    EXPECT_LT(max_abs_diff(apply_loss(apply_loss(st, a), b).rho(), apply_loss(st, a * b).rho()),
              1e-12);
  }
}

TEST(ApplyLoss, RejectsOutOfRange) {
  const auto st = ideal_state({0.3, 0.0});
  EXPECT_THROW(apply_loss(st, 1.1), DomainError);
  EXPECT_THROW(apply_loss(st, -0.1), DomainError);
}

TEST(BranchingState, PerfectBranchingEmbedsIdealState) {
  const StateParams p{0.7, 2.1};
  const auto big = branching_state(p, 1.0, 0.0, 0.0);
  const auto small = ideal_state(p);
  EXPECT_EQ(big.atom_dim(), 3u);
  EXPECT_LT(max_abs_diff(big.rho().topLeftCorner(4, 4), small.rho()), 1e-15);
  EXPECT_LT(big.rho().bottomRows(2).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(big.rho().rightCols(2).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(BranchingState, NoDecayIntoS) {
  const auto st = branching_state({kPi / 4, 0.0}, 0.0, 0.4, 0.6);
  EXPECT_EQ(st.population(s, 1), 0.0);
  EXPECT_NEAR(st.rho().trace().real(), 1.0, 1e-15);
}

TEST(BranchingState, PopulationsMatchHandExpansion) {
  // θ = π/4: cos²θ = sin²θ = 1/2.
  const auto st = branching_state({kPi / 4, 0.0}, 0.5, 0.3, 0.2);
  EXPECT_NEAR(st.population(g, 0), 0.5 + 0.5 * 0.3, 1e-15);
  EXPECT_NEAR(st.population(s, 1), 0.5 * 0.5, 1e-15);
  EXPECT_NEAR(st.population(aux, 0), 0.5 * 0.2, 1e-15);
  EXPECT_NEAR(st.population(s, 0), 0.0, 1e-15);
  EXPECT_NEAR(st.element(g, 0, s, 1).real(), 0.5 * std::sqrt(0.5), 1e-15);
  EXPECT_TRUE(hilbert::validate_state(st).ok());
}

TEST(BranchingState, UnitTraceForRandomTriples) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    double a = u(rng), b = u(rng), c = u(rng);
    const double sum = a + b + c;
    a /= sum;
    b /= sum;
    c = 1.0 - a - b;
    const auto st = branching_state({u(rng) * kPi / 2, u(rng) * 2 * kPi}, a, b, c);
    const auto report = hilbert::validate_state(st);
    EXPECT_TRUE(report.ok()) << report.describe();
  }
}

TEST(BranchingState, RejectsInvalidRatios) {
  EXPECT_THROW(branching_state({0.3, 0.0}, 0.5, 0.3, 0.3), DomainError);
  EXPECT_THROW(branching_state({0.3, 0.0}, 1.2, -0.2, 0.0), DomainError);
}

TEST(BranchingState, LossActsOnOpticalFactorOnly) {
  // Loss after branching equals building the branched state with the
  // photon amplitude already damped and the lost part moved to |s,0>.
  const double theta = 0.9, phi = 0.4, fs = 0.6, fg = 0.25, faux = 0.15, eta = 0.7;
  const auto out = apply_loss(branching_state({theta, phi}, fs, fg, faux), eta);
  const double sin2 = std::sin(theta) * std::sin(theta);
  EXPECT_NEAR(out.population(s, 1), sin2 * fs * eta, 1e-15);
  EXPECT_NEAR(out.population(s, 0), sin2 * fs * (1 - eta), 1e-15);
  EXPECT_NEAR(out.population(g, 0), std::cos(theta) * std::cos(theta) + sin2 * fg, 1e-15);
  EXPECT_NEAR(out.population(aux, 0), sin2 * faux, 1e-15);
  EXPECT_NEAR(std::abs(out.element(g, 0, s, 1)),
              std::cos(theta) * std::sin(theta) * std::sqrt(fs * eta), 1e-15);
}

TEST(ApplyDephasing, UnitFidelityUnchanged) {
  const auto st = ideal_state({0.4, 0.3});
  EXPECT_LT(max_abs_diff(apply_dephasing(st, 1.0).rho(), st.rho()), 1e-15);
}

TEST(ApplyDephasing, HalfFidelityRemovesCoherence) {
  const auto out = apply_dephasing(ideal_state({kPi / 4, 0.0}), 0.5);
  EXPECT_EQ(std::abs(out.element(g, 0, s, 1)), 0.0);
  EXPECT_EQ(std::abs(out.element(s, 1, g, 0)), 0.0);
}

TEST(ApplyDephasing, ScalesCoherenceLinearly) {
  const auto out = apply_dephasing(ideal_state({kPi / 4, 0.0}), 0.9);
  EXPECT_NEAR(out.element(g, 0, s, 1).real(), 0.4, 1e-15);
}

TEST(ApplyDephasing, EqualsMixtureWithFlippedPhaseOnPureStates) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double theta = u(rng) * kPi / 2, phi = u(rng) * kPi, f = 0.5 + 0.5 * u(rng);
    const ComplexMatrix mix = f * ideal_state({theta, phi}).rho() +
                              (1 - f) * ideal_state({theta, phi + kPi}).rho();
    EXPECT_LT(max_abs_diff(apply_dephasing(ideal_state({theta, phi}), f).rho(), mix), 1e-12);
  }
}

TEST(ApplyDephasing, DiagonalExactlyPreserved) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto st = apply_loss(
        branching_state({u(rng) * kPi / 2, u(rng) * 2 * kPi}, 0.7, 0.2, 0.1), u(rng));
    const auto out = apply_dephasing(st, 0.5 + 0.5 * u(rng));
    for (Eigen::Index i = 0; i < 6; ++i) EXPECT_EQ(out.rho()(i, i), st.rho()(i, i));
  }
}

TEST(ApplyDephasing, CommutesWithLoss) {
  const auto st = ideal_state({0.8, 1.3});
  const auto a = apply_loss(apply_dephasing(st, 0.8), 0.6);
  const auto b = apply_dephasing(apply_loss(st, 0.6), 0.8);
  EXPECT_LT(max_abs_diff(a.rho(), b.rho()), 1e-15);
}

TEST(ApplyDephasing, RejectsOutOfRange) {
  const auto st = ideal_state({0.3, 0.0});
  EXPECT_THROW(apply_dephasing(st, 0.4), DomainError);
  EXPECT_THROW(apply_dephasing(st, 1.01), DomainError);
}

TEST(MotionalFidelity, ForwardCollectionIsPerfect) {
  const TrapParams t{1e-8, 50.0, 7.85e6, 0.0};
  EXPECT_EQ(motional_fidelity(t, FidelityExponent::kAsPrinted), 1.0);
  EXPECT_EQ(motional_fidelity(t, FidelityExponent::kSquared), 1.0);
}

TEST(MotionalFidelity, HotOrLooseTrapApproachesHalf) {
  const TrapParams hot{1e-8, 1e12, 7.85e6, kPi / 2};
  EXPECT_NEAR(motional_fidelity(hot, FidelityExponent::kSquared), 0.5, 1e-12);
  const TrapParams loose{1e-3, 10.0, 7.85e6, kPi / 2};
  EXPECT_NEAR(motional_fidelity(loose, FidelityExponent::kAsPrinted), 0.5, 1e-12);
}

TEST(MotionalFidelity, RegressionBothExponentVariants) {
  // a = 10 nm, n̄ = 10, 800 nm light collected at 90 degrees.
  const TrapParams t{1e-8, 10.0, 2 * kPi / 800e-9, kPi / 2};
  EXPECT_NEAR(momentum_mismatch(t), 7853981.633974483, 1e-6);
  EXPECT_NEAR(motional_fidelity(t, FidelityExponent::kAsPrinted), 0.9999999917533193, 1e-15);
  EXPECT_NEAR(motional_fidelity(t, FidelityExponent::kSquared), 0.9392503573698547, 1e-12);
}

TEST(MotionalFidelity, RejectsNegativeInputs) {
  EXPECT_THROW(motional_fidelity({-1.0, 0.0, 1.0, 0.0}), DomainError);
}

TEST(Prepare, EveryBuilderOutputIsValid) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    Imperfections imp;
    imp.eta_t = u(rng);
    imp.fidelity = 0.5 + 0.5 * u(rng);
    if (trial % 2 == 1) {
      imp.f_s = 0.6 * u(rng);
      imp.f_g = 0.3 * u(rng);
      imp.f_aux = 1.0 - imp.f_s - imp.f_g;
    }
    const auto st = prepare({u(rng) * kPi / 2, u(rng) * 2 * kPi}, imp);
    EXPECT_EQ(st.atom_dim(), trial % 2 == 1 ? 3u : 2u);
    const auto report = hilbert::validate_state(st);
    EXPECT_TRUE(report.ok()) << report.describe();
  }
}

}  // namespace
}  // namespace hybridbell::model
