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

#include "hybridbell/model.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "hybridbell/errors.hpp"

namespace hybridbell::model {

using hilbert::AtomLevel;
using hilbert::basis_index;
using hilbert::ComplexMatrix;
using hilbert::ComplexVector;

namespace {

constexpr double kProbTol = 1e-12;

void check_probability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError(
        fmt::format("{} = {} is outside [0, 1]", name, value));
  }
}

Eigen::Index idx(AtomLevel level, std::size_t n) {
  return static_cast<Eigen::Index>(basis_index(level, n));
}

}  // namespace

void StateParams::validate() const {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2)) {
    throw DomainError(fmt::format("theta = {} is outside [0, π/2]", theta));
  }
  if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
    throw DomainError(fmt::format("phi = {} is outside [0, 2π)", phi));
  }
}

void Imperfections::validate() const {
  check_probability(eta_t, "eta_t");
  check_probability(eta_d, "eta_d");
  check_probability(f_s, "f_s");
  check_probability(f_g, "f_g");
  check_probability(f_aux, "f_aux");
  if (std::abs(f_s + f_g + f_aux - 1.0) > kProbTol) {
    throw DomainError(fmt::format(
        "branching ratios must sum to 1, got f_s + f_g + f_aux = {}",
        f_s + f_g + f_aux));
  }
  if (!(fidelity >= 0.5 && fidelity <= 1.0)) {
    throw DomainError(
        fmt::format("fidelity = {} is outside [1/2, 1]", fidelity));
  }
}

HybridState ideal_state(const StateParams& p) {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(idx(AtomLevel::g, 0)) = std::cos(p.theta);
  psi(idx(AtomLevel::s, 1)) = std::polar(std::sin(p.theta), p.phi);
  return HybridState(2, hilbert::projector(psi));
}

HybridState apply_loss(const HybridState& s, double eta_t) {
  check_probability(eta_t, "eta_t");
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(eta_t);
  ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
  k1(0, 1) = std::sqrt(1.0 - eta_t);

  const auto atom_id = ComplexMatrix::Identity(
      static_cast<Eigen::Index>(s.atom_dim()),
      static_cast<Eigen::Index>(s.atom_dim()));
  const ComplexMatrix big0 = hilbert::kron(atom_id, k0);
  const ComplexMatrix big1 = hilbert::kron(atom_id, k1);
  ComplexMatrix out = big0 * s.rho() * big0.adjoint() +
                      big1 * s.rho() * big1.adjoint();
  return HybridState(s.atom_dim(), std::move(out));
}

HybridState branching_state(const StateParams& p, double f_s, double f_g,
                            double f_aux) {
  check_probability(f_s, "f_s");
  check_probability(f_g, "f_g");
  check_probability(f_aux, "f_aux");
  if (std::abs(f_s + f_g + f_aux - 1.0) > kProbTol) {
    throw DomainError(fmt::format(
        "branching ratios must sum to 1, got f_s + f_g + f_aux = {}",
        f_s + f_g + f_aux));
  }
  const double sin2 = std::sin(p.theta) * std::sin(p.theta);

  ComplexVector psi = ComplexVector::Zero(6);
  psi(idx(AtomLevel::g, 0)) = std::cos(p.theta);
  psi(idx(AtomLevel::s, 1)) =
      std::polar(std::sin(p.theta) * std::sqrt(f_s), p.phi);
  ComplexMatrix rho = hilbert::projector(psi);
  rho(idx(AtomLevel::g, 0), idx(AtomLevel::g, 0)) += sin2 * f_g;
  rho(idx(AtomLevel::aux, 0), idx(AtomLevel::aux, 0)) += sin2 * f_aux;
  return HybridState(3, std::move(rho));
}

HybridState apply_dephasing(const HybridState& s, double fidelity) {
  if (!(fidelity >= 0.5 && fidelity <= 1.0)) {
    throw DomainError(
        fmt::format("fidelity = {} is outside [1/2, 1]", fidelity));
  }
  const double contrast = 2.0 * fidelity - 1.0;
  ComplexMatrix out = s.rho();
  const auto dim = static_cast<Eigen::Index>(s.dim());
  const auto is_s = [](Eigen::Index i) {
    return static_cast<std::size_t>(i) / hilbert::kModeDim ==
           static_cast<std::size_t>(AtomLevel::s);
  };
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (is_s(i) != is_s(j)) out(i, j) *= contrast;
    }
  }
  return HybridState(s.atom_dim(), std::move(out));
}

double momentum_mismatch(const TrapParams& t) {
  return t.k_norm * (1.0 - std::cos(t.emission_angle));
}

double motional_fidelity(const TrapParams& t, FidelityExponent variant) {
  if (t.ground_state_size < 0.0 || t.n_bar < 0.0 || t.k_norm < 0.0 ||
      t.emission_angle < 0.0) {
    throw DomainError("motional_fidelity: trap parameters must be non-negative");
  }
  const double dk = momentum_mismatch(t);
  const double dk_term = variant == FidelityExponent::kSquared ? dk * dk : dk;
  const double a2 = t.ground_state_size * t.ground_state_size;
  return 0.5 * (1.0 + std::exp(-2.0 * a2 * (t.n_bar + 0.5) * dk_term));
}

HybridState prepare(const StateParams& p, const Imperfections& imp) {
  imp.validate();
  HybridState s = imp.needs_branching()
                      ? branching_state(p, imp.f_s, imp.f_g, imp.f_aux)
                      : ideal_state(p);
  if (imp.fidelity != 1.0) s = apply_dephasing(s, imp.fidelity);
  if (imp.eta_t != 1.0) s = apply_loss(s, imp.eta_t);
  return s;
}

}  // namespace hybridbell::model
