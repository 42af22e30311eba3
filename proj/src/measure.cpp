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

#include "hybridbell/measure.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hybridbell/errors.hpp"

namespace hybridbell::measure {

using hilbert::AtomLevel;
using hilbert::ComplexVector;

void AtomSetting::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(varphi)) {
    throw DomainError("AtomSetting: angles must be finite");
  }
  if (aux_outcome != 1 && aux_outcome != -1) {
    throw DomainError(fmt::format(
        "AtomSetting: aux_outcome must be +1 or -1, got {}", aux_outcome));
  }
}

EffectPair atom_effects(const AtomSetting& setting, std::size_t atom_dim) {
  setting.validate();
  if (atom_dim != 2 && atom_dim != 3) {
    throw DomainError(
        fmt::format("atom_effects: atom dimension {} not in {{2, 3}}", atom_dim));
  }
  const auto dim = static_cast<Eigen::Index>(atom_dim);
  ComplexVector v = ComplexVector::Zero(dim);
  v(0) = std::cos(0.5 * setting.alpha);
  v(1) = std::polar(std::sin(0.5 * setting.alpha), setting.varphi);

  ComplexMatrix plus = hilbert::projector(v);
  ComplexMatrix minus = -plus;
  minus(0, 0) += 1.0;
  minus(1, 1) += 1.0;
  if (atom_dim == 3) {
    const auto aux = static_cast<Eigen::Index>(AtomLevel::aux);
    (setting.aux_outcome > 0 ? plus : minus)(aux, aux) += 1.0;
  }
  return EffectPair{std::move(plus), std::move(minus)};
}

EffectPair optical_effects(const OpticalMeasurement& m) {
  if (const auto* c = std::get_if<Counting>(&m)) {
    if (!(c->eta_d >= 0.0 && c->eta_d <= 1.0)) {
      throw DomainError(
          fmt::format("Counting: eta_d = {} is outside [0, 1]", c->eta_d));
    }
    ComplexMatrix click = ComplexMatrix::Zero(2, 2);
    click(1, 1) = c->eta_d;
    ComplexMatrix no_click = ComplexMatrix::Identity(2, 2) - click;
    return EffectPair{std::move(click), std::move(no_click)};
  }
  const auto& q = std::get<Quadrature>(m);
  auto povm = fock::quadrature_povm(fock::QuadratureAngle(q.zeta));
  return EffectPair{std::move(povm.e_plus), std::move(povm.e_minus)};
}

double ProbTable::total() const {
  double sum = 0.0;
  for (const auto& row : p_) {
    for (double v : row) sum += v;
  }
  return sum;
}

namespace {

void check_dims(const HybridState& s, const EffectPair& alice) {
  if (static_cast<std::size_t>(alice.plus.rows()) != s.atom_dim()) {
    throw DomainError(fmt::format(
        "measurement acts on a {}-level atom but the state has {}",
        alice.plus.rows(), s.atom_dim()));
  }
}

}  // namespace

ProbTable joint_probs(const HybridState& s, const AtomSetting& a,
                      const OpticalMeasurement& b) {
  const EffectPair alice = atom_effects(a, s.atom_dim());
  check_dims(s, alice);
  const EffectPair bob = optical_effects(b);
  ProbTable t;
  for (int x : {+1, -1}) {
    const ComplexMatrix& ea = x > 0 ? alice.plus : alice.minus;
    for (int y : {+1, -1}) {
      const ComplexMatrix& eb = y > 0 ? bob.plus : bob.minus;
      t.at(x, y) = hilbert::expectation(s.rho(), hilbert::kron(ea, eb)).real();
    }
  }
  return t;
}

double correlator(const ProbTable& t) {
  return t(+1, +1) + t(-1, -1) - t(+1, -1) - t(-1, +1);
}

double correlator(const HybridState& s, const AtomSetting& a,
                  const OpticalMeasurement& b) {
  const EffectPair alice = atom_effects(a, s.atom_dim());
  check_dims(s, alice);
  const ComplexMatrix obs =
      hilbert::kron(alice.observable(), optical_effects(b).observable());
  return hilbert::expectation(s.rho(), obs).real();
}

double correlator_closed_form(const model::StateParams& p,
                              const AtomSetting& a,
                              const OpticalMeasurement& b) {
  if (const auto* c = std::get_if<Counting>(&b)) {
    if (c->eta_d != 1.0) {
      throw DomainError(
          "correlator_closed_form: only defined for an ideal counter");
    }
    return -std::cos(a.alpha);
  }
  const auto& q = std::get<Quadrature>(b);
  return fock::homodyne_visibility() * std::sin(a.alpha) *
         std::sin(2.0 * p.theta) * std::cos(a.varphi - p.phi + q.zeta);
}

}  // namespace hybridbell::measure
