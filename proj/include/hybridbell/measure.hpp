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

#pragma once

#include <array>
#include <variant>

#include "hybridbell/fock.hpp"
#include "hybridbell/hilbert.hpp"
#include "hybridbell/model.hpp"

namespace hybridbell::measure {

using hilbert::ComplexMatrix;
using hilbert::HybridState;

// Alice's projective measurement along
//   v = cos(α/2)|g> + e^{iϕ} sin(α/2)|s>,
// outcome +1 along v and -1 along v⊥. If the atom is found in aux the
// result is aux_outcome.
struct AtomSetting {
  double alpha = 0.0;
  double varphi = 0.0;
  int aux_outcome = -1;

  void validate() const;
};

// Photon counting: +1 on a click, -1 on no click.
struct Counting {
  double eta_d = 1.0;
};

// Homodyne on cos(ζ)X + sin(ζ)P binned by sign: -1 for x <= 0.
struct Quadrature {
  double zeta = 0.0;
};

using OpticalMeasurement = std::variant<Counting, Quadrature>;

// Effects for outcome +1 and -1.
struct EffectPair {
  ComplexMatrix plus;
  ComplexMatrix minus;

  // plus - minus
  ComplexMatrix observable() const { return plus - minus; }
};

EffectPair atom_effects(const AtomSetting& setting, std::size_t atom_dim);
EffectPair optical_effects(const OpticalMeasurement& m);

// Joint outcome probabilities p(a, b), a, b in {+1, -1}.
class ProbTable {
 public:
  ProbTable() = default;
  double operator()(int a, int b) const { return p_[slot(a)][slot(b)]; }
  double& at(int a, int b) { return p_[slot(a)][slot(b)]; }

  double total() const;
  double alice_marginal(int a) const { return (*this)(a, +1) + (*this)(a, -1); }
  double bob_marginal(int b) const { return (*this)(+1, b) + (*this)(-1, b); }

 private:
  static std::size_t slot(int outcome) { return outcome > 0 ? 0 : 1; }
  std::array<std::array<double, 2>, 2> p_{};
};

ProbTable joint_probs(const HybridState& s, const AtomSetting& a,
                      const OpticalMeasurement& b);

// E = p(a = b) - p(a != b).
double correlator(const ProbTable& t);

// Same correlator computed as Tr[ρ (A₊ - A₋) ⊗ (B₊ - B₋)] without building
// the probability table. This is the path the optimizer uses.
double correlator(const HybridState& s, const AtomSetting& a,
                  const OpticalMeasurement& b);

// Analytic correlators for the lossless two-level state:
//   counting:   -cos α                              (any θ, φ)
//   quadrature: sqrt(2/π) sin α sin 2θ cos(ϕ - φ + ζ)
// Throws DomainError for counting with eta_d != 1, which the closed form does
// not cover.
double correlator_closed_form(const model::StateParams& p,
                              const AtomSetting& a,
                              const OpticalMeasurement& b);

}  // namespace hybridbell::measure
