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

#include "hybridbell/hilbert.hpp"

namespace hybridbell::model {

using hilbert::HybridState;

// Parameters of cos θ |g,0> + e^{iφ} sin θ |s,1>. θ is half the pump pulse
// area, φ the emission phase.
struct StateParams {
  double theta = 0.0;  // [0, π/2]
  double phi = 0.0;    // [0, 2π)

  // Throws DomainError when either angle is outside its range.
  void validate() const;
};

struct Imperfections {
  double eta_t = 1.0;  // transmission efficiency
  double eta_d = 1.0;  // photon-counting detector efficiency
  double f_s = 1.0;    // branching ratio e -> s
  double f_g = 0.0;    // branching ratio e -> g
  double f_aux = 0.0;  // branching ratio e -> auxiliary levels
  double fidelity = 1.0;  // motional fidelity F in [1/2, 1]

  void validate() const;
  // True when any decay leaves the {g, s} subspace-with-photon picture,
  // i.e. the three-level atom is required.
  bool needs_branching() const { return f_g != 0.0 || f_aux != 0.0; }
};

// Trapped-atom motion. emission_angle is the angle between the pump beam and
// the collected emission (not the pulse area).
struct TrapParams {
  double ground_state_size = 0.0;  // a = sqrt(ħ / 2mω), meters
  double n_bar = 0.0;              // mean thermal phonon number
  double k_norm = 0.0;             // |k|, 1/meters
  double emission_angle = 0.0;     // radians
};

// The motional fidelity exponent as printed is -2a²(n̄+½)Δk, which is not
// dimensionless; the literature form uses Δk².
enum class FidelityExponent { kAsPrinted, kSquared };

HybridState ideal_state(const StateParams& p);

// Amplitude damping of the optical mode with Kraus operators
// K0 = |0><0| + sqrt(η)|1><1| and K1 = sqrt(1-η)|0><1|, acting as 1 ⊗ K.
HybridState apply_loss(const HybridState& s, double eta_t);

// Three-level atom (g, s, aux):
//   N'|ψ_fs><ψ_fs| + sin²θ f_g |g,0><g,0| + sin²θ f_aux |aux,0><aux,0|
// where sqrt(N') ψ_fs = cos θ |g,0> + e^{iφ} sin θ sqrt(f_s) |s,1>.
HybridState branching_state(const StateParams& p, double f_s, double f_g,
                            double f_aux);

// F ρ + (1-F) Z ρ Z with Z the sign flip of atomic level s. Every coherence
// between s and the other atomic levels is scaled by 2F - 1; populations are
// untouched. On a pure ψ^φ this is F|ψ^φ><ψ^φ| + (1-F)|ψ^{φ+π}><ψ^{φ+π}|.
HybridState apply_dephasing(const HybridState& s, double fidelity);

// Δk = |k|(1 - cos(emission_angle)).
double momentum_mismatch(const TrapParams& t);

// F = ½(1 + exp(-2a²(n̄+½)Δk)) or, for kSquared, with Δk².
double motional_fidelity(const TrapParams& t,
                         FidelityExponent variant = FidelityExponent::kAsPrinted);

// Prepares the state for the given parameters and pushes it through every
// imperfection channel: branching (when needed), dephasing, then loss.
HybridState prepare(const StateParams& p, const Imperfections& imp);

}  // namespace hybridbell::model
