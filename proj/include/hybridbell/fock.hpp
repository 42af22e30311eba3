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

namespace hybridbell::fock {

using hilbert::Complex;
using hilbert::ComplexMatrix;

// Highest photon number represented. Every state in this library lives in
// span{|0>, |1>}; loss only moves population downwards.
inline constexpr int kMaxPhotons = 1;

// Homodyne quadrature angle, canonicalized into [0, 2π). The measured
// observable is cos(ζ) X + sin(ζ) P.
class QuadratureAngle {
 public:
  explicit QuadratureAngle(double zeta);
  double radians() const { return zeta_; }

 private:
  double zeta_;
};

// Φ_n(x) = H_n(x) exp(-x²/2) / sqrt(2^n n! sqrt(π)).
// Throws DomainError for n outside {0, 1} or non-finite x.
double phi(int n, double x);

// ∫_{-∞}^{0} Φ_m(x) Φ_n(x) dx, evaluated in closed form.
double halfline_overlap(int m, int n);

// Sign-binned homodyne POVM on the {|0>,|1>} mode: outcome -1 for x <= 0,
// outcome +1 for x > 0.
//
// The quadrature eigenstate is |x_ζ> = exp(iζ n̂)|x>, so
//   <m|E₋(ζ)|n> = exp(iζ(m - n)) ∫_{-∞}^{0} Φ_m Φ_n dx,
// giving <0|E₋|1> = -exp(-iζ)/sqrt(2π). With this convention the binned
// observable E₊ - E₋ equals sqrt(2/π)(cos ζ σx + sin ζ σy) in the photon
// basis.
struct HalfLinePovm {
  QuadratureAngle zeta;
  ComplexMatrix e_minus;
  ComplexMatrix e_plus;
};

HalfLinePovm quadrature_povm(QuadratureAngle zeta);

// Contrast of the binned homodyne observable relative to an ideal
// qubit measurement in the x-y plane.
double homodyne_visibility();

struct OracleResult {
  Complex value;
  double abs_error = 0.0;  // estimated by the adaptive integrator
};

// Independent numerical check of <m|E₋(ζ)|n>: integrates the phase-rotated
// wavefunctions on [-10, 0] with adaptive Gauss-Kronrod refinement to an
// absolute tolerance of 1e-10. Hermite polynomials are produced by the
// three-term recurrence, not by phi(). Throws ConvergenceError when the
// integrator cannot meet the tolerance.
OracleResult oracle_halfline(int m, int n, double zeta);

}  // namespace hybridbell::fock
