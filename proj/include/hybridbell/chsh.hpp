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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybridbell/measure.hpp"
#include "hybridbell/model.hpp"

namespace hybridbell::chsh {

// Every scalar a scenario exposes to configuration, optimization and sweeps.
enum class Param {
  theta,
  phi,
  alpha1,
  varphi1,
  alpha2,
  varphi2,
  zeta1,
  zeta2,
  eta_t,
  eta_d,
  f_s,
  f_g,
  f_aux,
  fidelity,
};
inline constexpr std::size_t kParamCount = 14;

// Configuration name, with the unit suffix for angles ("theta_rad", "eta_t").
std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);
bool is_angle(Param p);

struct FreeParam {
  Param id;
  double lower;
  double upper;
};

// Natural search interval for an angle: θ in [0, π/2], α in [-π, π], all
// phases in [0, 2π].
FreeParam default_bounds(Param p);

// Values of all parameters; NaN for a zeta whose Bob measurement is counting.
using ParamVector = std::array<double, kParamCount>;

struct Scenario {
  std::string id = "scenario";
  model::StateParams state{};
  model::Imperfections imperfections{};
  std::array<measure::AtomSetting, 2> alice{};
  std::array<measure::OpticalMeasurement, 2> bob{measure::Counting{},
                                                 measure::Quadrature{}};
  std::vector<FreeParam> free_params;

  // True when Bob's setting j (0 or 1) is a quadrature measurement.
  bool bob_is_quadrature(std::size_t j) const;
  // Is `p` meaningful for this scenario (zeta_j needs a quadrature on j)?
  bool applies(Param p) const;

  // Throws DomainError for parameters that do not apply. Setting eta_d
  // updates every counting measurement; phases are wrapped into [0, 2π).
  void set(Param p, double value);
  double get(Param p) const;
  ParamVector params() const;

  // Frees every angle of the scenario with default bounds.
  void free_all_angles();

  // Throws DomainError on out-of-domain values or invalid free-parameter
  // bounds.
  void validate() const;
};

// Bob counts photons on Y1 and measures the X quadrature (ζ = 0) on Y2; all
// angles free. Alice and the state start at the maximal-violation settings.
Scenario counting_homodyne_scenario(double eta_t = 1.0, double eta_d = 1.0);

// Bob measures X and P; all angles free. Alice's vectors lie on the equator
// at azimuths -π/4 and +π/4.
Scenario two_homodyne_scenario(double eta_t = 1.0);

// α₁ = -α₂ = 2 arctan((sqrt(π) + sqrt(2 + π)) / sqrt(2)).
double optimal_counting_alpha();

struct OptimizerTrace {
  int starts_attempted = 0;
  int starts_converged = 0;
  long evaluations = 0;
  std::vector<double> best_per_start;
};

struct ChshResult {
  double s_value = 0.0;
  // E(X1,Y1), E(X1,Y2), E(X2,Y1), E(X2,Y2)
  std::array<double, 4> correlators{};
  std::array<measure::ProbTable, 4> tables{};
  Scenario scenario;  // fully specified scenario that produced s_value
  ParamVector params{};
  OptimizerTrace trace;
};

// S = E11 + E12 + E21 - E22
double chsh_combination(const std::array<double, 4>& e);

// Evaluates the scenario at its current parameter values. Free-parameter
// declarations are ignored.
ChshResult evaluate(const Scenario& sc);

struct OptimizerOptions {
  int starts = 64;
  std::uint64_t seed = 2011;
  double param_tol = 1e-8;   // simplex size at convergence
  double value_tol = 1e-10;  // accepted gain between successive restarts
  int max_iterations = 20000;
  // Extra starting points in parameter units, ordered like free_params.
  std::vector<std::vector<double>> initial_points;
};

// Maximizes S over the scenario's free parameters: Nelder-Mead from
// quasi-random (shifted Sobol) starts inside the parameter box. Deterministic
// for a fixed seed. Throws ConvergenceError when no start converges.
ChshResult optimize(const Scenario& sc, const OptimizerOptions& opts = {});

struct ThresholdOptions {
  double lower = 0.0;
  double upper = 1.0;
  double tolerance = 0.005;  // absolute, on the swept parameter
  int scan_points = 7;
  // S* must exceed 2 by this much to count as a violation. Counting
  // scenarios keep S* = 2 below threshold through local strategies.
  double margin = 1e-7;
  OptimizerOptions optimizer{};
};

struct ThresholdSample {
  double value = 0.0;  // swept parameter
  ChshResult optimum;
};

struct ThresholdResult {
  bool found = false;  // false: no change of violation over the interval
  double value = 0.0;
  double bracket_lower = 0.0;
  double bracket_upper = 0.0;
  bool increasing = true;  // violation appears as the parameter grows
  std::vector<ThresholdSample> scan;
  std::vector<ThresholdSample> probes;  // bisection midpoints
};

// Critical value of `sweep` where the optimized S* crosses 2. Every probe
// re-optimizes the scenario's free parameters. The coarse scan must be
// monotone; otherwise DomainError.
ThresholdResult threshold(const Scenario& sc, Param sweep,
                          const ThresholdOptions& opts = {});

struct BranchingSlope {
  double slope = 0.0;
  std::vector<std::pair<double, double>> samples;  // (ε, S(ε))
};

// Strategy for a lossy branching ratio: θ = π/4, φ = 0, ζ = 0, Alice near
// σz at α₁ = π - ε, α₂ = -π + ε with aux reported as -1. Fits
// S = c0 + c1 ε + c2 ε² through ε in {0.02, 0.04, 0.08} and returns c1.
// The remaining decay probability 1 - f_s - f_g goes to aux.
BranchingSlope branching_slope(double f_s, double f_g = 0.0);

// S(ε) for the branching strategy above.
ChshResult branching_strategy(double f_s, double f_g, double epsilon);

struct Figure2Curve {
  std::string label;
  std::optional<double> eta_d;  // empty for the two-homodyne curve
  std::vector<ChshResult> points;
};

struct Figure2Table {
  std::vector<double> eta_t;
  std::vector<Figure2Curve> curves;
};

// Optimized S* against transmission for counting+homodyne at each eta_d and
// (optionally) the two-homodyne scenario. Each grid point also starts from
// its neighbour's optimum.
Figure2Table figure2_sweep(const std::vector<double>& eta_t_grid,
                           const std::vector<double>& eta_d_values,
                           bool include_two_homodyne,
                           const OptimizerOptions& opts = {});

}  // namespace hybridbell::chsh
