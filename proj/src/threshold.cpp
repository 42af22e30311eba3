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

#include <fmt/format.h>

#include "hybridbell/chsh.hpp"
#include "hybridbell/errors.hpp"

namespace hybridbell::chsh {

namespace {

constexpr double kLocalBound = 2.0;
// Slack for optimizer noise when checking the coarse scan for monotonicity.
constexpr double kMonotoneSlack = 1e-7;

std::vector<double> free_values(const ChshResult& r) {
  std::vector<double> out;
  for (const auto& fp : r.scenario.free_params) out.push_back(r.scenario.get(fp.id));
  return out;
}

}  // namespace

ThresholdResult threshold(const Scenario& sc, Param sweep,
                          const ThresholdOptions& opts) {
  if (is_angle(sweep) || sweep == Param::f_s || sweep == Param::f_g ||
      sweep == Param::f_aux) {
    throw DomainError(fmt::format("threshold: cannot sweep {}", param_name(sweep)));
  }
  for (const auto& fp : sc.free_params) {
    if (fp.id == sweep) {
      throw DomainError(fmt::format(
          "threshold: swept parameter {} is also free", param_name(sweep)));
    }
  }
  const double lo_domain = sweep == Param::fidelity ? 0.5 : 0.0;
  if (!(opts.lower >= lo_domain && opts.upper <= 1.0 && opts.lower < opts.upper)) {
    throw DomainError(fmt::format("threshold: invalid sweep interval [{}, {}]",
                                  opts.lower, opts.upper));
  }
  if (opts.scan_points < 2 || !(opts.tolerance > 0.0)) {
    throw DomainError("threshold: need at least 2 scan points and a positive tolerance");
  }

  Scenario work = sc;
  auto sample = [&](double value) {
    work.set(sweep, value);
    return ThresholdSample{value, optimize(work, opts.optimizer)};
  };
  auto violates = [&](double s) { return s > kLocalBound + opts.margin; };

  ThresholdResult out;
  for (int k = 0; k < opts.scan_points; ++k) {
    const double v = std::lerp(opts.lower, opts.upper,
                               static_cast<double>(k) / (opts.scan_points - 1));
    out.scan.push_back(sample(v));
  }

  bool non_decreasing = true;
  bool non_increasing = true;
  for (std::size_t k = 1; k < out.scan.size(); ++k) {
    const double d = out.scan[k].optimum.s_value - out.scan[k - 1].optimum.s_value;
    if (d < -kMonotoneSlack) non_decreasing = false;
    if (d > kMonotoneSlack) non_increasing = false;
  }
  if (!non_decreasing && !non_increasing) {
    throw DomainError(fmt::format(
        "threshold: optimized S is not monotone in {} over [{}, {}]",
        param_name(sweep), opts.lower, opts.upper));
  }

  // Adjacent scan points whose violation status differs.
  std::size_t flip = out.scan.size();
  for (std::size_t k = 1; k < out.scan.size(); ++k) {
    if (violates(out.scan[k].optimum.s_value) !=
        violates(out.scan[k - 1].optimum.s_value)) {
      flip = k;
      break;
    }
  }
  if (flip == out.scan.size()) return out;

  double a = out.scan[flip - 1].value;
  double b = out.scan[flip].value;
  const bool a_violates = violates(out.scan[flip - 1].optimum.s_value);
  out.increasing = !a_violates;
  while (b - a > opts.tolerance) {
    const double mid = 0.5 * (a + b);
    out.probes.push_back(sample(mid));
    if (violates(out.probes.back().optimum.s_value) == a_violates) {
      a = mid;
    } else {
      b = mid;
    }
  }
  out.found = true;
  out.bracket_lower = a;
  out.bracket_upper = b;
  out.value = 0.5 * (a + b);
  return out;
}

Figure2Table figure2_sweep(const std::vector<double>& eta_t_grid,
                           const std::vector<double>& eta_d_values,
                           bool include_two_homodyne,
                           const OptimizerOptions& opts) {
  for (double e : eta_t_grid) {
    if (!(e >= 0.0 && e <= 1.0)) {
      throw DomainError(fmt::format("figure2_sweep: eta_t = {} outside [0, 1]", e));
    }
  }
  Figure2Table table;
  table.eta_t = eta_t_grid;

  auto sweep_curve = [&](Figure2Curve curve, auto make_scenario,
                         const Figure2Curve* reference) {
    const ChshResult* previous = nullptr;
    for (std::size_t k = 0; k < eta_t_grid.size(); ++k) {
      Scenario sc = make_scenario(eta_t_grid[k]);
      OptimizerOptions o = opts;
      if (previous != nullptr) o.initial_points.push_back(free_values(*previous));
      if (reference != nullptr) {
        o.initial_points.push_back(free_values(reference->points[k]));
      }
      curve.points.push_back(optimize(sc, o));
      previous = &curve.points.back();
    }
    return curve;
  };

  table.curves.reserve(eta_d_values.size() + 1);
  const Figure2Curve* reference = nullptr;
  for (double eta_d : eta_d_values) {
    Figure2Curve curve{fmt::format("counting_eta_d_{}", eta_d), eta_d, {}};
    curve.points.reserve(eta_t_grid.size());
    table.curves.push_back(sweep_curve(
        std::move(curve),
        [eta_d](double eta_t) { return counting_homodyne_scenario(eta_t, eta_d); },
        reference));
    reference = &table.curves.back();
  }
  if (include_two_homodyne) {
    Figure2Curve curve{"two_homodyne", std::nullopt, {}};
    curve.points.reserve(eta_t_grid.size());
    table.curves.push_back(sweep_curve(
        std::move(curve), [](double eta_t) { return two_homodyne_scenario(eta_t); },
        nullptr));
  }
  return table;
}

}  // namespace hybridbell::chsh
