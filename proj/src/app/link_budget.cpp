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

#include "hybridbell/app/link_budget.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "hybridbell/errors.hpp"

namespace hybridbell::app {

void LinkBudget::validate() const {
  if (!(distance_m >= 0.0) || !(attenuation_db_per_km >= 0.0)) {
    throw DomainError("link budget: distance and attenuation must be non-negative");
  }
  if (!(detection_time_s > 0.0) || !(signal_speed_m_per_s > 0.0)) {
    throw DomainError("link budget: detection time and signal speed must be positive");
  }
}

LocalityReport locality_check(const LinkBudget& lb) {
  lb.validate();
  LocalityReport r;
  r.min_separation_m = lb.detection_time_s * lb.signal_speed_m_per_s;
  r.min_separation_fiber_m = lb.detection_time_s * kFiberGroupSpeed;
  const double loss_db = lb.attenuation_db_per_km * lb.distance_m / 1000.0;
  r.transmission = std::pow(10.0, -loss_db / 10.0);
  r.separation_ok = lb.distance_m >= r.min_separation_m;
  return r;
}

StabilityReport phase_stability(double k_norm_per_m, double delta_l_m,
                                double threshold_rad) {
  if (!(k_norm_per_m >= 0.0) || !(delta_l_m >= 0.0) || !(threshold_rad > 0.0)) {
    throw DomainError(fmt::format(
        "phase_stability: invalid inputs (k = {}, ΔL = {}, threshold = {})",
        k_norm_per_m, delta_l_m, threshold_rad));
  }
  StabilityReport r;
  r.phase_rad = k_norm_per_m * delta_l_m;
  r.threshold_rad = threshold_rad;
  r.pass = r.phase_rad < threshold_rad;
  return r;
}

double wavenumber(double wavelength_m) {
  if (!(wavelength_m > 0.0)) throw DomainError("wavelength must be positive");
  return 2.0 * std::numbers::pi / wavelength_m;
}

}  // namespace hybridbell::app
