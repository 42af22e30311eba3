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

namespace hybridbell::app {

inline constexpr double kVacuumLightSpeed = 299'792'458.0;  // m/s
inline constexpr double kFiberGroupSpeed = 2.0e8;           // m/s

struct LinkBudget {
  double distance_m = 300.0;
  double attenuation_db_per_km = 2.0;
  double detection_time_s = 1e-6;
  double signal_speed_m_per_s = kVacuumLightSpeed;

  void validate() const;
};

struct LocalityReport {
  double min_separation_m = 0.0;        // detection_time * signal_speed
  double min_separation_fiber_m = 0.0;  // same bound at fiber group speed
  double transmission = 1.0;            // 10^(-attenuation * km / 10)
  bool separation_ok = false;           // distance >= min_separation_m
};

LocalityReport locality_check(const LinkBudget& lb);

struct StabilityReport {
  double phase_rad = 0.0;  // |k| * ΔL
  double threshold_rad = 0.1;
  bool pass = false;       // phase_rad < threshold_rad
};

// The interferometer arm difference ΔL must keep |k| ΔL well below one.
StabilityReport phase_stability(double k_norm_per_m, double delta_l_m,
                                double threshold_rad = 0.1);

// |k| = 2π / λ
double wavenumber(double wavelength_m);

}  // namespace hybridbell::app
