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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hybridbell/chsh.hpp"

namespace hybridbell::app {

struct ThresholdSpec {
  std::optional<chsh::Param> param;
  double lower = 0.0;
  double upper = 1.0;
  double tolerance = 0.005;
  int scan_points = 7;
};

struct Fig2Spec {
  std::vector<double> eta_t_grid;
  std::vector<double> eta_d_values{1.0, 0.8, 0.6, 0.4};
  bool two_homodyne = true;
};

// One experiment description. Every section is optional; omitted values
// keep the defaults of chsh::Scenario (ideal maximally entangled state,
// counting + X-quadrature, nothing free).
struct RunConfig {
  chsh::Scenario scenario;
  chsh::OptimizerOptions optimizer;
  ThresholdSpec threshold;
  Fig2Spec fig2;
};

// YAML text -> RunConfig. Unknown keys and malformed values raise
// ParseError naming the offending field; out-of-domain values raise
// DomainError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace hybridbell::app
