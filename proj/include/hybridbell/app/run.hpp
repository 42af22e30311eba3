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

#include "hybridbell/app/config.hpp"
#include "hybridbell/app/link_budget.hpp"

namespace hybridbell::app {

enum class Command { evaluate, optimize, threshold, fig2 };

struct RunOutput {
  std::string csv;
  std::string summary;
};

// Executes one scenario command. `sweep` overrides the threshold parameter
// named in the configuration.
RunOutput run(Command cmd, const RunConfig& cfg,
              std::optional<chsh::Param> sweep = std::nullopt);

RunOutput run_locality(const LinkBudget& lb);
RunOutput run_stability(double k_norm, double delta_l, double threshold_rad);

// Results table at `csv_path`, summary next to it as <stem>.summary.txt.
// Both files are written only after the run has fully succeeded.
void write_outputs(const RunOutput& out, const std::filesystem::path& csv_path);

std::filesystem::path summary_path(const std::filesystem::path& csv_path);

}  // namespace hybridbell::app
