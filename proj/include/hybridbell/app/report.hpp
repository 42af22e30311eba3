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
#include <string>
#include <vector>

#include "hybridbell/app/link_budget.hpp"
#include "hybridbell/chsh.hpp"

namespace hybridbell::app {

// Shortest round-trippable-enough text for results tables: 12 significant
// digits, "." decimal separator, empty for NaN.
std::string format_number(double v);

// Column contract shared by every results table:
//   scenario_id, <all parameters>, E11, E12, E21, E22, S
std::string contract_header();
std::string contract_row(const chsh::ChshResult& r);

std::string results_csv(const std::vector<chsh::ChshResult>& rows);
std::string threshold_csv(const chsh::ThresholdResult& t);
// Wide table: eta_t then one S* column per curve.
std::string figure2_csv(const chsh::Figure2Table& table);
std::string locality_csv(const LinkBudget& lb, const LocalityReport& r);
std::string stability_csv(double k_norm, double delta_l, const StabilityReport& r);

std::string summarize(const chsh::ChshResult& r, const std::string& title);
std::string summarize(const chsh::ThresholdResult& t, chsh::Param sweep,
                      const std::string& scenario_id);
std::string summarize(const chsh::Figure2Table& table);
std::string summarize(const LinkBudget& lb, const LocalityReport& r);
std::string summarize(double k_norm, double delta_l, const StabilityReport& r);

// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace hybridbell::app
