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

#include "hybridbell/app/run.hpp"

#include <fmt/format.h>

#include "hybridbell/app/report.hpp"
#include "hybridbell/errors.hpp"

namespace hybridbell::app {

RunOutput run(Command cmd, const RunConfig& cfg, std::optional<chsh::Param> sweep) {
  const auto& sc = cfg.scenario;
  switch (cmd) {
    case Command::evaluate: {
      const auto r = chsh::evaluate(sc);
      return {results_csv({r}), summarize(r, "evaluate")};
    }
    case Command::optimize: {
      const auto r = chsh::optimize(sc, cfg.optimizer);
      return {results_csv({r}), summarize(r, "optimize")};
    }
    case Command::threshold: {
      const auto param = sweep ? sweep : cfg.threshold.param;
      if (!param) {
        throw ParseError("threshold: no parameter given (use --param or threshold.param)");
      }
      chsh::ThresholdOptions opts;
      opts.lower = cfg.threshold.lower;
      opts.upper = cfg.threshold.upper;
      opts.tolerance = cfg.threshold.tolerance;
      opts.scan_points = cfg.threshold.scan_points;
      opts.optimizer = cfg.optimizer;
      const auto t = chsh::threshold(sc, *param, opts);
      return {threshold_csv(t), summarize(t, *param, sc.id)};
    }
    case Command::fig2: {
      if (cfg.fig2.eta_t_grid.empty()) {
        throw ParseError("fig2: configuration has no fig2.eta_t_grid");
      }
      const auto table = chsh::figure2_sweep(cfg.fig2.eta_t_grid, cfg.fig2.eta_d_values,
                                             cfg.fig2.two_homodyne, cfg.optimizer);
      return {figure2_csv(table), summarize(table)};
    }
  }
  throw ParseError("unknown command");
}

RunOutput run_locality(const LinkBudget& lb) {
  const auto r = locality_check(lb);
  return {locality_csv(lb, r), summarize(lb, r)};
}

RunOutput run_stability(double k_norm, double delta_l, double threshold_rad) {
  const auto r = phase_stability(k_norm, delta_l, threshold_rad);
  return {stability_csv(k_norm, delta_l, r), summarize(k_norm, delta_l, r)};
}

std::filesystem::path summary_path(const std::filesystem::path& csv_path) {
  auto p = csv_path;
  p.replace_extension(".summary.txt");
  return p;
}

void write_outputs(const RunOutput& out, const std::filesystem::path& csv_path) {
  write_file_atomic(csv_path, out.csv);
  write_file_atomic(summary_path(csv_path), out.summary);
}

}  // namespace hybridbell::app
