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

// Command-line front end: evaluate, optimize, threshold, fig2, locality,
// stability. Exit codes: 0 success, 1 usage/parse error, 2 domain error,
// 3 optimizer non-convergence.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hybridbell/app/config.hpp"
#include "hybridbell/app/link_budget.hpp"
#include "hybridbell/app/run.hpp"
#include "hybridbell/errors.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2, kNoConvergence = 3 };

struct CommonFlags {
  std::optional<std::uint64_t> seed;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--seed", flags.seed, "Optimizer seed (overrides the configuration)");
  cmd->add_option("--out", flags.out, "Results CSV path; a .summary.txt is written next to it");
}

void emit(const hybridbell::app::RunOutput& out, const CommonFlags& flags) {
  if (!flags.out.empty()) hybridbell::app::write_outputs(out, flags.out);
  std::cout << out.summary;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hybridbell;

  CLI::App app{"CHSH tests on atom-photon states with homodyne and photon-counting readout"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string config_path;
  std::string sweep_name;

  auto* evaluate = app.add_subcommand("evaluate", "Evaluate S at the configured settings");
  auto* optimize = app.add_subcommand("optimize", "Maximize S over the free parameters");
  auto* threshold = app.add_subcommand("threshold", "Efficiency at which S* crosses 2");
  auto* fig2 = app.add_subcommand("fig2", "S* against transmission for all curves");
  for (auto* cmd : {evaluate, optimize, threshold, fig2}) {
    cmd->add_option("config", config_path, "Scenario configuration (YAML)")->required();
    add_common(cmd, flags);
  }
  threshold->add_option("--param", sweep_name, "Parameter to sweep (eta_t, eta_d, fidelity)");

  app::LinkBudget budget;
  auto* locality = app.add_subcommand("locality", "Separation and fiber transmission");
  locality->add_option("--detection-time", budget.detection_time_s, "Detection time [s]")
      ->capture_default_str();
  locality->add_option("--signal-speed", budget.signal_speed_m_per_s, "Signal speed [m/s]")
      ->capture_default_str();
  locality->add_option("--distance", budget.distance_m, "Separation [m]")->capture_default_str();
  locality->add_option("--attenuation", budget.attenuation_db_per_km, "Fiber loss [dB/km]")
      ->capture_default_str();
  add_common(locality, flags);

  double wavelength = 800e-9;
  std::optional<double> k_norm;
  double delta_l = 0.0;
  double phase_threshold = 0.1;
  auto* stability = app.add_subcommand("stability", "Interferometer path-length stability");
  stability->add_option("--wavelength", wavelength, "Wavelength [m]")->capture_default_str();
  stability->add_option("--k", k_norm, "Wavevector norm [1/m] (overrides --wavelength)");
  stability->add_option("--delta-l", delta_l, "Path length difference [m]")->capture_default_str();
  stability->add_option("--threshold", phase_threshold, "Phase threshold [rad]")
      ->capture_default_str();
  add_common(stability, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (locality->parsed()) {
      emit(app::run_locality(budget), flags);
      return kOk;
    }
    if (stability->parsed()) {
      const double k = k_norm ? *k_norm : app::wavenumber(wavelength);
      emit(app::run_stability(k, delta_l, phase_threshold), flags);
      return kOk;
    }

    app::RunConfig cfg = app::load_config(config_path);
    if (flags.seed) cfg.optimizer.seed = *flags.seed;

    app::Command cmd = app::Command::evaluate;
    std::optional<chsh::Param> sweep;
    if (optimize->parsed()) cmd = app::Command::optimize;
    if (fig2->parsed()) cmd = app::Command::fig2;
    if (threshold->parsed()) {
      cmd = app::Command::threshold;
      if (!sweep_name.empty()) {
        sweep = chsh::param_from_name(sweep_name);
        if (!sweep) throw ParseError("--param: unknown parameter '" + sweep_name + "'");
      }
    }
    emit(app::run(cmd, cfg, sweep), flags);
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const ConvergenceError& e) {
    std::cerr << "optimizer error: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
}
