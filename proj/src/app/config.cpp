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

#include "hybridbell/app/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "hybridbell/errors.hpp"

namespace hybridbell::app {

namespace {

using chsh::Param;

void check_keys(const YAML::Node& node, const std::string& where,
                const std::set<std::string>& allowed) {
  if (!node.IsMap()) throw ParseError(fmt::format("{}: expected a mapping", where));
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.contains(key)) {
      throw ParseError(fmt::format("{}: unknown field '{}'", where, key));
    }
  }
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) {
    throw ParseError(fmt::format("{}: expected a scalar value", field));
  }
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ParseError(
        fmt::format("{}: cannot read '{}'", field, node.Scalar()));
  }
}

double number(const YAML::Node& node, const std::string& field) {
  const double v = scalar<double>(node, field);
  if (!std::isfinite(v)) throw ParseError(fmt::format("{}: not a finite number", field));
  return v;
}

template <typename Fn>
void optional_number(const YAML::Node& map, const std::string& where,
                     const char* key, Fn&& store) {
  if (const auto n = map[key]) store(number(n, where + "." + key));
}

Param param_named(const std::string& name, const std::string& field) {
  const auto p = chsh::param_from_name(name);
  if (!p) throw ParseError(fmt::format("{}: unknown parameter '{}'", field, name));
  return *p;
}

void parse_state(const YAML::Node& n, chsh::Scenario& sc) {
  check_keys(n, "state", {"theta_rad", "phi_rad"});
  optional_number(n, "state", "theta_rad", [&](double v) { sc.state.theta = v; });
  optional_number(n, "state", "phi_rad", [&](double v) { sc.state.phi = v; });
}

void parse_imperfections(const YAML::Node& n, chsh::Scenario& sc) {
  check_keys(n, "imperfections",
             {"eta_t", "eta_d", "f_s", "f_g", "f_aux", "fidelity"});
  auto& imp = sc.imperfections;
  optional_number(n, "imperfections", "eta_t", [&](double v) { imp.eta_t = v; });
  optional_number(n, "imperfections", "f_s", [&](double v) { imp.f_s = v; });
  optional_number(n, "imperfections", "f_g", [&](double v) { imp.f_g = v; });
  optional_number(n, "imperfections", "f_aux", [&](double v) { imp.f_aux = v; });
  optional_number(n, "imperfections", "fidelity",
                  [&](double v) { imp.fidelity = v; });
  optional_number(n, "imperfections", "eta_d",
                  [&](double v) { sc.set(Param::eta_d, v); });
}

void parse_alice(const YAML::Node& n, chsh::Scenario& sc) {
  if (!n.IsSequence() || n.size() != 2) {
    throw ParseError("alice: expected a list of exactly two settings");
  }
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string where = fmt::format("alice[{}]", i);
    const auto& e = n[i];
    check_keys(e, where, {"alpha_rad", "varphi_rad", "aux_outcome"});
    auto& a = sc.alice[i];
    optional_number(e, where, "alpha_rad", [&](double v) { a.alpha = v; });
    optional_number(e, where, "varphi_rad", [&](double v) { a.varphi = v; });
    if (const auto aux = e["aux_outcome"]) {
      a.aux_outcome = scalar<int>(aux, where + ".aux_outcome");
    }
  }
}

void parse_bob(const YAML::Node& n, chsh::Scenario& sc) {
  if (!n.IsSequence() || n.size() != 2) {
    throw ParseError("bob: expected a list of exactly two measurements");
  }
  for (std::size_t j = 0; j < 2; ++j) {
    const std::string where = fmt::format("bob[{}]", j);
    const auto& e = n[j];
    check_keys(e, where, {"kind", "zeta_rad"});
    if (!e["kind"]) throw ParseError(fmt::format("{}: missing field 'kind'", where));
    const auto kind = scalar<std::string>(e["kind"], where + ".kind");
    if (kind == "counting") {
      if (e["zeta_rad"]) {
        throw ParseError(fmt::format("{}: zeta_rad given for a counting measurement", where));
      }
      sc.bob[j] = measure::Counting{sc.imperfections.eta_d};
    } else if (kind == "quadrature") {
      double zeta = 0.0;
      optional_number(e, where, "zeta_rad", [&](double v) { zeta = v; });
      sc.bob[j] = measure::Quadrature{zeta};
    } else {
      throw ParseError(fmt::format(
          "{}.kind: expected 'counting' or 'quadrature', got '{}'", where, kind));
    }
  }
}

void parse_free(const YAML::Node& n, chsh::Scenario& sc) {
  if (n.IsScalar()) {
    if (n.Scalar() != "all") {
      throw ParseError("free: expected 'all' or a list of parameters");
    }
    sc.free_all_angles();
    return;
  }
  if (!n.IsSequence()) throw ParseError("free: expected 'all' or a list of parameters");
  sc.free_params.clear();
  for (std::size_t k = 0; k < n.size(); ++k) {
    const std::string where = fmt::format("free[{}]", k);
    const auto& e = n[k];
    if (e.IsScalar()) {
      sc.free_params.push_back(chsh::default_bounds(param_named(e.Scalar(), where)));
      continue;
    }
    check_keys(e, where, {"param", "lower", "upper"});
    if (!e["param"]) throw ParseError(fmt::format("{}: missing field 'param'", where));
    auto fp = chsh::default_bounds(
        param_named(scalar<std::string>(e["param"], where + ".param"), where));
    optional_number(e, where, "lower", [&](double v) { fp.lower = v; });
    optional_number(e, where, "upper", [&](double v) { fp.upper = v; });
    sc.free_params.push_back(fp);
  }
}

void parse_optimizer(const YAML::Node& n, chsh::OptimizerOptions& o) {
  check_keys(n, "optimizer", {"starts", "seed", "param_tol", "value_tol", "max_iterations"});
  if (n["starts"]) o.starts = scalar<int>(n["starts"], "optimizer.starts");
  if (n["seed"]) o.seed = scalar<std::uint64_t>(n["seed"], "optimizer.seed");
  optional_number(n, "optimizer", "param_tol", [&](double v) { o.param_tol = v; });
  optional_number(n, "optimizer", "value_tol", [&](double v) { o.value_tol = v; });
  if (n["max_iterations"]) {
    o.max_iterations = scalar<int>(n["max_iterations"], "optimizer.max_iterations");
  }
  if (o.starts < 1 || o.max_iterations < 1 || !(o.param_tol > 0.0) ||
      !(o.value_tol > 0.0)) {
    throw DomainError("optimizer: starts, max_iterations and tolerances must be positive");
  }
}

void parse_threshold(const YAML::Node& n, ThresholdSpec& t) {
  check_keys(n, "threshold", {"param", "lower", "upper", "tolerance", "scan_points"});
  if (n["param"]) {
    t.param = param_named(scalar<std::string>(n["param"], "threshold.param"),
                          "threshold.param");
  }
  optional_number(n, "threshold", "lower", [&](double v) { t.lower = v; });
  optional_number(n, "threshold", "upper", [&](double v) { t.upper = v; });
  optional_number(n, "threshold", "tolerance", [&](double v) { t.tolerance = v; });
  if (n["scan_points"]) t.scan_points = scalar<int>(n["scan_points"], "threshold.scan_points");
}

std::vector<double> number_list(const YAML::Node& n, const std::string& where) {
  if (!n.IsSequence()) throw ParseError(fmt::format("{}: expected a list", where));
  std::vector<double> out;
  for (std::size_t k = 0; k < n.size(); ++k) {
    out.push_back(number(n[k], fmt::format("{}[{}]", where, k)));
  }
  return out;
}

void parse_fig2(const YAML::Node& n, Fig2Spec& f) {
  check_keys(n, "fig2", {"eta_t_grid", "eta_d_values", "two_homodyne"});
  if (const auto g = n["eta_t_grid"]) {
    if (g.IsMap()) {
      check_keys(g, "fig2.eta_t_grid", {"start", "stop", "step"});
      for (const char* key : {"start", "stop", "step"}) {
        if (!g[key]) {
          throw ParseError(fmt::format("fig2.eta_t_grid: missing field '{}'", key));
        }
      }
      const double start = number(g["start"], "fig2.eta_t_grid.start");
      const double stop = number(g["stop"], "fig2.eta_t_grid.stop");
      const double step = number(g["step"], "fig2.eta_t_grid.step");
      if (!(step > 0.0) || stop < start) {
        throw DomainError("fig2.eta_t_grid: need step > 0 and stop >= start");
      }
      const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
      f.eta_t_grid.clear();
      for (long k = 0; k < count; ++k) {
        // Rounded so that 0.4 + 3 * 0.05 prints as 0.55.
        f.eta_t_grid.push_back(std::round((start + k * step) * 1e12) / 1e12);
      }
    } else {
      f.eta_t_grid = number_list(g, "fig2.eta_t_grid");
    }
  }
  if (n["eta_d_values"]) f.eta_d_values = number_list(n["eta_d_values"], "fig2.eta_d_values");
  if (n["two_homodyne"]) f.two_homodyne = scalar<bool>(n["two_homodyne"], "fig2.two_homodyne");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ParseError(fmt::format("malformed configuration: {}", e.what()));
  }
  RunConfig cfg;
  if (root.IsNull()) return cfg;
  check_keys(root, "config",
             {"id", "state", "imperfections", "alice", "bob", "free", "optimizer",
              "threshold", "fig2"});
  auto& sc = cfg.scenario;
  if (root["id"]) sc.id = scalar<std::string>(root["id"], "id");
  if (root["state"]) parse_state(root["state"], sc);
  if (root["imperfections"]) parse_imperfections(root["imperfections"], sc);
  if (root["alice"]) parse_alice(root["alice"], sc);
  if (root["bob"]) parse_bob(root["bob"], sc);
  // Counting efficiency follows the imperfections block regardless of order.
  sc.set(Param::eta_d, sc.imperfections.eta_d);
  if (root["free"]) parse_free(root["free"], sc);
  if (root["optimizer"]) parse_optimizer(root["optimizer"], cfg.optimizer);
  if (root["threshold"]) parse_threshold(root["threshold"], cfg.threshold);
  if (root["fig2"]) parse_fig2(root["fig2"], cfg.fig2);
  sc.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open configuration '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace hybridbell::app
