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

#include "hybridbell/chsh.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include <fmt/format.h>

#include "hybridbell/errors.hpp"

namespace hybridbell::chsh {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<std::string_view, kParamCount> kParamNames = {
    "theta_rad",   "phi_rad",     "alpha1_rad", "varphi1_rad", "alpha2_rad",
    "varphi2_rad", "zeta1_rad",   "zeta2_rad",  "eta_t",       "eta_d",
    "f_s",         "f_g",         "f_aux",      "fidelity"};

double wrap_phase(double x) {
  double w = std::fmod(x, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  if (w >= 2.0 * kPi) w = 0.0;
  return w;
}

bool is_phase(Param p) {
  return p == Param::phi || p == Param::varphi1 || p == Param::varphi2 ||
         p == Param::zeta1 || p == Param::zeta2;
}

measure::Quadrature& quadrature_at(Scenario& sc, std::size_t j) {
  return std::get<measure::Quadrature>(sc.bob[j]);
}

}  // namespace

std::string_view param_name(Param p) {
  return kParamNames[static_cast<std::size_t>(p)];
}

std::optional<Param> param_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kParamCount; ++i) {
    if (kParamNames[i] == name) return static_cast<Param>(i);
  }
  return std::nullopt;
}

bool is_angle(Param p) {
  return static_cast<std::size_t>(p) <= static_cast<std::size_t>(Param::zeta2);
}

FreeParam default_bounds(Param p) {
  switch (p) {
    case Param::theta:
      return {p, 0.0, kPi / 2};
    case Param::alpha1:
    case Param::alpha2:
      return {p, -kPi, kPi};
    case Param::phi:
    case Param::varphi1:
    case Param::varphi2:
    case Param::zeta1:
    case Param::zeta2:
      return {p, 0.0, 2.0 * kPi};
    default:
      return {p, 0.0, 1.0};
  }
}

bool Scenario::bob_is_quadrature(std::size_t j) const {
  return std::holds_alternative<measure::Quadrature>(bob.at(j));
}

bool Scenario::applies(Param p) const {
  if (p == Param::zeta1) return bob_is_quadrature(0);
  if (p == Param::zeta2) return bob_is_quadrature(1);
  return true;
}

void Scenario::set(Param p, double value) {
  if (!applies(p)) {
    throw DomainError(fmt::format(
        "parameter {} does not apply: Bob's setting is photon counting",
        param_name(p)));
  }
  if (is_phase(p)) value = wrap_phase(value);
  switch (p) {
    case Param::theta: state.theta = value; break;
    case Param::phi: state.phi = value; break;
    case Param::alpha1: alice[0].alpha = value; break;
    case Param::varphi1: alice[0].varphi = value; break;
    case Param::alpha2: alice[1].alpha = value; break;
    case Param::varphi2: alice[1].varphi = value; break;
    case Param::zeta1: quadrature_at(*this, 0).zeta = value; break;
    case Param::zeta2: quadrature_at(*this, 1).zeta = value; break;
    case Param::eta_t: imperfections.eta_t = value; break;
    case Param::eta_d:
      imperfections.eta_d = value;
      for (auto& m : bob) {
        if (auto* c = std::get_if<measure::Counting>(&m)) c->eta_d = value;
      }
      break;
    case Param::f_s: imperfections.f_s = value; break;
    case Param::f_g: imperfections.f_g = value; break;
    case Param::f_aux: imperfections.f_aux = value; break;
    case Param::fidelity: imperfections.fidelity = value; break;
  }
}

double Scenario::get(Param p) const {
  switch (p) {
    case Param::theta: return state.theta;
    case Param::phi: return state.phi;
    case Param::alpha1: return alice[0].alpha;
    case Param::varphi1: return alice[0].varphi;
    case Param::alpha2: return alice[1].alpha;
    case Param::varphi2: return alice[1].varphi;
    case Param::zeta1:
    case Param::zeta2: {
      const std::size_t j = p == Param::zeta1 ? 0 : 1;
      if (!bob_is_quadrature(j)) return std::numeric_limits<double>::quiet_NaN();
      return std::get<measure::Quadrature>(bob[j]).zeta;
    }
    case Param::eta_t: return imperfections.eta_t;
    case Param::eta_d: return imperfections.eta_d;
    case Param::f_s: return imperfections.f_s;
    case Param::f_g: return imperfections.f_g;
    case Param::f_aux: return imperfections.f_aux;
    case Param::fidelity: return imperfections.fidelity;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

ParamVector Scenario::params() const {
  ParamVector v{};
  for (std::size_t i = 0; i < kParamCount; ++i) v[i] = get(static_cast<Param>(i));
  return v;
}

void Scenario::free_all_angles() {
  free_params.clear();
  for (std::size_t i = 0; i < kParamCount; ++i) {
    const auto p = static_cast<Param>(i);
    if (is_angle(p) && applies(p)) free_params.push_back(default_bounds(p));
  }
}

void Scenario::validate() const {
  state.validate();
  imperfections.validate();
  for (const auto& a : alice) a.validate();
  for (const auto& m : bob) {
    if (const auto* c = std::get_if<measure::Counting>(&m)) {
      if (c->eta_d != imperfections.eta_d) {
        throw DomainError(
            "counting efficiency disagrees with the scenario's eta_d");
      }
    } else if (!std::isfinite(std::get<measure::Quadrature>(m).zeta)) {
      throw DomainError("quadrature angle must be finite");
    }
  }
  std::set<Param> seen;
  for (const auto& fp : free_params) {
    const auto name = param_name(fp.id);
    if (!applies(fp.id)) {
      throw DomainError(fmt::format("free parameter {} does not apply", name));
    }
    if (fp.id == Param::f_s || fp.id == Param::f_g || fp.id == Param::f_aux) {
      throw DomainError(fmt::format(
          "branching ratio {} cannot be optimized independently", name));
    }
    if (!seen.insert(fp.id).second) {
      throw DomainError(fmt::format("free parameter {} listed twice", name));
    }
    if (!(std::isfinite(fp.lower) && std::isfinite(fp.upper) &&
          fp.lower < fp.upper)) {
      throw DomainError(fmt::format("free parameter {} has invalid bounds [{}, {}]",
                                    name, fp.lower, fp.upper));
    }
    if (fp.id == Param::theta && (fp.lower < 0.0 || fp.upper > kPi / 2)) {
      throw DomainError("theta_rad bounds must lie within [0, π/2]");
    }
    if (!is_angle(fp.id)) {
      const double lo = fp.id == Param::fidelity ? 0.5 : 0.0;
      if (fp.lower < lo || fp.upper > 1.0) {
        throw DomainError(fmt::format(
            "free parameter {} bounds must lie within [{}, 1]", name, lo));
      }
    }
  }
}

double optimal_counting_alpha() {
  return 2.0 *
         std::atan((std::sqrt(kPi) + std::sqrt(2.0 + kPi)) / std::sqrt(2.0));
}

Scenario counting_homodyne_scenario(double eta_t, double eta_d) {
  Scenario sc;
  sc.id = "counting-homodyne";
  sc.state = {kPi / 4, 0.0};
  sc.alice[0] = {optimal_counting_alpha(), 0.0, -1};
  sc.alice[1] = {-optimal_counting_alpha(), 0.0, -1};
  sc.bob = {measure::Counting{}, measure::Quadrature{0.0}};
  sc.set(Param::eta_t, eta_t);
  sc.set(Param::eta_d, eta_d);
  sc.free_all_angles();
  sc.validate();
  return sc;
}

Scenario two_homodyne_scenario(double eta_t) {
  Scenario sc;
  sc.id = "two-homodyne";
  sc.state = {kPi / 4, 0.0};
  sc.bob = {measure::Quadrature{0.0}, measure::Quadrature{kPi / 2}};
  sc.alice[0] = {kPi / 2, 0.0, -1};
  sc.alice[1] = {kPi / 2, 0.0, -1};
  sc.set(Param::varphi1, -kPi / 4);
  sc.set(Param::varphi2, kPi / 4);
  sc.set(Param::eta_t, eta_t);
  sc.free_all_angles();
  sc.validate();
  return sc;
}

double chsh_combination(const std::array<double, 4>& e) {
  return e[0] + e[1] + e[2] - e[3];
}

ChshResult evaluate(const Scenario& sc) {
  sc.validate();
  const auto state = model::prepare(sc.state, sc.imperfections);
  ChshResult r;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const std::size_t k = 2 * i + j;
      r.tables[k] = measure::joint_probs(state, sc.alice[i], sc.bob[j]);
      r.correlators[k] = measure::correlator(r.tables[k]);
    }
  }
  r.s_value = chsh_combination(r.correlators);
  r.scenario = sc;
  r.params = sc.params();
  return r;
}

ChshResult branching_strategy(double f_s, double f_g, double epsilon) {
  Scenario sc;
  sc.id = "branching";
  sc.state = {kPi / 4, 0.0};
  sc.alice[0] = {kPi - epsilon, 0.0, -1};
  sc.alice[1] = {-kPi + epsilon, 0.0, -1};
  sc.bob = {measure::Counting{1.0}, measure::Quadrature{0.0}};
  sc.imperfections.f_s = f_s;
  sc.imperfections.f_g = f_g;
  sc.imperfections.f_aux = 1.0 - f_s - f_g;
  if (std::abs(sc.imperfections.f_aux) < 1e-15) sc.imperfections.f_aux = 0.0;
  return evaluate(sc);
}

BranchingSlope branching_slope(double f_s, double f_g) {
  if (!(f_s > 0.0 && f_s <= 1.0)) {
    throw DomainError(fmt::format("branching_slope: f_s = {} not in (0, 1]", f_s));
  }
  BranchingSlope out;
  Eigen::Matrix3d vandermonde;
  Eigen::Vector3d values;
  int row = 0;
  for (double eps : {0.02, 0.04, 0.08}) {
    const double s = branching_strategy(f_s, f_g, eps).s_value;
    out.samples.emplace_back(eps, s);
    vandermonde.row(row) << 1.0, eps, eps * eps;
    values(row) = s;
    ++row;
  }
  const Eigen::Vector3d coeffs = vandermonde.fullPivLu().solve(values);
  out.slope = coeffs(1);
  return out;
}

}  // namespace hybridbell::chsh
