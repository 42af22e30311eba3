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

#include "hybridbell/app/report.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "hybridbell/errors.hpp"

namespace hybridbell::app {

using chsh::ChshResult;
using chsh::kParamCount;
using chsh::Param;

std::string format_number(double v) {
  if (std::isnan(v)) return "";
  // Avoid "-0" in tables.
  if (v == 0.0) v = 0.0;
  return fmt::format("{:.12g}", v);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string contract_header() {
  std::string h = "scenario_id";
  for (std::size_t i = 0; i < kParamCount; ++i) {
    h += ",";
    h += chsh::param_name(static_cast<Param>(i));
  }
  return h + ",E11,E12,E21,E22,S";
}

std::string contract_row(const ChshResult& r) {
  std::string row = csv_field(r.scenario.id);
  for (double v : r.params) row += "," + format_number(v);
  for (double e : r.correlators) row += "," + format_number(e);
  return row + "," + format_number(r.s_value);
}

std::string results_csv(const std::vector<ChshResult>& rows) {
  std::string out = contract_header() + "\n";
  for (const auto& r : rows) out += contract_row(r) + "\n";
  return out;
}

std::string threshold_csv(const chsh::ThresholdResult& t) {
  std::string out = contract_header() + ",stage\n";
  for (const auto& s : t.scan) out += contract_row(s.optimum) + ",scan\n";
  for (const auto& s : t.probes) out += contract_row(s.optimum) + ",bisection\n";
  return out;
}

std::string figure2_csv(const chsh::Figure2Table& table) {
  std::string out = "eta_t";
  for (const auto& c : table.curves) out += "," + c.label;
  out += "\n";
  for (std::size_t k = 0; k < table.eta_t.size(); ++k) {
    out += format_number(table.eta_t[k]);
    for (const auto& c : table.curves) out += "," + format_number(c.points[k].s_value);
    out += "\n";
  }
  return out;
}

std::string locality_csv(const LinkBudget& lb, const LocalityReport& r) {
  return fmt::format(
      "distance_m,attenuation_db_per_km,detection_time_s,signal_speed_m_per_s,"
      "min_separation_m,min_separation_fiber_m,transmission,separation_ok\n"
      "{},{},{},{},{},{},{},{}\n",
      format_number(lb.distance_m), format_number(lb.attenuation_db_per_km),
      format_number(lb.detection_time_s), format_number(lb.signal_speed_m_per_s),
      format_number(r.min_separation_m), format_number(r.min_separation_fiber_m),
      format_number(r.transmission), r.separation_ok ? "true" : "false");
}

std::string stability_csv(double k_norm, double delta_l, const StabilityReport& r) {
  return fmt::format("k_per_m,delta_l_m,phase_rad,threshold_rad,pass\n{},{},{},{},{}\n",
                     format_number(k_norm), format_number(delta_l),
                     format_number(r.phase_rad), format_number(r.threshold_rad),
                     r.pass ? "true" : "false");
}

std::string summarize(const ChshResult& r, const std::string& title) {
  std::string out = fmt::format("{} [{}]\n", title, r.scenario.id);
  out += fmt::format("  S = {:.10f}\n", r.s_value);
  out += fmt::format("  E11 = {:+.10f}  E12 = {:+.10f}\n", r.correlators[0], r.correlators[1]);
  out += fmt::format("  E21 = {:+.10f}  E22 = {:+.10f}\n", r.correlators[2], r.correlators[3]);
  out += "  parameters:";
  for (std::size_t i = 0; i < kParamCount; ++i) {
    if (std::isnan(r.params[i])) continue;
    out += fmt::format(" {}={}", chsh::param_name(static_cast<Param>(i)),
                       format_number(r.params[i]));
  }
  out += "\n";
  if (r.trace.starts_attempted > 0) {
    out += fmt::format("  optimizer: {} starts, {} converged, {} evaluations\n",
                       r.trace.starts_attempted, r.trace.starts_converged,
                       r.trace.evaluations);
  }
  return out;
}

std::string summarize(const chsh::ThresholdResult& t, Param sweep,
                      const std::string& scenario_id) {
  std::string out = fmt::format("threshold in {} [{}]\n", chsh::param_name(sweep), scenario_id);
  out += "  coarse scan (value, S*):";
  for (const auto& s : t.scan) {
    out += fmt::format(" ({}, {:.6f})", format_number(s.value), s.optimum.s_value);
  }
  out += "\n";
  if (!t.found) {
    out += "  no threshold: violation status does not change on the interval\n";
    return out;
  }
  out += fmt::format("  S* crosses 2 at {} = {:.4f} (bracket [{:.5f}, {:.5f}], {} probes)\n",
                     chsh::param_name(sweep), t.value, t.bracket_lower,
                     t.bracket_upper, t.probes.size());
  out += fmt::format("  violation appears as {} {}\n", chsh::param_name(sweep),
                     t.increasing ? "increases" : "decreases");
  return out;
}

std::string summarize(const chsh::Figure2Table& table) {
  std::string out = "optimized S* against transmission eta_t\n";
  out += fmt::format("  {:>6}", "eta_t");
  for (const auto& c : table.curves) out += fmt::format(" {:>22}", c.label);
  out += "\n";
  for (std::size_t k = 0; k < table.eta_t.size(); ++k) {
    out += fmt::format("  {:>6.3f}", table.eta_t[k]);
    for (const auto& c : table.curves) out += fmt::format(" {:>22.6f}", c.points[k].s_value);
    out += "\n";
  }
  return out;
}

std::string summarize(const LinkBudget& lb, const LocalityReport& r) {
  return fmt::format(
      "locality\n"
      "  minimum separation: {:.2f} m at {:.6g} m/s ({:.2f} m at fiber speed {:.3g} m/s)\n"
      "  separation {:.2f} m: {}\n"
      "  fiber transmission over {:.2f} m at {:.3g} dB/km: {:.6f}\n",
      r.min_separation_m, lb.signal_speed_m_per_s, r.min_separation_fiber_m,
      kFiberGroupSpeed, lb.distance_m,
      r.separation_ok ? "sufficient" : "too short", lb.distance_m,
      lb.attenuation_db_per_km, r.transmission);
}

std::string summarize(double k_norm, double delta_l, const StabilityReport& r) {
  return fmt::format(
      "path-length stability\n"
      "  |k| = {:.6g} 1/m, dL = {:.6g} m, |k| dL = {:.6g} rad (threshold {:.3g}): {}\n",
      k_norm, delta_l, r.phase_rad, r.threshold_rad, r.pass ? "pass" : "fail");
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError(fmt::format("cannot write '{}'", tmp.string()));
    out << contents;
    if (!out.flush()) throw ParseError(fmt::format("cannot write '{}'", tmp.string()));
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hybridbell::app
