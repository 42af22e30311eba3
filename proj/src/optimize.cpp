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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include <fmt/format.h>
#include <gsl/gsl_qrng.h>

#include "hybridbell/chsh.hpp"
#include "hybridbell/errors.hpp"

namespace hybridbell::chsh {

namespace {

// Search coordinates are unbounded. A parameter whose interval covers a
// full turn is wrapped; any other interval is folded back by reflection at
// its ends. Neither map introduces spurious stationary points at the bounds.
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_periodic(const FreeParam& fp) {
  return is_angle(fp.id) && fp.id != Param::theta &&
         fp.upper - fp.lower >= kTwoPi - 1e-12;
}

double to_box(const FreeParam& fp, double y) {
  const double span = fp.upper - fp.lower;
  if (is_periodic(fp)) {
    double t = std::fmod(y - fp.lower, span);
    if (t < 0.0) t += span;
    return fp.lower + t;
  }
  double t = std::fmod(y - fp.lower, 2.0 * span);
  if (t < 0.0) t += 2.0 * span;
  return fp.lower + (t <= span ? t : 2.0 * span - t);
}

double from_box(const FreeParam& fp, double x) {
  return std::clamp(x, fp.lower, fp.upper);
}

double initial_step(const FreeParam& fp) {
  return 0.1 * (fp.upper - fp.lower);
}

// S for the working scenario, using observables instead of full tables.
double chsh_value(const Scenario& sc) {
  const auto state = model::prepare(sc.state, sc.imperfections);
  std::array<hilbert::ComplexMatrix, 2> alice_obs;
  std::array<hilbert::ComplexMatrix, 2> bob_obs;
  for (std::size_t i = 0; i < 2; ++i) {
    alice_obs[i] = measure::atom_effects(sc.alice[i], state.atom_dim()).observable();
    bob_obs[i] = measure::optical_effects(sc.bob[i]).observable();
  }
  std::array<double, 4> e{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      e[2 * i + j] =
          hilbert::expectation(state.rho(), hilbert::kron(alice_obs[i], bob_obs[j]))
              .real();
    }
  }
  return chsh_combination(e);
}

struct Objective {
  Scenario working;
  const std::vector<FreeParam>* free = nullptr;
  long evaluations = 0;

  // -S at the box point encoded by y.
  double operator()(const std::vector<double>& y) {
    for (std::size_t k = 0; k < free->size(); ++k) {
      const auto& fp = (*free)[k];
      working.set(fp.id, to_box(fp, y[k]));
    }
    ++evaluations;
    return -chsh_value(working);
  }
};

struct SimplexResult {
  std::vector<double> x;
  double f = std::numeric_limits<double>::infinity();
  bool converged = false;
};

// Nelder-Mead minimization with standard coefficients (reflection 1,
// expansion 2, contraction 1/2, shrink 1/2). Converged once every vertex lies
// within xtol of the best vertex (max norm) and every value within ftol.
SimplexResult nelder_mead(Objective& f, const std::vector<double>& x0,
                          const std::vector<double>& step,
                          double xtol, double ftol, int max_iterations) {
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  const std::size_t n = x0.size();
  std::vector<std::vector<double>> sim(n + 1, x0);
  std::vector<double> fs(n + 1);
  for (std::size_t k = 0; k < n; ++k) sim[k + 1][k] += step[k];
  for (std::size_t k = 0; k <= n; ++k) fs[k] = f(sim[k]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto combine = [&](std::vector<double>& out, double a, double b) {
    // out = a * centroid + b * worst
    const auto& worst = sim[order[n]];
    for (std::size_t d = 0; d < n; ++d) out[d] = a * centroid[d] + b * worst[d];
  };

  SimplexResult res;
  for (int it = 0; it < max_iterations; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    const auto& best = sim[order[0]];
    double xspread = 0.0;
    double fspread = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      fspread = std::max(fspread, std::abs(fs[order[k]] - fs[order[0]]));
      for (std::size_t d = 0; d < n; ++d) {
        xspread = std::max(xspread, std::abs(sim[order[k]][d] - best[d]));
      }
    }
    if (xspread <= xtol && fspread <= ftol) {
      res.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t d = 0; d < n; ++d) centroid[d] += sim[order[k]][d] / n;
    }
    const std::size_t worst = order[n];

    combine(trial, 1.0 + kReflect, -kReflect);
    const double fr = f(trial);
    bool shrink = false;
    if (fr < fs[order[0]]) {
      combine(trial2, 1.0 + kReflect * kExpand, -kReflect * kExpand);
      const double fe = f(trial2);
      if (fe < fr) {
        sim[worst] = trial2;
        fs[worst] = fe;
      } else {
        sim[worst] = trial;
        fs[worst] = fr;
      }
    } else if (fr < fs[order[n - 1]]) {
      sim[worst] = trial;
      fs[worst] = fr;
    } else if (fr < fs[worst]) {
      combine(trial2, 1.0 + kContract * kReflect, -kContract * kReflect);
      const double fc = f(trial2);
      if (fc <= fr) {
        sim[worst] = trial2;
        fs[worst] = fc;
      } else {
        shrink = true;
      }
    } else {
      combine(trial2, 1.0 - kContract, kContract);
      const double fc = f(trial2);
      if (fc < fs[worst]) {
        sim[worst] = trial2;
        fs[worst] = fc;
      } else {
        shrink = true;
      }
    }
    if (shrink) {
      const auto anchor = sim[order[0]];
      for (std::size_t k = 1; k <= n; ++k) {
        auto& v = sim[order[k]];
        for (std::size_t d = 0; d < n; ++d) v[d] = anchor[d] + kShrink * (v[d] - anchor[d]);
        fs[order[k]] = f(v);
      }
    }
  }

  const auto best = std::min_element(fs.begin(), fs.end()) - fs.begin();
  res.x = sim[static_cast<std::size_t>(best)];
  res.f = fs[static_cast<std::size_t>(best)];
  return res;
}

struct LocalResult {
  std::vector<double> y;
  double value = -std::numeric_limits<double>::infinity();  // S
  bool converged = false;
};

// One descent plus a restart from its optimum with a small simplex; the
// restart guards against premature collapse and is repeated while it gains
// more than value_tol.
LocalResult local_search(Objective& obj, const std::vector<double>& y0,
                         const OptimizerOptions& opts) {
  constexpr int kMaxRestarts = 4;
  std::vector<double> step(y0.size());
  std::vector<double> small_step(y0.size());
  for (std::size_t k = 0; k < y0.size(); ++k) {
    step[k] = initial_step((*obj.free)[k]);
    small_step[k] = 0.1 * step[k];
  }
  SimplexResult r = nelder_mead(obj, y0, step, opts.param_tol, opts.value_tol,
                                opts.max_iterations);
  for (int k = 0; k < kMaxRestarts; ++k) {
    SimplexResult again = nelder_mead(obj, r.x, small_step, opts.param_tol,
                                      opts.value_tol, opts.max_iterations);
    const double gain = r.f - again.f;
    if (gain > 0.0) r = std::move(again);
    if (gain <= opts.value_tol) break;
  }
  return LocalResult{std::move(r.x), -r.f, r.converged};
}

bool lexicographically_less(const std::vector<double>& a,
                            const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

ChshResult optimize(const Scenario& sc, const OptimizerOptions& opts) {
  sc.validate();
  const auto& free = sc.free_params;
  if (free.empty()) {
    throw DomainError("optimize: scenario has no free parameters");
  }
  if (opts.starts < 0) throw DomainError("optimize: negative start count");
  const std::size_t n = free.size();

  std::vector<std::vector<double>> starts;
  for (const auto& p : opts.initial_points) {
    if (p.size() != n) {
      throw DomainError(fmt::format(
          "optimize: initial point has {} entries, expected {}", p.size(), n));
    }
    std::vector<double> y(n);
    for (std::size_t k = 0; k < n; ++k) y[k] = from_box(free[k], p[k]);
    starts.push_back(std::move(y));
  }

  // Sobol points with a seeded Cranley-Patterson shift.
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> shift(n);
  for (auto& v : shift) v = unit(rng);
  gsl_qrng* q = gsl_qrng_alloc(gsl_qrng_sobol, static_cast<unsigned>(n));
  std::vector<double> u(n);
  for (int k = 0; k < opts.starts; ++k) {
    gsl_qrng_get(q, u.data());
    std::vector<double> y(n);
    for (std::size_t d = 0; d < n; ++d) {
      double v = u[d] + shift[d];
      v -= std::floor(v);
      y[d] = free[d].lower + v * (free[d].upper - free[d].lower);
    }
    starts.push_back(std::move(y));
  }
  gsl_qrng_free(q);

  Objective obj{sc, &free, 0};
  OptimizerTrace trace;
  LocalResult best;
  bool have_best = false;
  for (const auto& y0 : starts) {
    LocalResult r = local_search(obj, y0, opts);
    ++trace.starts_attempted;
    if (r.converged) ++trace.starts_converged;
    trace.best_per_start.push_back(r.value);
    // Deterministic reduction: larger S wins, exact ties go to the
    // lexicographically smaller parameter vector.
    if (!have_best || r.value > best.value ||
        (r.value == best.value && lexicographically_less(r.y, best.y))) {
      best = std::move(r);
      have_best = true;
    }
  }
  trace.evaluations = obj.evaluations;

  if (trace.starts_converged == 0) {
    throw ConvergenceError(fmt::format(
        "optimize: none of {} starts converged (best S = {:.12f}, {} "
        "evaluations)",
        trace.starts_attempted, best.value, trace.evaluations));
  }

  Scenario at_optimum = sc;
  for (std::size_t k = 0; k < n; ++k) {
    at_optimum.set(free[k].id, to_box(free[k], best.y[k]));
  }
  ChshResult result = evaluate(at_optimum);
  result.trace = std::move(trace);
  return result;
}

}  // namespace hybridbell::chsh
