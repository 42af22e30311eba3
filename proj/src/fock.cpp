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

#include "hybridbell/fock.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include "hybridbell/errors.hpp"

namespace hybridbell::fock {

namespace {

void check_index(int n, const char* where) {
  if (n < 0 || n > kMaxPhotons) {
    throw DomainError(fmt::format(
        "{}: photon number {} outside the supported truncation {{0, 1}}",
        where, n));
  }
}

}  // namespace

QuadratureAngle::QuadratureAngle(double zeta) {
  if (!std::isfinite(zeta)) {
    throw DomainError("QuadratureAngle: angle must be finite");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  zeta_ = std::fmod(zeta, two_pi);
  if (zeta_ < 0.0) zeta_ += two_pi;
  if (zeta_ >= two_pi) zeta_ = 0.0;
}

double phi(int n, double x) {
  check_index(n, "phi");
  if (!std::isfinite(x)) throw DomainError("phi: x must be finite");
  const double norm = std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0) *
                                std::sqrt(std::numbers::pi));
  return std::hermite(static_cast<unsigned>(n), x) * std::exp(-0.5 * x * x) /
         norm;
}

double halfline_overlap(int m, int n) {
  check_index(m, "halfline_overlap");
  check_index(n, "halfline_overlap");
  // Φ_0² and Φ_1² are even: each half carries half the norm. Φ_0 Φ_1 is odd
  // with ∫_{-∞}^{0} sqrt(2/π) x e^{-x²} dx = -1/sqrt(2π).
  if (m == n) return 0.5;
  return -1.0 / std::sqrt(2.0 * std::numbers::pi);
}

HalfLinePovm quadrature_povm(QuadratureAngle zeta) {
  const double z = zeta.radians();
  ComplexMatrix em(2, 2);
  for (int m = 0; m <= kMaxPhotons; ++m) {
    for (int n = 0; n <= kMaxPhotons; ++n) {
      em(m, n) = std::polar(halfline_overlap(m, n), z * (m - n));
    }
  }
  ComplexMatrix ep = ComplexMatrix::Identity(2, 2) - em;
  return HalfLinePovm{zeta, std::move(em), std::move(ep)};
}

double homodyne_visibility() { return std::sqrt(2.0 / std::numbers::pi); }

namespace {

// Physicists' Hermite polynomial via H_{k+1} = 2x H_k - 2k H_{k-1}.
double hermite_recurrence(int n, double x) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

struct OracleIntegrand {
  int m;
  int n;
  double zeta;
  bool imaginary;
};

double oracle_integrand(double x, void* params) {
  const auto* p = static_cast<const OracleIntegrand*>(params);
  const double norm_m =
      std::sqrt(std::ldexp(std::tgamma(p->m + 1.0), p->m) *
                std::sqrt(std::numbers::pi));
  const double norm_n =
      std::sqrt(std::ldexp(std::tgamma(p->n + 1.0), p->n) *
                std::sqrt(std::numbers::pi));
  // <m|x_ζ><x_ζ|n> with <n|x_ζ> = e^{iζn} Φ_n(x)
  const double radial = hermite_recurrence(p->m, x) *
                        hermite_recurrence(p->n, x) * std::exp(-x * x) /
                        (norm_m * norm_n);
  const double angle = p->zeta * (p->m - p->n);
  return radial * (p->imaginary ? std::sin(angle) : std::cos(angle));
}

double integrate_part(OracleIntegrand spec, double& err_out) {
  constexpr double lower = -10.0;
  constexpr double upper = 0.0;
  constexpr double abs_tol = 1e-10;
  constexpr std::size_t limit = 200;

  gsl_function fn;
  fn.function = &oracle_integrand;
  fn.params = &spec;

  gsl_integration_workspace* ws = gsl_integration_workspace_alloc(limit);
  double result = 0.0;
  double abserr = 0.0;
  gsl_error_handler_t* old = gsl_set_error_handler_off();
  const int status = gsl_integration_qag(&fn, lower, upper, abs_tol, 0.0,
                                         limit, GSL_INTEG_GAUSS61, ws, &result,
                                         &abserr);
  gsl_set_error_handler(old);
  gsl_integration_workspace_free(ws);

  if (status != GSL_SUCCESS || abserr > abs_tol) {
    throw ConvergenceError(fmt::format(
        "oracle_halfline: refinement did not converge for <{}|E|{}> "
        "(status '{}', error estimate {:.3e})",
        spec.m, spec.n, gsl_strerror(status), abserr));
  }
  err_out = abserr;
  return result;
}

}  // namespace

OracleResult oracle_halfline(int m, int n, double zeta) {
  check_index(m, "oracle_halfline");
  check_index(n, "oracle_halfline");
  double err_re = 0.0;
  double err_im = 0.0;
  const double re = integrate_part({m, n, zeta, false}, err_re);
  const double im = integrate_part({m, n, zeta, true}, err_im);
  return OracleResult{Complex(re, im), std::hypot(err_re, err_im)};
}

}  // namespace hybridbell::fock
