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

#include "hybridbell/hilbert.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hybridbell/errors.hpp"

namespace hybridbell::hilbert {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Complex expectation(const ComplexMatrix& rho, const ComplexMatrix& op) {
  if (rho.rows() != rho.cols() || op.rows() != op.cols() ||
      rho.rows() != op.rows()) {
    throw DomainError(fmt::format(
        "expectation: dimension mismatch (rho {}x{}, operator {}x{})",
        rho.rows(), rho.cols(), op.rows(), op.cols()));
  }
  // Tr(AB) = sum_ij A_ij B_ji
  return rho.cwiseProduct(op.transpose()).sum();
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

ComplexVector basis_vector(std::size_t dim, std::size_t i) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return v;
}

HybridState::HybridState(std::size_t atom_dim, ComplexMatrix rho)
    : atom_dim_(atom_dim), rho_(std::move(rho)) {
  if (atom_dim_ != 2 && atom_dim_ != 3) {
    throw DomainError(
        fmt::format("HybridState: atom dimension must be 2 or 3, got {}",
                    atom_dim_));
  }
  const auto n = static_cast<Eigen::Index>(dim());
  if (rho_.rows() != n || rho_.cols() != n) {
    throw DomainError(fmt::format(
        "HybridState: expected {}x{} density matrix, got {}x{}", n, n,
        rho_.rows(), rho_.cols()));
  }
}

std::string StateReport::describe() const {
  return fmt::format(
      "finite={} hermitian={} (dev {:.3e}) unit_trace={} (dev {:.3e}) "
      "positive={} (min eig {:.3e})",
      finite, hermitian, hermiticity_deviation, unit_trace, trace_deviation,
      positive, min_eigenvalue);
}

StateReport validate_state(const ComplexMatrix& rho) {
  StateReport r;
  r.finite = rho.allFinite();
  if (!r.finite || rho.rows() != rho.cols()) {
    r.hermitian = r.unit_trace = r.positive = false;
    return r;
  }
  r.hermiticity_deviation = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  r.hermitian = r.hermiticity_deviation <= kHermiticityTol;

  r.trace_deviation = std::abs(rho.trace() - Complex(1.0, 0.0));
  r.unit_trace = r.trace_deviation <= kTraceTol;

  // Eigenvalues of the Hermitian part; a non-Hermitian input is already
  // flagged above.
  const ComplexMatrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm,
                                                  Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.positive = r.min_eigenvalue >= kEigenFloor;
  return r;
}

StateReport validate_state(const HybridState& s) {
  return validate_state(s.rho());
}

bool is_psd(const ComplexMatrix& m, double floor) {
  if (m.rows() != m.cols() || !m.allFinite()) return false;
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermiticityTol) return false;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= floor;
}

}  // namespace hybridbell::hilbert
