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

#include <complex>
#include <cstddef>
#include <string>

#include <Eigen/Dense>

namespace hybridbell::hilbert {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Basis ordering is atom-major: index = atom_index * kModeDim + photon_number.
// Atom levels are ordered (g, s) for dimension 2 and (g, s, aux) for 3.
inline constexpr std::size_t kModeDim = 2;

enum class AtomLevel : std::size_t { g = 0, s = 1, aux = 2 };

inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenFloor = -1e-10;

// Tensor product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr(rho · op). Throws DomainError on dimension mismatch.
Complex expectation(const ComplexMatrix& rho, const ComplexMatrix& op);

// |v><v|
ComplexMatrix projector(const ComplexVector& v);

// Index of |level, n> in the atom-major product basis.
constexpr std::size_t basis_index(AtomLevel level, std::size_t photons) {
  return static_cast<std::size_t>(level) * kModeDim + photons;
}

// Unit vector e_i of dimension dim.
ComplexVector basis_vector(std::size_t dim, std::size_t i);

// Density operator on atom ⊗ optical mode. The optical mode is truncated to
// {|0>, |1>}; the atom carries 2 or 3 levels.
class HybridState {
 public:
  // Throws DomainError if rho is not (atom_dim * kModeDim) square or
  // atom_dim is not 2 or 3. Physical validity is checked separately by
  // validate_state so that invalid matrices can still be inspected.
  HybridState(std::size_t atom_dim, ComplexMatrix rho);

  std::size_t atom_dim() const { return atom_dim_; }
  std::size_t mode_dim() const { return kModeDim; }
  std::size_t dim() const { return atom_dim_ * kModeDim; }
  const ComplexMatrix& rho() const { return rho_; }

  Complex element(AtomLevel row_atom, std::size_t row_n, AtomLevel col_atom,
                  std::size_t col_n) const {
    return rho_(static_cast<Eigen::Index>(basis_index(row_atom, row_n)),
                static_cast<Eigen::Index>(basis_index(col_atom, col_n)));
  }
  double population(AtomLevel atom, std::size_t n) const {
    return element(atom, n, atom, n).real();
  }

 private:
  std::size_t atom_dim_;
  ComplexMatrix rho_;
};

struct StateReport {
  bool finite = true;
  bool hermitian = true;
  bool unit_trace = true;
  bool positive = true;
  double hermiticity_deviation = 0.0;  // max |rho - rho^†|
  double trace_deviation = 0.0;        // |Tr rho - 1|
  double min_eigenvalue = 0.0;

  bool ok() const { return finite && hermitian && unit_trace && positive; }
  std::string describe() const;
};

StateReport validate_state(const HybridState& s);
StateReport validate_state(const ComplexMatrix& rho);

// Hermitian with all eigenvalues >= kEigenFloor.
bool is_psd(const ComplexMatrix& m, double floor = kEigenFloor);

}  // namespace hybridbell::hilbert
