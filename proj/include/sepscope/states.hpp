// Copyright 2026 The sepscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEPSCOPE_STATES_HPP
#define SEPSCOPE_STATES_HPP

#include <cmath>
#include <random>

#include "sepscope/density_matrix.hpp"
#include "sepscope/error.hpp"

namespace sepscope {

/// M_d = 1/d for N qubits.
inline DensityMatrix make_mixed(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxDenseQubits) throw RangeError("make_mixed: qubit count must be in 1..12");
  const auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
  return DensityMatrix::unchecked(Matrix::Identity(d, d) / static_cast<double>(d));
}

inline DensityMatrix make_pure(const Eigen::VectorXcd& psi) {
  const Eigen::VectorXcd unit = psi / psi.norm();
  return DensityMatrix::unchecked(unit * unit.adjoint());
}

/// (|000> + |111>)/sqrt(2), projected.
inline DensityMatrix make_ghz() {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
  psi(0) = psi(7) = 1.0;
  return make_pure(psi);
}

/// |psi><psi| with |psi> = d^{-1/2} sum_k |k>|k> for two particles of
/// dimension d each; d must be a power of two, giving 2 log2(d) qubits.
inline DensityMatrix make_max_entangled(int d) {
  const int half = qubits_for_dim(d);
  if (half < 1) throw DomainError("make_max_entangled: d must be a power of two >= 2");
  if (2 * half > kMaxDenseQubits) throw CapacityError("make_max_entangled: more than 12 qubits");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d) * d);
  for (int k = 0; k < d; ++k) psi(static_cast<Eigen::Index>(k) * d + k) = 1.0;
  return make_pure(psi);
}

/// Bell projector (|00> + |11>)(<00| + <11|)/2.
inline DensityMatrix make_bell() { return make_max_entangled(2); }

/// (1 - eps) M_d + eps rho1.
inline DensityMatrix mix(double eps, const DensityMatrix& rho1) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw RangeError("mix: eps must lie in [0, 1]");
  const auto d = rho1.dim();
  Matrix m = eps * rho1.matrix();
  m.diagonal().array() += (1.0 - eps) / static_cast<double>(d);
  return DensityMatrix::unchecked(std::move(m));
}

/// Two-qubit Werner state (1 - w) M_4 + w |phi><phi|.
inline DensityMatrix make_werner(double entangled_fraction) { return mix(entangled_fraction, make_bell()); }

/// delta = sqrt(tr((rho - M_d)^2)).
inline double delta_distance(const DensityMatrix& rho) {
  Matrix diff = rho.matrix();
  diff.diagonal().array() -= 1.0 / static_cast<double>(rho.dim());
  return diff.norm();  // Frobenius norm; diff is Hermitian
}

/// Random mixed state G G^dag / tr, G a dim x rank complex Ginibre matrix.
/// rank <= 0 picks a rank uniformly in 1..d.
template <typename Engine>
DensityMatrix random_density_matrix(int num_qubits, Engine& rng, int rank = 0) {
  const auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
  if (rank <= 0) rank = std::uniform_int_distribution<int>(1, static_cast<int>(d))(rng);
  std::normal_distribution<double> normal;
  Matrix g(d, rank);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < rank; ++c) g(r, c) = Complex{normal(rng), normal(rng)};
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // G G^dag is Hermitian only to rounding.
  Matrix sym = 0.5 * (rho + rho.adjoint());
  return DensityMatrix::unchecked(std::move(sym));
}

}  // namespace sepscope

#endif  // SEPSCOPE_STATES_HPP
