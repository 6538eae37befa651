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

#ifndef SEPSCOPE_PAULI_HPP
#define SEPSCOPE_PAULI_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <vector>

#include "sepscope/density_matrix.hpp"
#include "sepscope/error.hpp"
#include "sepscope/tensor.hpp"

namespace sepscope {

inline constexpr int kMaxPauliQubits = 10;

/// Real Pauli coefficients c[a1..aN] = tr(rho sigma_a1 x ... x sigma_aN).
///
/// Stored flat with a1 as the most significant base-4 digit.
class PauliTensor {
 public:
  PauliTensor(int num_qubits, std::vector<double> coeffs)
      : num_qubits_(num_qubits), coeffs_(std::move(coeffs)) {
    if (num_qubits < 1) throw InvalidInput("PauliTensor needs at least one qubit");
    if (num_qubits > kMaxPauliQubits) throw CapacityError("PauliTensor is limited to 10 qubits");
    if (coeffs_.size() != detail::ipow(4, num_qubits)) throw InvalidInput("PauliTensor needs 4^N coefficients");
  }

  /// The maximally mixed state: c[0..0] = 1 and nothing else.
  static PauliTensor identity(int num_qubits) {
    std::vector<double> c(detail::ipow(4, num_qubits), 0.0);
    c[0] = 1.0;
    return PauliTensor(num_qubits, std::move(c));
  }

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](std::size_t flat) const { return coeffs_[flat]; }
  double& operator[](std::size_t flat) { return coeffs_[flat]; }

  double at(std::initializer_list<int> alpha) const { return coeffs_[flat_index(alpha)]; }
  double& at(std::initializer_list<int> alpha) { return coeffs_[flat_index(alpha)]; }

  std::size_t flat_index(std::span<const int> alpha) const {
    if (static_cast<int>(alpha.size()) != num_qubits_) throw InvalidInput("Pauli index has wrong length");
    std::size_t flat = 0;
    for (int a : alpha) {
      if (a < 0 || a > 3) throw InvalidInput("Pauli index digits must be in 0..3");
      flat = flat * 4 + static_cast<std::size_t>(a);
    }
    return flat;
  }
  std::size_t flat_index(std::initializer_list<int> alpha) const {
    return flat_index(std::span<const int>(alpha.begin(), alpha.size()));
  }

  std::vector<int> multi_index(std::size_t flat) const {
    std::vector<int> alpha(num_qubits_);
    for (int k = num_qubits_ - 1; k >= 0; --k) {
      alpha[k] = static_cast<int>(flat % 4);
      flat /= 4;
    }
    return alpha;
  }

  /// Empty if c[0..0] = 1 and every |c| <= 1 (both to 1e-10); else the reason.
  std::string check() const {
    std::ostringstream why;
    if (std::abs(coeffs_[0] - 1.0) > 1e-10) {
      why << "c[0..0] = " << coeffs_[0] << ", normalization requires 1";
      return why.str();
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (!std::isfinite(coeffs_[k]) || std::abs(coeffs_[k]) > 1.0 + 1e-10) {
        why << "coefficient " << k << " = " << coeffs_[k] << " is outside [-1, 1]";
        return why.str();
      }
    }
    return {};
  }

  void validate() const {
    if (auto why = check(); !why.empty()) throw InvalidInput("invalid Pauli tensor: " + why);
  }

 private:
  int num_qubits_;
  std::vector<double> coeffs_;
};

namespace detail {

// Places bit b of x at bit 2b.
inline std::size_t spread_bits(std::size_t x) {
  std::size_t out = 0;
  for (int b = 0; x != 0; ++b, x >>= 1) out |= (x & 1u) << (2 * b);
  return out;
}

}  // namespace detail

/// Pauli coefficients of a density matrix in O(N 4^N).
///
/// Entries rho[i][j] are regrouped so that each qubit contributes one base-4
/// digit 2 i_k + j_k, then every digit is mapped to (sigma_0..sigma_3) overlaps
/// with a 4-point transform.
inline PauliTensor pauli_expand(const DensityMatrix& rho) {
  const int n = rho.num_qubits();
  if (n > kMaxPauliQubits) throw CapacityError("pauli_expand is limited to 10 qubits");
  const std::size_t d = dim_of(n);
  std::vector<Complex> buf(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t row = detail::spread_bits(i) << 1;
    for (std::size_t j = 0; j < d; ++j) {
      buf[row | detail::spread_bits(j)] = rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  const Complex im{0.0, 1.0};
  buf = detail::transform_all_axes<4, 4>(std::move(buf), n, [&](int, const auto& a, auto& c) {
    c[0] = a[0] + a[3];
    c[1] = a[1] + a[2];
    c[2] = im * (a[1] - a[2]);
    c[3] = a[0] - a[3];
  });
  std::vector<double> coeffs(buf.size());
  for (std::size_t k = 0; k < buf.size(); ++k) coeffs[k] = buf[k].real();
  return PauliTensor(n, std::move(coeffs));
}

/// 2^-N sum_alpha c_alpha sigma_alpha as a raw matrix, with no state checks.
inline Matrix pauli_reconstruct_matrix(const PauliTensor& t) {
  const int n = t.num_qubits();
  if (n > kMaxDenseQubits) throw CapacityError("dense matrices are limited to 12 qubits");
  std::vector<Complex> buf(t.coeffs().begin(), t.coeffs().end());
  const Complex im{0.0, 1.0};
  buf = detail::transform_all_axes<4, 4>(std::move(buf), n, [&](int, const auto& c, auto& a) {
    a[0] = 0.5 * (c[0] + c[3]);
    a[1] = 0.5 * (c[1] - im * c[2]);
    a[2] = 0.5 * (c[1] + im * c[2]);
    a[3] = 0.5 * (c[0] - c[3]);
  });
  const std::size_t d = dim_of(n);
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t row = detail::spread_bits(i) << 1;
    for (std::size_t j = 0; j < d; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = buf[row | detail::spread_bits(j)];
    }
  }
  return m;
}

/// Rebuilds the density matrix. A tensor that does not describe a valid state
/// is rejected with InvalidState.
inline DensityMatrix pauli_reconstruct(const PauliTensor& t) {
  return DensityMatrix(pauli_reconstruct_matrix(t));
}

}  // namespace sepscope

#endif  // SEPSCOPE_PAULI_HPP
