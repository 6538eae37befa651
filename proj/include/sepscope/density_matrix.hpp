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

#ifndef SEPSCOPE_DENSITY_MATRIX_HPP
#define SEPSCOPE_DENSITY_MATRIX_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <sstream>
#include <string>

#include "sepscope/error.hpp"

namespace sepscope {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsd = -1e-9;
}  // namespace tol

// Dense operations are capped at 12 qubits (4096 x 4096).
inline constexpr int kMaxDenseQubits = 12;

inline std::size_t dim_of(int num_qubits) { return std::size_t{1} << num_qubits; }

/// Number of qubits for a dimension, or -1 when `dim` is not 2^N with N >= 1.
inline int qubits_for_dim(Eigen::Index dim) {
  if (dim < 2) return -1;
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return (Eigen::Index{1} << n) == dim ? n : -1;
}

/// Single-qubit Pauli matrix sigma_alpha, alpha in {0,1,2,3}; sigma_0 is the identity.
inline Eigen::Matrix2cd pauli(int alpha) {
  const Complex i{0.0, 1.0};
  Eigen::Matrix2cd m;
  switch (alpha) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw InvalidInput("pauli index must be in 0..3");
  }
  return m;
}

/// Kronecker product with `a` as the left (slower-varying) factor.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

inline double min_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

/// N-qubit density matrix. Qubit 1 is the leftmost tensor factor, i.e. the most
/// significant bit of the row and column index.
///
/// The checked constructor enforces Hermiticity and unit trace to 1e-10 and a
/// minimum eigenvalue of at least -1e-9, throwing InvalidState otherwise.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    num_qubits_ = checked_qubits(entries_);
    validate();
  }

  /// Skips the eigenvalue check. For states that are valid by construction
  /// (mixtures of known states) at sizes where an eigensolve is wasteful.
  static DensityMatrix unchecked(Matrix entries) {
    return DensityMatrix(std::move(entries), Unchecked{});
  }

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

  double purity() const { return (entries_ * entries_).trace().real(); }

  /// Returns an empty string if `m` is a valid density matrix, else a message
  /// naming the first failed invariant.
  static std::string check(const Matrix& m) {
    std::ostringstream why;
    if (m.rows() != m.cols() || qubits_for_dim(m.rows()) < 0) {
      why << "dimension " << m.rows() << "x" << m.cols() << " is not 2^N x 2^N";
      return why.str();
    }
    if (!m.allFinite()) return "entries are not finite";
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol::kHermitian) {
      why << "not Hermitian (max deviation " << herm << ")";
      return why.str();
    }
    const Complex tr = m.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > tol::kTrace) {
      why << "trace is " << tr.real() << (tr.imag() >= 0 ? "+" : "") << tr.imag() << "i, not 1";
      return why.str();
    }
    const double lo = min_eigenvalue(m);
    if (lo < tol::kPsd) {
      why << "not positive semidefinite (min eigenvalue " << lo << ")";
      return why.str();
    }
    return {};
  }

 private:
  struct Unchecked {};
  DensityMatrix(Matrix entries, Unchecked) : entries_(std::move(entries)) {
    num_qubits_ = checked_qubits(entries_);
  }

  static int checked_qubits(const Matrix& m) {
    const int n = m.rows() == m.cols() ? qubits_for_dim(m.rows()) : -1;
    if (n < 0) {
      std::ostringstream why;
      why << "density matrix must be 2^N x 2^N, got " << m.rows() << "x" << m.cols();
      throw InvalidInput(why.str());
    }
    if (n > kMaxDenseQubits) throw CapacityError("dense matrices are limited to 12 qubits");
    return n;
  }

  void validate() const {
    if (auto why = check(entries_); !why.empty()) throw InvalidState("invalid density matrix: " + why);
  }

  Matrix entries_;
  int num_qubits_ = 0;
};

}  // namespace sepscope

#endif  // SEPSCOPE_DENSITY_MATRIX_HPP
