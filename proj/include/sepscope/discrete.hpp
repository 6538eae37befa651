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

#ifndef SEPSCOPE_DISCRETE_HPP
#define SEPSCOPE_DISCRETE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "sepscope/bloch.hpp"
#include "sepscope/density_matrix.hpp"
#include "sepscope/error.hpp"
#include "sepscope/pauli.hpp"
#include "sepscope/tensor.hpp"

namespace sepscope {

inline constexpr int kMaxDiscreteQubits = 8;

/// Identity resolution weight: 1 = omega (P_i + Pbar_i) for each axis i.
inline constexpr double kOmega = 1.0 / 3.0;

/// Weights over the 6^N product projectors P^{s_1}_{i_1} x ... x P^{s_N}_{i_N},
/// P^{+}_i = (1 + sigma_i)/2 and P^{-}_i = (1 - sigma_i)/2.
///
/// Per-qubit digit b = 2 (i - 1) + (s < 0), i.e. x+, x-, y+, y-, z+, z-;
/// qubit 1 is the most significant digit.
struct DiscreteDecomposition {
  int num_qubits = 0;
  std::vector<double> weights;

  static int axis_of(int digit) { return digit / 2 + 1; }
  static int sign_of(int digit) { return digit % 2 == 0 ? +1 : -1; }

  std::vector<int> digits(std::size_t flat) const {
    std::vector<int> out(num_qubits);
    for (int k = num_qubits - 1; k >= 0; --k) {
      out[k] = static_cast<int>(flat % 6);
      flat /= 6;
    }
    return out;
  }

  std::vector<BlochVector> blochs(std::size_t flat) const {
    std::vector<BlochVector> out;
    out.reserve(num_qubits);
    for (int b : digits(flat)) out.push_back(BlochVector::axis(axis_of(b), sign_of(b)));
    return out;
  }

  double total_weight() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
  }

  /// sum_k w_k (product projector k), with no sign requirement on the weights.
  Matrix reconstruct() const {
    const auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
    Matrix m = Matrix::Zero(d, d);
    for (std::size_t k = 0; k < weights.size(); ++k) m += weights[k] * product_projector(blochs(k));
    return m;
  }
};

/// Weight of each product projector:
///   2^-N sum_{S} c_{alpha(S)} prod_{k in S} s_k prod_{k not in S} omega,
/// computed as N per-qubit 4 -> 6 maps, w(i, s) = (omega c_0 + s c_i) / 2.
inline DiscreteDecomposition discrete_decompose(const PauliTensor& t) {
  if (t.num_qubits() > kMaxDiscreteQubits) throw CapacityError("discrete_decompose is limited to 8 qubits");
  t.validate();
  std::vector<double> c(t.coeffs().begin(), t.coeffs().end());
  auto w = detail::transform_all_axes<4, 6>(std::move(c), t.num_qubits(), [](int, const auto& a, auto& out) {
    for (int i = 1; i <= 3; ++i) {
      out[2 * (i - 1)] = 0.5 * (kOmega * a[0] + a[i]);
      out[2 * (i - 1) + 1] = 0.5 * (kOmega * a[0] - a[i]);
    }
  });
  return DiscreteDecomposition{t.num_qubits(), std::move(w)};
}

struct MinWeight {
  double value = 0.0;
  std::size_t index = 0;
};

/// Smallest weight; ties go to the lowest flat index (lexicographic order).
inline MinWeight min_weight(const std::vector<double>& weights) {
  MinWeight best{weights.empty() ? 0.0 : weights[0], 0};
  for (std::size_t k = 1; k < weights.size(); ++k) {
    if (weights[k] < best.value) best = {weights[k], k};
  }
  return best;
}

inline MinWeight min_weight(const DiscreteDecomposition& d) { return min_weight(d.weights); }

/// Largest eps such that every weight of (1 - eps) base + eps w stays
/// nonnegative, where base is the (uniform, positive) weight of M_d and
/// `min_w` the smallest weight of rho1. Returns 1 when min_w >= 0.
inline double mixing_threshold(double base, double min_w) {
  if (min_w >= 0.0) return 1.0;
  return 1.0 / (1.0 - min_w / base);
}

inline double discrete_threshold(const DensityMatrix& rho1) {
  if (rho1.num_qubits() > kMaxDiscreteQubits) throw CapacityError("discrete_threshold is limited to 8 qubits");
  const auto d = discrete_decompose(pauli_expand(rho1));
  return mixing_threshold(std::pow(6.0, -rho1.num_qubits()), min_weight(d).value);
}

/// 1/(4^n - 1): the threshold when every non-identity coefficient sits at its
/// adversarial bound +-1. A lower bound on discrete_threshold of any state.
inline double worst_case_discrete_threshold(int n) {
  if (n < 1) throw RangeError("worst_case_discrete_threshold: n must be >= 1");
  return 1.0 / (std::ldexp(1.0, 2 * n) - 1.0);
}

/// Coefficient tensor with all entries +-1 (c_0 = 1) signed so that the weight
/// of x+ x ... x x+ reaches the worst case (2 - 4^N)/6^N. Not a valid state
/// in general.
inline PauliTensor adversarial_tensor(int n) {
  auto t = PauliTensor::identity(n);
  for (std::size_t k = 1; k < t.size(); ++k) {
    bool on_x_axes = true;
    for (int a : t.multi_index(k)) on_x_axes = on_x_axes && (a == 0 || a == 1);
    t[k] = on_x_axes ? -1.0 : 1.0;
  }
  return t;
}

/// Separable ensemble over the six axis states per qubit; throws
/// NotACertificate if any weight is below -1e-12.
inline ProductEnsemble ensemble_from_discrete(const DiscreteDecomposition& d) {
  return ensemble_from_weights(d.num_qubits, d.weights, [&](std::size_t k) { return d.blochs(k); }, "discrete");
}

}  // namespace sepscope

#endif  // SEPSCOPE_DISCRETE_HPP
