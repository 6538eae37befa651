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

#ifndef SEPSCOPE_BLOCH_HPP
#define SEPSCOPE_BLOCH_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sepscope/density_matrix.hpp"
#include "sepscope/error.hpp"

namespace sepscope {

/// Unit vector on the Bloch sphere. The extended component n_0 = 1/3 used by
/// the weight function is implied, not stored.
class BlochVector {
 public:
  explicit BlochVector(const Eigen::Vector3d& n) : n_(n) {
    if (!n.allFinite() || std::abs(n.norm() - 1.0) > 1e-12) throw InvalidInput("Bloch vector must have unit norm");
  }
  BlochVector(double x, double y, double z) : BlochVector(Eigen::Vector3d(x, y, z)) {}

  /// Normalizes `v` first; for vectors produced by rotations or search.
  static BlochVector normalized(const Eigen::Vector3d& v) { return BlochVector(Eigen::Vector3d(v / v.norm())); }

  /// theta is the colatitude, phi the azimuth.
  static BlochVector from_angles(double theta, double phi) {
    return BlochVector(Eigen::Vector3d(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)));
  }

  static BlochVector axis(int axis, int sign) {
    Eigen::Vector3d v = Eigen::Vector3d::Zero();
    v(axis - 1) = sign > 0 ? 1.0 : -1.0;
    return BlochVector(v);
  }

  const Eigen::Vector3d& vec() const { return n_; }
  double x() const { return n_(0); }
  double y() const { return n_(1); }
  double z() const { return n_(2); }

  double theta() const { return std::acos(std::clamp(n_(2), -1.0, 1.0)); }
  double phi() const {
    const double p = std::atan2(n_(1), n_(0));
    return p < 0 ? p + 2 * std::numbers::pi : p;
  }

  /// (1 + n.sigma)/2.
  Eigen::Matrix2cd projector() const {
    const Complex i{0.0, 1.0};
    Eigen::Matrix2cd p;
    p << 1.0 + n_(2), n_(0) - i * n_(1), n_(0) + i * n_(1), 1.0 - n_(2);
    return 0.5 * p;
  }

 private:
  Eigen::Vector3d n_;
};

/// Pure product state P_{n_1} x ... x P_{n_N}.
inline Matrix product_projector(const std::vector<BlochVector>& blochs) {
  Matrix out = Matrix::Ones(1, 1);
  for (const auto& b : blochs) out = kron(out, Matrix(b.projector()));
  return out;
}

struct EnsembleTerm {
  double weight = 0.0;
  std::vector<BlochVector> blochs;
};

/// Mixture of pure product states. With nonnegative weights it is a
/// separability certificate for the state it reconstructs.
struct ProductEnsemble {
  int num_qubits = 0;
  std::vector<EnsembleTerm> terms;

  double total_weight() const {
    double s = 0.0;
    for (const auto& t : terms) s += t.weight;
    return s;
  }

  Matrix reconstruct() const {
    const auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
    Matrix m = Matrix::Zero(d, d);
    for (const auto& t : terms) {
      if (t.weight != 0.0) m += t.weight * product_projector(t.blochs);
    }
    return m;
  }

  /// Empty if weights are nonnegative, sum to 1 within 1e-9 and the mixture
  /// matches `target` entrywise within `tolerance`; else the failure.
  std::string check(const Matrix& target, double tolerance = 1e-8) const {
    std::ostringstream why;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (!(terms[k].weight >= 0.0)) {
        why << "term " << k << " has negative weight " << terms[k].weight;
        return why.str();
      }
      if (static_cast<int>(terms[k].blochs.size()) != num_qubits) {
        why << "term " << k << " has " << terms[k].blochs.size() << " Bloch vectors, expected " << num_qubits;
        return why.str();
      }
    }
    if (std::abs(total_weight() - 1.0) > 1e-9) {
      why << "weights sum to " << total_weight();
      return why.str();
    }
    if (target.rows() != static_cast<Eigen::Index>(dim_of(num_qubits))) return "target dimension mismatch";
    const double err = (reconstruct() - target).cwiseAbs().maxCoeff();
    if (err > tolerance) {
      why << "mixture misses the state by " << err;
      return why.str();
    }
    return {};
  }
};

/// Reads real weights over a product family as a mixture. Weights down to
/// -1e-12 are clamped to zero and the rest renormalized; anything more
/// negative throws NotACertificate. `blochs_of(k)` gives term k's vectors.
template <typename BlochsOf>
ProductEnsemble ensemble_from_weights(int num_qubits, const std::vector<double>& weights, BlochsOf&& blochs_of,
                                      const char* family) {
  std::size_t worst = 0;
  for (std::size_t k = 1; k < weights.size(); ++k) {
    if (weights[k] < weights[worst]) worst = k;
  }
  if (!weights.empty() && weights[worst] < -1e-12) {
    std::ostringstream why;
    why << family << " decomposition has weight " << weights[worst] << " at index " << worst
        << "; it does not certify separability";
    throw NotACertificate(why.str());
  }
  double total = 0.0;
  for (double w : weights) total += std::max(w, 0.0);
  ProductEnsemble ens;
  ens.num_qubits = num_qubits;
  ens.terms.reserve(weights.size());
  for (std::size_t k = 0; k < weights.size(); ++k) ens.terms.push_back({std::max(weights[k], 0.0) / total, blochs_of(k)});
  return ens;
}

}  // namespace sepscope

#endif  // SEPSCOPE_BLOCH_HPP
