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

#ifndef SEPSCOPE_TETRAHEDRAL_HPP
#define SEPSCOPE_TETRAHEDRAL_HPP

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "sepscope/bloch.hpp"
#include "sepscope/density_matrix.hpp"
#include "sepscope/discrete.hpp"
#include "sepscope/error.hpp"
#include "sepscope/parallel.hpp"
#include "sepscope/pauli.hpp"
#include "sepscope/random.hpp"
#include "sepscope/tensor.hpp"

namespace sepscope {

inline constexpr int kMaxTetraOptimizeQubits = 4;

/// Four Bloch vectors forming a regular tetrahedron:
/// sum_v n_v = 0 and sum_v n_v n_v^T = (4/3) 1, both to 1e-12.
class Tetrahedron {
 public:
  explicit Tetrahedron(std::array<BlochVector, 4> vertices) : vertices_(std::move(vertices)) {
    Eigen::Vector3d sum = Eigen::Vector3d::Zero();
    Eigen::Matrix3d frame = Eigen::Matrix3d::Zero();
    for (const auto& v : vertices_) {
      sum += v.vec();
      frame += v.vec() * v.vec().transpose();
    }
    const double centroid = sum.cwiseAbs().maxCoeff();
    const double spread = (frame - (4.0 / 3.0) * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    if (centroid > 1e-12 || spread > 1e-12) {
      std::ostringstream why;
      why << "not a regular tetrahedron frame (centroid " << centroid << ", frame deviation " << spread << ")";
      throw FrameError(why.str());
    }
  }

  /// (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1), scaled to unit length.
  static Tetrahedron standard() {
    const double s = 1.0 / std::sqrt(3.0);
    return Tetrahedron({BlochVector(s, s, s), BlochVector(s, -s, -s), BlochVector(-s, s, -s), BlochVector(-s, -s, s)});
  }

  Tetrahedron rotated(const Eigen::Matrix3d& r) const {
    return Tetrahedron({BlochVector::normalized(r * vertices_[0].vec()), BlochVector::normalized(r * vertices_[1].vec()),
                        BlochVector::normalized(r * vertices_[2].vec()), BlochVector::normalized(r * vertices_[3].vec())});
  }

  const BlochVector& operator[](int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const std::array<BlochVector, 4>& vertices() const { return vertices_; }

 private:
  std::array<BlochVector, 4> vertices_;
};

/// R = Rz(a) Ry(b) Rz(c).
inline Eigen::Matrix3d euler_zyz(double a, double b, double c) {
  using Eigen::AngleAxisd;
  return (AngleAxisd(a, Eigen::Vector3d::UnitZ()) * AngleAxisd(b, Eigen::Vector3d::UnitY()) *
          AngleAxisd(c, Eigen::Vector3d::UnitZ()))
      .toRotationMatrix();
}

/// Weights over the 4^N products of tetrahedron vertices, one vertex per qubit
/// (qubit 1 most significant).
struct TetrahedralDecomposition {
  int num_qubits = 0;
  std::vector<Tetrahedron> tetrahedra;
  std::vector<double> weights;

  std::vector<BlochVector> blochs(std::size_t flat) const {
    std::vector<BlochVector> out(tetrahedra.size(), BlochVector(0, 0, 1));
    for (int k = num_qubits - 1; k >= 0; --k) {
      out[static_cast<std::size_t>(k)] = tetrahedra[static_cast<std::size_t>(k)][static_cast<int>(flat % 4)];
      flat /= 4;
    }
    return out;
  }

  double total_weight() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
  }

  Matrix reconstruct() const {
    const auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
    Matrix m = Matrix::Zero(d, d);
    for (std::size_t k = 0; k < weights.size(); ++k) m += weights[k] * product_projector(blochs(k));
    return m;
  }
};

namespace detail {

inline std::vector<double> tetra_weights(std::span<const double> c, int n, const std::vector<Tetrahedron>& tets) {
  std::vector<double> data(c.begin(), c.end());
  return transform_all_axes<4, 4>(std::move(data), n, [&](int axis, const auto& a, auto& out) {
    const auto& tet = tets[static_cast<std::size_t>(axis)];
    for (int v = 0; v < 4; ++v) {
      const auto& nv = tet[v];
      out[static_cast<std::size_t>(v)] = 0.25 * (a[0] + 3.0 * (nv.x() * a[1] + nv.y() * a[2] + nv.z() * a[3]));
    }
  });
}

}  // namespace detail

/// Weight at vertex tuple (v_1..v_N) = 4^-N tr(rho prod_k (1 + 3 n_{v_k}.sigma)),
/// computed as per-qubit maps w(v) = (c_0 + 3 n_v . c)/4.
inline TetrahedralDecomposition tetrahedral_decompose(const PauliTensor& t, std::vector<Tetrahedron> tets) {
  t.validate();
  if (static_cast<int>(tets.size()) != t.num_qubits()) throw InvalidInput("tetrahedral_decompose: need one tetrahedron per qubit");
  auto w = detail::tetra_weights(t.coeffs(), t.num_qubits(), tets);
  return TetrahedralDecomposition{t.num_qubits(), std::move(tets), std::move(w)};
}

inline TetrahedralDecomposition tetrahedral_decompose(const PauliTensor& t) {
  return tetrahedral_decompose(t, std::vector<Tetrahedron>(static_cast<std::size_t>(t.num_qubits()), Tetrahedron::standard()));
}

/// Mixing threshold of a decomposition against the uniform weight 4^-N of M_d.
inline double tetrahedral_threshold(const TetrahedralDecomposition& d) {
  return mixing_threshold(std::ldexp(1.0, -2 * d.num_qubits), min_weight(d.weights).value);
}

inline ProductEnsemble ensemble_from_tetrahedral(const TetrahedralDecomposition& d) {
  return ensemble_from_weights(d.num_qubits, d.weights, [&](std::size_t k) { return d.blochs(k); }, "tetrahedral");
}

struct TetraOptions {
  int budget = 200;  // simplex iterations per polish round
  int starts = 32;
  int rounds = 6;    // restarts at the incumbent with a halved step
  std::uint64_t seed = 0;
};

struct TetraOptimization {
  std::vector<Tetrahedron> tetrahedra;
  double threshold = 0.0;
  double min_weight = 0.0;
  /// Best threshold after each start; non-decreasing.
  std::vector<double> trace;
};

inline std::vector<Tetrahedron> tetrahedra_from_angles(std::span<const double> angles) {
  std::vector<Tetrahedron> tets;
  for (std::size_t k = 0; k + 2 < angles.size(); k += 3) {
    tets.push_back(Tetrahedron::standard().rotated(euler_zyz(angles[k], angles[k + 1], angles[k + 2])));
  }
  return tets;
}

/// Searches per-qubit rotations of the tetrahedra for the orientation that
/// maximizes the mixing threshold of rho1, i.e. maximizes the smallest
/// tetrahedral weight. Each start runs Nelder-Mead on the 3N Euler angles,
/// restarted `rounds` times from the incumbent with a shrinking simplex.
/// Start 0 is the standard orientation.
inline TetraOptimization optimize_tetrahedra(const DensityMatrix& rho1, const TetraOptions& opt = {}) {
  const int n = rho1.num_qubits();
  if (n > kMaxTetraOptimizeQubits) throw CapacityError("optimize_tetrahedra is limited to 4 qubits");
  if (opt.starts < 1 || opt.budget < 1 || opt.rounds < 1) throw RangeError("optimize_tetrahedra: empty budget");
  const PauliTensor t = pauli_expand(rho1);
  const double base = std::ldexp(1.0, -2 * n);
  const std::size_t dims = static_cast<std::size_t>(3 * n);

  struct Problem {
    const PauliTensor* tensor;
    int n;
    double base;
  };
  const Problem problem{&t, n, base};
  // Negated smallest weight in units of the uniform weight.
  auto objective = [](const gsl_vector* x, void* params) -> double {
    const auto* p = static_cast<const Problem*>(params);
    const auto tets = tetrahedra_from_angles(std::span<const double>(x->data, x->size));
    const auto w = detail::tetra_weights(p->tensor->coeffs(), p->n, tets);
    return -min_weight(w).value / p->base;
  };

  struct Local {
    double score = 0.0;
    std::vector<double> angles;
  };
  std::vector<Local> results(static_cast<std::size_t>(opt.starts));
  gsl_set_error_handler_off();

  parallel_for(results.size(), [&](std::size_t s) {
    std::vector<double> x0(dims, 0.0);
    if (s > 0) {
      auto rng = keyed_engine(opt.seed, s);
      std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
      for (auto& a : x0) a = angle(rng);
    }
    gsl_multimin_function fn{objective, dims, const_cast<Problem*>(&problem)};
    std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> x(gsl_vector_alloc(dims), gsl_vector_free);
    std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> step(gsl_vector_alloc(dims), gsl_vector_free);
    std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)> nm(
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dims), gsl_multimin_fminimizer_free);
    for (std::size_t i = 0; i < dims; ++i) gsl_vector_set(x.get(), i, x0[i]);
    double best = objective(x.get(), const_cast<Problem*>(&problem));
    double step_size = 0.5;
    for (int round = 0; round < opt.rounds; ++round, step_size *= 0.5) {
      gsl_vector_set_all(step.get(), step_size);
      gsl_multimin_fminimizer_set(nm.get(), &fn, x.get(), step.get());
      for (int it = 0; it < opt.budget; ++it) {
        if (gsl_multimin_fminimizer_iterate(nm.get()) != GSL_SUCCESS) break;
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(nm.get()), 1e-10) == GSL_SUCCESS) break;
      }
      if (gsl_multimin_fminimizer_minimum(nm.get()) < best) {
        best = gsl_multimin_fminimizer_minimum(nm.get());
        gsl_vector_memcpy(x.get(), gsl_multimin_fminimizer_x(nm.get()));
      }
    }
    results[s].score = -best;
    results[s].angles.assign(x->data, x->data + dims);
  });

  TetraOptimization out;
  std::size_t best = 0;
  for (std::size_t s = 0; s < results.size(); ++s) {
    if (results[s].score > results[best].score) best = s;
    out.trace.push_back(mixing_threshold(1.0, results[best].score));
  }
  out.tetrahedra = tetrahedra_from_angles(results[best].angles);
  const auto dec = tetrahedral_decompose(t, out.tetrahedra);
  out.min_weight = min_weight(dec.weights).value;
  out.threshold = tetrahedral_threshold(dec);
  return out;
}

}  // namespace sepscope

#endif  // SEPSCOPE_TETRAHEDRAL_HPP
