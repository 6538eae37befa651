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

#ifndef SEPSCOPE_CONTINUUM_HPP
#define SEPSCOPE_CONTINUUM_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
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

inline constexpr double kFourPi = 4.0 * std::numbers::pi;

/// w of the maximally mixed state, (4 pi)^-N.
inline double uniform_weight(int n) { return std::pow(kFourPi, -n); }

namespace detail {

inline std::array<double, 4> extended(const BlochVector& b) { return {1.0 / 3.0, b.x(), b.y(), b.z()}; }

// sum_alpha c_alpha prod_k m_k[alpha_k] over every axis except `skip`
// (skip < 0 contracts everything; the result is then in out[0]).
inline std::array<double, 4> contract_except(std::span<const double> c, int n,
                                             const std::vector<std::array<double, 4>>& m, int skip) {
  std::vector<double> data(c.begin(), c.end());
  auto dot = [](const std::array<double, 4>& v) {
    return [&v](const std::array<double, 4>& in, std::array<double, 1>& out) {
      out[0] = v[0] * in[0] + v[1] * in[1] + v[2] * in[2] + v[3] * in[3];
    };
  };
  for (int axis = n - 1; axis > skip; --axis) {
    data = transform_axis<4, 1, double>(std::span<const double>(data), ipow(4, axis), 1, dot(m[axis]));
  }
  for (int axis = 0; axis < skip; ++axis) {
    data = transform_axis<4, 1, double>(std::span<const double>(data), 1, data.size() / 4, dot(m[axis]));
  }
  std::array<double, 4> out{};
  for (std::size_t k = 0; k < data.size(); ++k) out[k] = data[k];
  return out;
}

}  // namespace detail

/// The l <= 1 weight function
///   w(n_1..n_N) = (3/4pi)^N c_{a_1..a_N} (n_1)_{a_1} ... (n_N)_{a_N},  n_0 = 1/3,
/// by contracting the coefficient tensor one axis at a time.
inline double weight_at(const PauliTensor& t, const std::vector<BlochVector>& blochs) {
  const int n = t.num_qubits();
  if (static_cast<int>(blochs.size()) != n) throw InvalidInput("weight_at: need one Bloch vector per qubit");
  std::vector<std::array<double, 4>> m;
  for (const auto& b : blochs) m.push_back(detail::extended(b));
  return std::pow(3.0 / kFourPi, n) * detail::contract_except(t.coeffs(), n, m, -1)[0];
}

/// Same function through the operator form (4pi)^-N tr(rho prod_k (1 + 3 n_k.sigma)).
inline double weight_at_trace(const DensityMatrix& rho, const std::vector<BlochVector>& blochs) {
  const int n = rho.num_qubits();
  if (static_cast<int>(blochs.size()) != n) throw InvalidInput("weight_at_trace: need one Bloch vector per qubit");
  Matrix op = Matrix::Ones(1, 1);
  for (const auto& b : blochs) {
    const Eigen::Matrix2cd f = Eigen::Matrix2cd::Identity() + 3.0 * (2.0 * b.projector() - Eigen::Matrix2cd::Identity());
    op = kron(op, Matrix(f));
  }
  return (rho.matrix() * op).trace().real() * uniform_weight(n);
}

/// -2^{2n-1} / (4pi)^n. Each factor 1 + 3 n.sigma has eigenvalues 4 and -2.
inline double weight_floor(int n) {
  if (n < 1) throw RangeError("weight_floor: n must be >= 1");
  return -std::ldexp(1.0, 2 * n - 1) * uniform_weight(n);
}

/// Threshold eps* = w_M / (w_M - min(wmin, 0)) with w_M = (4pi)^-N.
inline double continuous_threshold(int n, double wmin) {
  const double base = uniform_weight(n);
  if (wmin > base * (1.0 + 1e-12)) throw RangeError("continuous_threshold: wmin exceeds the maximally mixed weight");
  return mixing_threshold(base, wmin);
}

inline double continuous_threshold(const PauliTensor& t, double wmin) { return continuous_threshold(t.num_qubits(), wmin); }

/// Closed form of w for the three-qubit GHZ state.
inline double ghz_weight_closed_form(const std::array<double, 3>& theta, const std::array<double, 3>& phi) {
  const double c1 = std::cos(theta[0]), c2 = std::cos(theta[1]), c3 = std::cos(theta[2]);
  const double s1 = std::sin(theta[0]), s2 = std::sin(theta[1]), s3 = std::sin(theta[2]);
  return (1.0 + 9.0 * (c1 * c2 + c2 * c3 + c1 * c3) + 27.0 * s1 * s2 * s3 * std::cos(phi[0] + phi[1] + phi[2])) /
         std::pow(kFourPi, 3);
}

/// (2 sqrt 5)^-n, the radius in delta of a ball of separable states.
inline double delta_ball_radius(int n) {
  if (n < 1) throw RangeError("delta_ball_radius: n must be >= 1");
  return std::pow(20.0, -0.5 * n);
}

struct WeightMinimum {
  double value = 0.0;
  std::vector<BlochVector> blochs;
};

struct MinimizeOptions {
  int starts = 64;
  std::uint64_t seed = 0;
  int max_sweeps = 20000;
};

/// Multi-start search for min w over N Bloch spheres.
///
/// w is affine in each n_k, so with the other vectors fixed the optimal n_k is
/// exactly minus the normalized effective field; sweeping the qubits gives a
/// monotone descent. Starts are drawn from keyed streams and the best start
/// (lowest index on ties) is reported, so the result depends only on the seed.
inline WeightMinimum minimize_weight(const PauliTensor& t, const MinimizeOptions& opt = {}) {
  const int n = t.num_qubits();
  if (n > kMaxPauliQubits) throw CapacityError("minimize_weight: too many qubits");
  if (opt.starts < 1) throw RangeError("minimize_weight: need at least one start");
  const double scale = std::pow(3.0 / kFourPi, n);

  struct Local {
    double value;
    std::vector<Eigen::Vector3d> dirs;
  };
  std::vector<Local> results(static_cast<std::size_t>(opt.starts));

  parallel_for(results.size(), [&](std::size_t s) {
    auto rng = keyed_engine(opt.seed, s);
    std::normal_distribution<double> normal;
    std::vector<Eigen::Vector3d> dirs(n);
    std::vector<std::array<double, 4>> m(n);
    for (int k = 0; k < n; ++k) {
      Eigen::Vector3d v(normal(rng), normal(rng), normal(rng));
      dirs[k] = v / v.norm();
      m[k] = {1.0 / 3.0, dirs[k](0), dirs[k](1), dirs[k](2)};
    }
    double value = detail::contract_except(t.coeffs(), n, m, -1)[0];
    for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
      const double before = value;
      for (int k = 0; k < n; ++k) {
        const auto field = detail::contract_except(t.coeffs(), n, m, k);
        const Eigen::Vector3d f(field[1], field[2], field[3]);
        const double norm = f.norm();
        if (norm == 0.0) continue;
        dirs[k] = -f / norm;
        m[k] = {1.0 / 3.0, dirs[k](0), dirs[k](1), dirs[k](2)};
        value = field[0] / 3.0 - norm;
      }
      if (before - value <= 1e-15 * std::max(1.0, std::abs(value))) break;
    }
    results[s] = {value, std::move(dirs)};
  });

  std::size_t best = 0;
  for (std::size_t s = 1; s < results.size(); ++s) {
    if (results[s].value < results[best].value) best = s;
  }
  WeightMinimum out;
  out.value = scale * results[best].value;
  for (const auto& v : results[best].dirs) out.blochs.push_back(BlochVector::normalized(v));
  return out;
}

}  // namespace sepscope

#endif  // SEPSCOPE_CONTINUUM_HPP
