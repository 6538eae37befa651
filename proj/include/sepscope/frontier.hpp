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

#ifndef SEPSCOPE_FRONTIER_HPP
#define SEPSCOPE_FRONTIER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sepscope/bloch.hpp"
#include "sepscope/continuum.hpp"
#include "sepscope/density_matrix.hpp"
#include "sepscope/discrete.hpp"
#include "sepscope/error.hpp"
#include "sepscope/pauli.hpp"
#include "sepscope/states.hpp"
#include "sepscope/tetrahedral.hpp"

namespace sepscope {

// ---------------------------------------------------------------------------
// Bounds on the separable ball around M_d

/// 1/(1 + 2^{2n-1}): every state with eps below this is separable, from the
/// eigenvalue floor of the continuous weight function.
inline double lower_bound_continuum(int n) {
  if (n < 1) throw RangeError("lower_bound_continuum: n must be >= 1");
  return 1.0 / (1.0 + std::ldexp(1.0, 2 * n - 1));
}

/// The earlier bound (1 + 2^{n-1})^{-(n-1)}.
inline double lower_bound_prior(int n) {
  if (n < 1) throw RangeError("lower_bound_prior: n must be >= 1");
  return std::pow(1.0 + std::ldexp(1.0, n - 1), -(n - 1));
}

/// 1/(1 + 2^{n/2}); above it an entangled rho_eps exists (see
/// construct_werner_instance). Needs an even qubit count.
inline double upper_bound(int n) {
  if (n < 2 || n % 2 != 0) throw DomainError("upper_bound: n must be even and >= 2");
  return 1.0 / (1.0 + std::ldexp(1.0, n / 2));
}

// ---------------------------------------------------------------------------
// Werner reduction

inline double werner_norm(int d, double eps) { return (4.0 / (double(d) * d)) * (1.0 + eps * (d / 2.0 - 1.0)); }

inline double werner_eps_prime(int d, double eps) { return (eps * d / 2.0) / (1.0 + eps * (d / 2.0 - 1.0)); }

struct WernerReduction {
  int d = 0;
  double eps = 0.0;
  double eps_prime = 0.0;  // closed form
  double norm_A = 0.0;     // trace of the projected, unnormalized state
  /// Entangled fraction read off the projected matrix, (4 <phi|rho|phi> - 1)/3.
  double eps_prime_recovered = 0.0;
  DensityMatrix projected_state = DensityMatrix::unchecked(Matrix::Identity(4, 4) / 4.0);
};

/// Builds (1 - eps) M_{d^2} + eps |psi><psi| on n qubits (two aggregates of
/// n/2 qubits, d = 2^{n/2}), projects each aggregate onto span{|0>, |1>} and
/// renormalizes. The result must equal (1 - eps') M_4 + eps' |phi><phi|
/// entrywise to 1e-12.
inline WernerReduction construct_werner_instance(int n, double eps) {
  if (n < 2 || n % 2 != 0) throw DomainError("construct_werner_instance: n must be even and >= 2");
  if (n > kMaxDenseQubits) throw CapacityError("construct_werner_instance: dense construction is limited to 12 qubits");
  if (!(eps >= 0.0 && eps <= 1.0)) throw RangeError("construct_werner_instance: eps must lie in [0, 1]");
  const int d = 1 << (n / 2);
  const Eigen::Index dd = Eigen::Index{d} * d;

  Matrix rho = Matrix::Zero(dd, dd);
  rho.diagonal().setConstant((1.0 - eps) / static_cast<double>(dd));
  for (Eigen::Index k = 0; k < d; ++k)
    for (Eigen::Index l = 0; l < d; ++l) rho(k * d + k, l * d + l) += eps / d;

  // |a>|b>, a, b in {0, 1}
  const std::array<Eigen::Index, 4> kept{0, 1, d, d + 1};
  Matrix sub(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) sub(r, c) = rho(kept[r], kept[c]);
  rho.resize(0, 0);

  WernerReduction out;
  out.d = d;
  out.eps = eps;
  out.norm_A = sub.trace().real();
  Matrix projected = sub / out.norm_A;
  out.eps_prime = werner_eps_prime(d, eps);
  const double overlap = 0.5 * (projected(0, 0) + projected(0, 3) + projected(3, 0) + projected(3, 3)).real();
  out.eps_prime_recovered = (4.0 * overlap - 1.0) / 3.0;
  const double mismatch = (projected - make_werner(out.eps_prime).matrix()).cwiseAbs().maxCoeff();
  if (mismatch > 1e-12) {
    std::ostringstream why;
    why << "projected state deviates from the Werner form by " << mismatch;
    throw Error(why.str());
  }
  out.projected_state = DensityMatrix(std::move(projected));
  return out;
}

// ---------------------------------------------------------------------------
// Partial transpose

namespace detail {

inline std::uint32_t group_mask(int n, const std::vector<int>& second_group) {
  if (second_group.empty() || static_cast<int>(second_group.size()) >= n) {
    throw DomainError("bipartition: both groups must be nonempty");
  }
  std::uint32_t mask = 0;
  for (int q : second_group) {
    if (q < 1 || q > n) throw DomainError("bipartition: qubit out of range");
    const std::uint32_t bit = 1u << (n - q);
    if (mask & bit) throw DomainError("bipartition: repeated qubit");
    mask |= bit;
  }
  return mask;
}

}  // namespace detail

/// Partial transpose over `second_group` (1-based qubit numbers).
inline Matrix partial_transpose(const DensityMatrix& rho, const std::vector<int>& second_group) {
  const std::uint32_t mask = detail::group_mask(rho.num_qubits(), second_group);
  const Eigen::Index d = rho.dim();
  Matrix out(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const Eigen::Index pi = (i & ~Eigen::Index{mask}) | (j & Eigen::Index{mask});
      const Eigen::Index pj = (j & ~Eigen::Index{mask}) | (i & Eigen::Index{mask});
      out(i, j) = rho(pi, pj);
    }
  }
  return out;
}

/// Smallest eigenvalue of the partial transpose across the cut. Below -1e-9 it
/// certifies entanglement; for two qubits, at or above -1e-9 it certifies
/// separability.
inline double ppt_min_eigenvalue(const DensityMatrix& rho, const std::vector<int>& second_group) {
  return min_eigenvalue(partial_transpose(rho, second_group));
}

inline constexpr int kMaxBipartitionQubits = 8;

/// Every cut of n qubits up to swapping the sides (qubit 1 stays in the first
/// group): 2^{n-1} - 1 of them, each given as its second group.
inline std::vector<std::vector<int>> all_bipartitions(int n) {
  if (n > kMaxBipartitionQubits) throw CapacityError("bipartition scan is limited to 8 qubits");
  std::vector<std::vector<int>> cuts;
  for (std::uint32_t m = 1; m < (1u << (n - 1)); ++m) {
    std::vector<int> group;
    for (int q = 2; q <= n; ++q)
      if (m & (1u << (q - 2))) group.push_back(q);
    cuts.push_back(std::move(group));
  }
  return cuts;
}

// ---------------------------------------------------------------------------
// NMR pseudopure scaling

/// Pseudopure polarization alpha n / 2^n.
inline double nmr_epsilon(int n, double alpha) {
  if (!(alpha > 0.0)) throw RangeError("nmr_epsilon: alpha must be positive");
  return alpha * n * std::ldexp(1.0, -n);
}

/// Smallest n where nmr_epsilon exceeds lower_bound_continuum(n).
inline int nmr_crossing(double alpha) {
  for (int n = 1; n <= 512; ++n) {
    if (nmr_epsilon(n, alpha) > lower_bound_continuum(n)) return n;
  }
  throw RangeError("nmr_crossing: no crossing below 512 qubits");
}

/// Alpha for which nmr_epsilon(n, alpha) = eps.
inline double nmr_alpha_for(double eps, int n) { return eps * std::ldexp(1.0, n) / n; }

enum class NmrRegion { kSeparableGuaranteed, kUndetermined, kEntangledExists };

inline const char* to_string(NmrRegion r) {
  switch (r) {
    case NmrRegion::kSeparableGuaranteed: return "separable";
    case NmrRegion::kUndetermined: return "undetermined";
    case NmrRegion::kEntangledExists: return "entangled-exists";
  }
  return "?";
}

struct NmrRow {
  int n = 0;
  double epsilon = 0.0;
  double lower = 0.0;
  std::optional<double> upper;
  NmrRegion region = NmrRegion::kSeparableGuaranteed;
};

struct NmrAudit {
  double alpha = 0.0;
  std::vector<NmrRow> rows;
  int crossing = 0;
  /// First even n with eps above upper_bound(n), if any within the scan.
  std::optional<int> first_entry;
};

inline NmrAudit nmr_audit(double alpha, int n_max) {
  if (n_max < 1 || n_max > 512) throw RangeError("nmr_audit: n_max must be in 1..512");
  NmrAudit audit;
  audit.alpha = alpha;
  audit.crossing = nmr_crossing(alpha);
  for (int n = 1; n <= n_max; ++n) {
    NmrRow row{n, nmr_epsilon(n, alpha), lower_bound_continuum(n), std::nullopt, NmrRegion::kSeparableGuaranteed};
    if (n % 2 == 0) row.upper = upper_bound(n);
    if (row.upper && row.epsilon > *row.upper) {
      row.region = NmrRegion::kEntangledExists;
      if (!audit.first_entry) audit.first_entry = n;
    } else if (row.epsilon > row.lower) {
      row.region = NmrRegion::kUndetermined;
    }
    audit.rows.push_back(row);
  }
  return audit;
}

// ---------------------------------------------------------------------------
// Classification

enum class Verdict { kSeparableCertified, kEntangledCertified, kUndetermined };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kSeparableCertified: return "separable-certified";
    case Verdict::kEntangledCertified: return "entangled-certified";
    case Verdict::kUndetermined: return "undetermined";
  }
  return "?";
}

inline Verdict verdict_from_string(const std::string& s) {
  if (s == "separable-certified") return Verdict::kSeparableCertified;
  if (s == "entangled-certified") return Verdict::kEntangledCertified;
  if (s == "undetermined") return Verdict::kUndetermined;
  throw InvalidInput("unknown verdict '" + s + "'");
}

struct Thresholds {
  std::optional<double> discrete;
  double continuous_floor = 0.0;
  std::optional<double> continuous_state;
  std::optional<double> tetrahedral;
};

struct Bounds {
  double lower_continuum = 0.0;
  double lower_prior = 0.0;
  std::optional<double> upper;
  double delta_ball = 0.0;
};

struct PptWitness {
  std::vector<int> second_group;
  double min_eigenvalue = 0.0;
  std::string description;
};

struct SeparabilityReport {
  int num_qubits = 0;
  std::optional<double> epsilon;
  double delta = 0.0;
  Thresholds thresholds;
  Bounds bounds;
  Verdict verdict = Verdict::kUndetermined;
  /// "discrete", "tetrahedral" or "tetrahedral-optimized" when certified.
  std::string certificate_method;
  std::optional<ProductEnsemble> certificate;
  std::optional<PptWitness> witness;
  /// The classified state rho_eps.
  Matrix state;
};

struct ClassifyOptions {
  std::uint64_t seed = 0;
  int minimize_starts = 64;
  TetraOptions tetra{};
};

inline constexpr int kMaxCertificateQubits = 6;

inline Bounds bounds_for(int n) {
  Bounds b;
  b.lower_continuum = lower_bound_continuum(n);
  b.lower_prior = lower_bound_prior(n);
  if (n % 2 == 0) b.upper = upper_bound(n);
  b.delta_ball = delta_ball_radius(n);
  return b;
}

/// Classifies rho_eps = (1 - eps) M_d + eps rho1 (rho1 itself when eps is
/// absent). Tries, in order, the discrete ensemble, the standard tetrahedral
/// ensemble and an optimized tetrahedral ensemble; the first all-nonnegative
/// one that reconstructs rho_eps to 1e-8 certifies separability. Otherwise a
/// negative partial transpose across any cut certifies entanglement; failing
/// both the verdict is undetermined.
inline SeparabilityReport classify(const DensityMatrix& rho1, std::optional<double> eps, const ClassifyOptions& opt = {}) {
  const int n = rho1.num_qubits();
  const double e = eps.value_or(1.0);
  const DensityMatrix state = mix(e, rho1);

  SeparabilityReport rep;
  rep.num_qubits = n;
  rep.epsilon = eps;
  rep.delta = delta_distance(state);
  rep.bounds = bounds_for(n);
  rep.thresholds.continuous_floor = continuous_threshold(n, weight_floor(n));
  rep.state = state.matrix();

  std::optional<PauliTensor> t1, te;
  if (n <= kMaxPauliQubits) {
    t1 = pauli_expand(rho1);
    te = pauli_expand(state);
  }
  if (t1 && n <= 6) {
    const auto wmin = minimize_weight(*t1, {opt.minimize_starts, opt.seed});
    rep.thresholds.continuous_state = continuous_threshold(n, std::min(wmin.value, uniform_weight(n)));
  }

  auto try_certify = [&](const std::vector<double>& weights, auto&& make_ensemble, const char* method) {
    if (rep.certificate || n > kMaxCertificateQubits || min_weight(weights).value < -1e-12) return;
    ProductEnsemble ens = make_ensemble();
    if (ens.check(state.matrix(), 1e-8).empty()) {
      rep.certificate = std::move(ens);
      rep.certificate_method = method;
    }
  };

  if (te && n <= kMaxDiscreteQubits) {
    rep.thresholds.discrete = mixing_threshold(std::pow(6.0, -n), min_weight(discrete_decompose(*t1)).value);
    const auto dec = discrete_decompose(*te);
    try_certify(dec.weights, [&] { return ensemble_from_discrete(dec); }, "discrete");
  }
  if (te && n <= kMaxCertificateQubits) {
    rep.thresholds.tetrahedral = tetrahedral_threshold(tetrahedral_decompose(*t1));
    const auto dec = tetrahedral_decompose(*te);
    try_certify(dec.weights, [&] { return ensemble_from_tetrahedral(dec); }, "tetrahedral");
  }
  if (!rep.certificate && te && n <= kMaxTetraOptimizeQubits) {
    TetraOptions topt = opt.tetra;
    topt.seed = opt.seed;
    const auto best = optimize_tetrahedra(rho1, topt);
    rep.thresholds.tetrahedral = std::max(*rep.thresholds.tetrahedral, best.threshold);
    const auto dec = tetrahedral_decompose(*te, best.tetrahedra);
    try_certify(dec.weights, [&] { return ensemble_from_tetrahedral(dec); }, "tetrahedral-optimized");
  }

  if (rep.certificate) {
    rep.verdict = Verdict::kSeparableCertified;
    return rep;
  }
  if (n >= 2 && n <= kMaxBipartitionQubits) {
    for (const auto& cut : all_bipartitions(n)) {
      const double lo = ppt_min_eigenvalue(state, cut);
      if (lo < -1e-9 && (!rep.witness || lo < rep.witness->min_eigenvalue)) {
        rep.witness = PptWitness{cut, lo, {}};
      }
    }
  }
  if (rep.witness) {
    std::ostringstream why;
    why << "partial transpose over qubits {";
    for (std::size_t k = 0; k < rep.witness->second_group.size(); ++k) why << (k ? "," : "") << rep.witness->second_group[k];
    why << "} has eigenvalue " << rep.witness->min_eigenvalue;
    rep.witness->description = why.str();
    rep.verdict = Verdict::kEntangledCertified;
  } else {
    rep.verdict = Verdict::kUndetermined;
  }
  return rep;
}

}  // namespace sepscope

#endif  // SEPSCOPE_FRONTIER_HPP
