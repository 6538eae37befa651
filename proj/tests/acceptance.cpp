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

// Acceptance suite. One PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sepscope.hpp"

using namespace sepscope;

namespace {

const double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string failures;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (!failures.empty()) failures += "; ";
    failures += what;
    pass = false;
  }
};

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// 1. Two-qubit worst case.
void worst_case_two_qubit(Outcome& o) {
  o.require(std::abs(worst_case_discrete_threshold(2) - 1.0 / 15.0) <= 1e-15, "worst_case_discrete_threshold(2) != 1/15");
  const double adv = min_weight(discrete_decompose(adversarial_tensor(2))).value;
  o.require(std::abs(adv + 14.0 / 36.0) <= 1e-15, "adversarial minimum != -14/36");
  // Every +-1 assignment of the 15 non-identity coefficients.
  double worst = 1.0;
  for (unsigned pattern = 0; pattern < (1u << 15); ++pattern) {
    auto t = PauliTensor::identity(2);
    for (std::size_t k = 1; k < 16; ++k) t[k] = (pattern >> (k - 1)) & 1u ? 1.0 : -1.0;
    worst = std::min(worst, min_weight(discrete_decompose(t)).value);
  }
  o.require(std::abs(worst + 14.0 / 36.0) <= 1e-15, "sign scan minimum != -14/36");
  o.require(std::abs(mixing_threshold(1.0 / 36.0, worst) - 1.0 / 15.0) <= 1e-15, "sign scan threshold != 1/15");
  o.detail << "min weight " << worst * 36 << "/36, threshold 1/" << 1.0 / worst_case_discrete_threshold(2);
}

// 2. GHZ constants.
void ghz_constants(Outcome& o) {
  const auto ghz = make_ghz();
  const double lo = min_weight(discrete_decompose(pauli_expand(ghz))).value;
  o.require(std::abs(lo + 26.0 / 216.0) <= 1e-12, "discrete min weight != -26/216");
  const double disc = discrete_threshold(ghz);
  const double cont = continuous_threshold(3, -26.0 / std::pow(4 * kPi, 3));
  const double found = continuous_threshold(3, minimize_weight(pauli_expand(ghz)).value);
  o.require(std::abs(disc - 1.0 / 27.0) <= 1e-12, "discrete threshold != 1/27");
  o.require(std::abs(cont - 1.0 / 27.0) <= 1e-12, "continuous threshold != 1/27");
  o.require(std::abs(found - 1.0 / 27.0) <= 1e-12, "continuous threshold from the minimizer != 1/27");
  o.detail << "discrete min " << lo * 216 << "/216, thresholds 1/" << 1 / disc << " 1/" << 1 / cont << " 1/" << 1 / found;
}

// 3. GHZ continuum minimum and its location.
void ghz_continuum_minimum(Outcome& o) {
  const auto best = minimize_weight(pauli_expand(make_ghz()));
  const double target = -26.0 / std::pow(4 * kPi, 3);
  o.require(std::abs(best.value - target) <= 1e-9, "minimum differs from -26/(4pi)^3");
  double phi = 0.0, theta_err = 0.0;
  for (const auto& b : best.blochs) {
    theta_err = std::max(theta_err, std::abs(b.theta() - kPi / 2));
    phi += b.phi();
  }
  const double phi_err = std::abs(std::remainder(phi - kPi, 2 * kPi));
  o.require(theta_err <= 1e-4, "theta not at pi/2");
  o.require(phi_err <= 1e-4, "phi sum not pi mod 2pi");
  o.detail << "w*(4pi)^3 = " << best.value * std::pow(4 * kPi, 3) << ", max |theta-pi/2| " << theta_err
           << ", |sum phi - pi| " << phi_err;
}

// 4. Universal lower bound and the crossover against the earlier bound.
void universal_lower_bound(Outcome& o) {
  for (int n = 1; n <= 20; ++n) {
    o.require(continuous_threshold(n, weight_floor(n)) == 1.0 / (1.0 + std::ldexp(1.0, 2 * n - 1)),
              "floor threshold inexact at N=" + std::to_string(n));
  }
  int crossover = 0;
  for (int n = 2; n <= 60 && !crossover; ++n) {
    bool beats_from_here = true;
    for (int m = n; m <= 60; ++m) beats_from_here = beats_from_here && lower_bound_continuum(m) > lower_bound_prior(m);
    if (beats_from_here) crossover = n;
  }
  const int kPinnedCrossover = 4;
  o.require(crossover == kPinnedCrossover, "crossover moved to N=" + std::to_string(crossover));
  o.detail << "exact for N=1..20, above the earlier bound for N >= " << crossover;
}

// 5. Optimized tetrahedra for GHZ.
void tetrahedral_ghz(Outcome& o) {
  const auto best = optimize_tetrahedra(make_ghz());
  const double target = 1.0 / (3.0 + 6.0 * std::sqrt(2.0));
  o.require(best.threshold >= target - 1e-6, "threshold below 1/(3+6 sqrt 2)");
  const auto state = mix(std::min(best.threshold, 1.0), make_ghz());
  const auto dec = tetrahedral_decompose(pauli_expand(state), best.tetrahedra);
  try {
    const auto ens = ensemble_from_tetrahedral(dec);
    o.require(ens.terms.size() == 64, "ensemble does not have 64 terms");
    const auto why = ens.check(state.matrix(), 1e-8);
    o.require(why.empty(), "ensemble invalid: " + why);
  } catch (const NotACertificate& e) {
    o.require(false, e.what());
  }
  o.detail << "threshold " << best.threshold << " vs " << target << ", 64-term ensemble at threshold";
}

double ppt_of_werner(int n, double eps) {
  return ppt_min_eigenvalue(construct_werner_instance(n, eps).projected_state, {2});
}

double boundary_by_bisection(int n, double lo, double hi) {
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ppt_of_werner(n, mid) < 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

// 6. Werner upper bound.
void werner_upper_bound(Outcome& o) {
  o.require(upper_bound(4) == 1.0 / 5.0 && upper_bound(2) == 1.0 / 3.0, "upper_bound values");
  for (int n : {2, 4}) {
    const double bound = upper_bound(n);
    const double boundary = boundary_by_bisection(n, 0.5 * bound, std::min(1.0, 1.5 * bound));
    o.require(std::abs(boundary - bound) <= 1e-9, "PPT boundary off at N=" + std::to_string(n));
    for (int k = 0; k <= 1000; ++k) {
      const double eps = k / 1000.0;
      if (std::abs(eps - bound) <= 1e-6) continue;
      if ((ppt_of_werner(n, eps) < -1e-9) != (eps > bound)) {
        o.require(false, "grid mismatch at N=" + std::to_string(n) + " eps=" + std::to_string(eps));
        break;
      }
    }
    o.detail << "N=" << n << " boundary " << boundary << " (bound " << bound << ")  ";
  }
}

// 7. classify against the PPT oracle.
void oracle_consistency(Outcome& o) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int c2[3] = {0, 0, 0};
  for (int trial = 0; trial < 1000 && o.pass; ++trial) {
    const auto rho1 = trial % 4 == 0 ? make_bell() : random_density_matrix(2, rng);
    const double eps = u(rng);
    ClassifyOptions opt;
    opt.seed = static_cast<std::uint64_t>(trial);
    const auto rep = classify(rho1, eps, opt);
    const double ppt = ppt_min_eigenvalue(mix(eps, rho1), {2});
    ++c2[static_cast<int>(rep.verdict)];
    if (rep.verdict == Verdict::kSeparableCertified) o.require(ppt >= -1e-9, "2q separable verdict on an NPT state");
    if (rep.verdict == Verdict::kEntangledCertified) o.require(ppt < -1e-9, "2q entangled verdict on a PPT state");
  }
  o.detail << "2q sep/ent/undet " << c2[0] << "/" << c2[1] << "/" << c2[2];
  int c3[3] = {0, 0, 0};
  for (int trial = 0; trial < 500 && o.pass; ++trial) {
    const auto rho1 = random_density_matrix(3, rng);
    const double eps = u(rng) * u(rng);
    ClassifyOptions opt;
    opt.seed = static_cast<std::uint64_t>(trial);
    const auto rep = classify(rho1, eps, opt);
    ++c3[static_cast<int>(rep.verdict)];
    const auto state = mix(eps, rho1);
    if (rep.verdict == Verdict::kSeparableCertified) {
      o.require(rep.certificate && rep.certificate->check(state.matrix(), 1e-8).empty(), "3q certificate fails");
    }
    if (rep.verdict == Verdict::kEntangledCertified) {
      o.require(rep.witness && ppt_min_eigenvalue(state, rep.witness->second_group) < -1e-9, "3q witness not NPT");
    }
  }
  o.detail << "; 3q sep/ent/undet " << c3[0] << "/" << c3[1] << "/" << c3[2];
}

// 8. Reconstruction suite.
void reconstruction_suite(Outcome& o) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  double pauli_err = 0, disc_err = 0, tet_err = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 3;
    const auto rho = random_density_matrix(n, rng);
    const auto t = pauli_expand(rho);
    pauli_err = std::max(pauli_err, max_abs(pauli_reconstruct_matrix(t) - rho.matrix()));
    disc_err = std::max(disc_err, max_abs(discrete_decompose(t).reconstruct() - rho.matrix()));
    std::vector<Tetrahedron> tets;
    for (int k = 0; k < n; ++k) {
      const double a = ang(rng), b = ang(rng), c = ang(rng);
      tets.push_back(Tetrahedron::standard().rotated(euler_zyz(a, b, c)));
    }
    tet_err = std::max(tet_err, max_abs(tetrahedral_decompose(t, tets).reconstruct() - rho.matrix()));
  }
  o.require(pauli_err <= 1e-12, "Pauli round trip");
  o.require(disc_err <= 1e-10, "discrete reconstruction");
  o.require(tet_err <= 1e-9, "tetrahedral reconstruction");
  o.detail << "max errors pauli " << pauli_err << ", discrete " << disc_err << ", tetrahedral " << tet_err;
}

// 9. NMR audit.
void nmr(Outcome& o) {
  const double alpha = 2e-5;
  const int crossing = nmr_crossing(alpha);
  o.require(crossing >= 12 && crossing <= 15, "crossing outside [12, 15]");
  for (int n = 2; n <= 60; n += 2) {
    if (!(nmr_epsilon(n, alpha) < upper_bound(n))) o.require(false, "enters entangled region at N=" + std::to_string(n));
  }
  o.detail << "alpha " << alpha << ", crossing N=" << crossing << ", below the upper bound for even N <= 60";
}

// 10. delta reporting.
void delta_reporting(Outcome& o) {
  o.require(delta_ball_radius(2) == 1.0 / 20.0, "delta_ball_radius(2) != 1/20");
  std::mt19937_64 rng(10);
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const auto rho1 = random_density_matrix(n, rng);
    const double base = delta_distance(rho1);
    for (int k = 0; k <= 10; ++k) worst = std::max(worst, std::abs(delta_distance(mix(0.1 * k, rho1)) - 0.1 * k * base));
  }
  o.require(worst <= 1e-10, "delta not linear in eps");
  o.detail << "radius(2) = " << delta_ball_radius(2) << ", max linearity error " << worst;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"1 two-qubit worst-case threshold", worst_case_two_qubit},
      {"2 GHZ constants", ghz_constants},
      {"3 GHZ continuum minimum", ghz_continuum_minimum},
      {"4 universal lower bound", universal_lower_bound},
      {"5 tetrahedral GHZ improvement", tetrahedral_ghz},
      {"6 Werner upper bound", werner_upper_bound},
      {"7 oracle consistency", oracle_consistency},
      {"8 reconstruction suite", reconstruction_suite},
      {"9 NMR audit", nmr},
      {"10 delta reporting", delta_reporting},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      check(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  criterion %-34s (%.1fs)  %s%s%s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.str().c_str(),
                o.pass ? "" : "  FAILED: ", o.failures.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
