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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "sepscope.hpp"

using namespace sepscope;

TEST(bounds, lower_values) {
  EXPECT_EQ(lower_bound_continuum(3), 1.0 / 33.0);
  EXPECT_EQ(lower_bound_prior(3), 1.0 / 25.0);
  EXPECT_EQ(lower_bound_continuum(2), 1.0 / 9.0);
  // Asymptotically 2/4^n.
  EXPECT_NEAR(lower_bound_continuum(30) * std::pow(4.0, 30) / 2.0, 1.0, 1e-15);
}

TEST(bounds, upper_values) {
  EXPECT_EQ(upper_bound(2), 1.0 / 3.0);
  EXPECT_EQ(upper_bound(4), 1.0 / 5.0);
  EXPECT_EQ(upper_bound(8), 1.0 / 17.0);
  EXPECT_THROW(upper_bound(3), DomainError);
  EXPECT_THROW(upper_bound(0), DomainError);
}

TEST(bounds, ordering) {
  for (int n = 2; n <= 20; n += 2) EXPECT_LE(lower_bound_continuum(n), upper_bound(n));
  int crossover = 0;
  for (int n = 60; n >= 2; --n) {
    if (lower_bound_continuum(n) <= lower_bound_prior(n)) {
      crossover = n + 1;
      break;
    }
  }
  EXPECT_EQ(crossover, 4);
  for (int n = 4; n <= 60; ++n) EXPECT_GT(lower_bound_continuum(n), lower_bound_prior(n)) << n;
  EXPECT_GT(lower_bound_continuum(20) / lower_bound_prior(20), 1e40);
}

TEST(werner, examples) {
  const auto a = construct_werner_instance(4, 0.25);
  EXPECT_NEAR(a.eps_prime, 0.4, 1e-15);
  EXPECT_NEAR(a.eps_prime_recovered, 0.4, 1e-12);
  EXPECT_NEAR(a.norm_A, (4.0 / 16.0) * (1.0 + 0.25), 1e-15);

  const auto b = construct_werner_instance(4, 0.2);
  EXPECT_NEAR(b.eps_prime, 1.0 / 3.0, 1e-15);

  for (double eps : {0.0, 0.3, 0.9}) EXPECT_NEAR(construct_werner_instance(2, eps).eps_prime, eps, 1e-15);
}

TEST(werner, errors) {
  EXPECT_THROW(construct_werner_instance(3, 0.1), DomainError);
  EXPECT_THROW(construct_werner_instance(4, 1.2), RangeError);
  EXPECT_THROW(construct_werner_instance(14, 0.1), CapacityError);
}

TEST(werner, closed_form_matches_projection) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * (1 + trial % 4);
    const double eps = u(rng);
    const auto w = construct_werner_instance(n, eps);
    ASSERT_NEAR(w.eps_prime_recovered, werner_eps_prime(w.d, eps), 1e-12);
    ASSERT_NEAR(w.norm_A, werner_norm(w.d, eps), 1e-12);
  }
}

TEST(werner, projected_state_by_explicit_projector) {
  // Full-dimension projector algebra for n = 4, d = 4.
  const double eps = 0.25;
  const auto rho = mix(eps, make_max_entangled(4));
  Matrix p = Matrix::Zero(4, 4);
  p(0, 0) = p(1, 1) = 1.0;
  const Matrix pp = kron(p, p);
  const Matrix projected = pp * rho.matrix() * pp;
  const double a = projected.trace().real();
  EXPECT_NEAR(a, werner_norm(4, eps), 1e-15);
  const auto w = construct_werner_instance(4, eps);
  const std::array<Eigen::Index, 4> kept{0, 1, 4, 5};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) EXPECT_NEAR(std::abs(projected(kept[r], kept[c]) / a - w.projected_state(r, c)), 0.0, 1e-15);
}

TEST(ppt, examples) {
  EXPECT_NEAR(ppt_min_eigenvalue(make_bell(), {2}), -0.5, 1e-12);
  EXPECT_NEAR(ppt_min_eigenvalue(make_werner(1.0 / 3.0), {2}), 0.0, 1e-12);
  EXPECT_NEAR(ppt_min_eigenvalue(make_mixed(3), {2, 3}), 1.0 / 8.0, 1e-15);
  EXPECT_NEAR(ppt_min_eigenvalue(make_mixed(3), {1}), 1.0 / 8.0, 1e-15);
}

TEST(ppt, matches_hand_written_transpose) {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 20; ++rep) {
    const auto rho = random_density_matrix(2, rng);
    EXPECT_LE((partial_transpose(rho, {2}) - oracle::partial_transpose_2q(rho.matrix())).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(ppt, invalid_cuts) {
  EXPECT_THROW(ppt_min_eigenvalue(make_bell(), {}), DomainError);
  EXPECT_THROW(ppt_min_eigenvalue(make_bell(), {1, 2}), DomainError);
  EXPECT_THROW(ppt_min_eigenvalue(make_bell(), {3}), DomainError);
  EXPECT_THROW(ppt_min_eigenvalue(make_ghz(), {2, 2}), DomainError);
}

TEST(ppt, bipartitions) {
  EXPECT_EQ(all_bipartitions(2).size(), 1u);
  EXPECT_EQ(all_bipartitions(3).size(), 3u);
  EXPECT_EQ(all_bipartitions(4).size(), 7u);
  EXPECT_THROW(all_bipartitions(9), CapacityError);
}

TEST(werner, local_projection_keeps_separable_states_ppt) {
  // eps at or below the universal bound 1/(1+2^{2n-1}) is always separable.
  for (int n : {2, 4}) {
    const double eps = lower_bound_continuum(n);
    EXPECT_GE(ppt_min_eigenvalue(construct_werner_instance(n, eps).projected_state, {2}), -1e-9);
  }
  const auto state = mix(1.0 / 27.0, make_ghz());
  const auto rep = classify(make_ghz(), 1.0 / 27.0);
  ASSERT_EQ(rep.verdict, Verdict::kSeparableCertified);
  EXPECT_GE(ppt_min_eigenvalue(state, {3}), -1e-9);
}

TEST(nmr, epsilon_and_crossing) {
  const double alpha = nmr_alpha_for(1e-5, 2);
  EXPECT_NEAR(alpha, 2e-5, 1e-20);
  EXPECT_NEAR(nmr_epsilon(2, alpha), 1e-5, 1e-20);
  const int crossing = nmr_crossing(alpha);
  EXPECT_EQ(crossing, 13);
  EXPECT_GE(crossing, 12);
  EXPECT_LE(crossing, 15);
  EXPECT_LT(nmr_epsilon(2, alpha), 1.0 / 27.0);
  EXPECT_LT(nmr_epsilon(3, alpha), 1.0 / 15.0);
  EXPECT_GT(nmr_crossing(1e-9), crossing);
  EXPECT_THROW(nmr_epsilon(3, 0.0), RangeError);
}

TEST(nmr, never_enters_entangled_region) {
  for (double alpha : {2e-5, 1e-3, 0.1, 0.5}) {
    for (int n = 2; n <= 60; n += 2) ASSERT_LT(nmr_epsilon(n, alpha), upper_bound(n)) << alpha << " " << n;
    EXPECT_FALSE(nmr_audit(alpha, 60).first_entry.has_value());
  }
  // At alpha = 1 the n = 2 pseudopure epsilon 1/2 is already above 1/3.
  EXPECT_EQ(nmr_audit(1.0, 60).first_entry, 2);
}

TEST(nmr, audit_regions) {
  const auto audit = nmr_audit(2e-5, 60);
  ASSERT_EQ(audit.rows.size(), 60u);
  EXPECT_EQ(audit.rows[11].region, NmrRegion::kSeparableGuaranteed);
  EXPECT_EQ(audit.rows[12].region, NmrRegion::kUndetermined);
  EXPECT_FALSE(audit.rows[12].upper.has_value());
  EXPECT_TRUE(audit.rows[13].upper.has_value());
}

TEST(classify, ghz_at_discrete_threshold) {
  const auto rep = classify(make_ghz(), 1.0 / 27.0);
  EXPECT_EQ(rep.verdict, Verdict::kSeparableCertified);
  EXPECT_EQ(rep.certificate_method, "discrete");
  ASSERT_TRUE(rep.certificate);
  EXPECT_EQ(rep.certificate->terms.size(), 216u);
  EXPECT_EQ(rep.certificate->check(rep.state, 1e-8), "");
  EXPECT_NEAR(*rep.thresholds.discrete, 1.0 / 27.0, 1e-12);
  EXPECT_NEAR(*rep.thresholds.continuous_state, 1.0 / 27.0, 1e-9);
  EXPECT_EQ(rep.thresholds.continuous_floor, 1.0 / 33.0);
  EXPECT_FALSE(rep.bounds.upper.has_value());
  EXPECT_EQ(rep.bounds.lower_continuum, 1.0 / 33.0);
}

TEST(classify, bell_half_is_entangled) {
  const auto rep = classify(make_bell(), 0.5);
  EXPECT_EQ(rep.verdict, Verdict::kEntangledCertified);
  ASSERT_TRUE(rep.witness);
  EXPECT_NEAR(rep.witness->min_eigenvalue, -1.0 / 8.0, 1e-12);
  EXPECT_FALSE(rep.certificate);
  EXPECT_LE(rep.bounds.lower_continuum, *rep.bounds.upper);
}

TEST(classify, maximally_mixed_is_separable) {
  for (double eps : {0.0, 0.5, 1.0}) {
    EXPECT_EQ(classify(make_mixed(2), eps).verdict, Verdict::kSeparableCertified);
  }
}

TEST(classify, single_qubit_states_are_certified) {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 10; ++rep) {
    const auto r = classify(random_density_matrix(1, rng), std::nullopt);
    EXPECT_EQ(r.verdict, Verdict::kSeparableCertified);
  }
}

TEST(classify, no_false_certificates_two_qubits) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  ClassifyOptions opt;
  opt.tetra.starts = 8;
  for (int trial = 0; trial < 200; ++trial) {
    const auto rho1 = trial % 2 ? make_bell() : random_density_matrix(2, rng);
    const double eps = u(rng);
    const auto rep = classify(rho1, eps, opt);
    const double ppt = ppt_min_eigenvalue(mix(eps, rho1), {2});
    if (rep.verdict == Verdict::kSeparableCertified) ASSERT_GE(ppt, -1e-9);
    if (rep.verdict == Verdict::kEntangledCertified) ASSERT_LT(ppt, -1e-9);
  }
}
