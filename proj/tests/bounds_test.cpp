// Copyright 2026 The Rubicon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rubicon/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "rubicon/harness.hpp"
#include "rubicon/roots.hpp"

namespace rubicon {
namespace {

bool hypothesis(const BoundCertificate& c, const std::string& prefix) {
  for (const auto& h : c.hypotheses) {
    if (h.name.rfind(prefix, 0) == 0) return h.satisfied;
  }
  ADD_FAILURE() << "no hypothesis " << prefix;
  return false;
}

TEST(Theorem1Bound, Applicable) {
  const auto c = theorem1_bound(1.0, {10, 2, 1.0});
  EXPECT_EQ(c.kind, BoundKind::Theorem1);
  EXPECT_DOUBLE_EQ(c.radius, 1.0 / 3.0);
  EXPECT_TRUE(c.applicable);
}

TEST(Theorem1Bound, RejectsLargeP) {
  const auto c = theorem1_bound(1.0, {10, 9, 1.0});
  EXPECT_FALSE(c.applicable);
  EXPECT_FALSE(hypothesis(c, "p < n-2"));
  // p == n-2 is not certified either.
  EXPECT_FALSE(theorem1_bound(1.0, {10, 8, 1.0}).applicable);
  EXPECT_TRUE(theorem1_bound(1.0, {10, 7, 1.0}).applicable);
}

TEST(Theorem1Bound, RejectsLargeEps) {
  const auto c = theorem1_bound(1.0, {10, 2, 1.0000001});
  EXPECT_FALSE(c.applicable);
  EXPECT_FALSE(hypothesis(c, "eps_max <= 1"));
}

TEST(Theorem1Bound, PEqualsOneRoutesThroughSingleCoefficientBound) {
  const auto c = theorem1_bound(2.0, {5, 1, 1.0});
  EXPECT_TRUE(c.applicable);
  EXPECT_DOUBLE_EQ(c.radius, 1.0);
  // n = 3 has no p with 1 < p < n-2, but p = 1 is still admitted.
  EXPECT_TRUE(theorem1_bound(1.0, {3, 1, 1.0}).applicable);
  EXPECT_TRUE(hypothesis(c, "p == 1 via"));
}

TEST(Theorem1Bound, RadiusDecreasesInP) {
  double prev = INFINITY;
  for (int p = 1; p <= 21; ++p) {
    const double r = theorem1_bound(1.5, {40, p, 1.0}).radius;
    EXPECT_LT(r, prev);
    prev = r;
  }
}

TEST(Lemma1Bound, Values) {
  EXPECT_DOUBLE_EQ(lemma1_bound(1.7, 5, 0.0).radius, 1.7);
  for (int n = 1; n < 20; ++n) EXPECT_DOUBLE_EQ(lemma1_bound(3.0, n, 1.0).radius, 1.5);
  EXPECT_DOUBLE_EQ(lemma1_bound(1.0, 4, 0.0625).radius, 2.0 / 3.0);
  EXPECT_TRUE(lemma1_bound(1.0, 4, 1e6).applicable);
}

TEST(Lemma1Bound, NonincreasingAndContinuousInEps) {
  double prev = lemma1_bound(1.0, 6, 0.0).radius;
  for (int i = 1; i <= 1000; ++i) {
    const double r = lemma1_bound(1.0, 6, i * 1e-3).radius;
    EXPECT_LE(r, prev);
    prev = r;
  }
  EXPECT_DOUBLE_EQ(prev, 0.5);
  EXPECT_NEAR(lemma1_bound(1.0, 6, 1e-18).radius, 1.0, 1e-2);
}

TEST(Lemma1Bound, InvalidInputs) {
  EXPECT_THROW(lemma1_bound(0.0, 3, 1.0), std::invalid_argument);
  EXPECT_THROW(lemma1_bound(1.0, 0, 1.0), std::invalid_argument);
  EXPECT_THROW(lemma1_bound(1.0, 3, -1.0), std::invalid_argument);
}

TEST(Theorem2Bound, ThresholdMatchesExpMinusTwo) {
  const RationalInterval t = theorem2_threshold(10, 2);
  EXPECT_NEAR(t.lo.convert_to<double>(), 10.0 * std::exp(-2.0), 1e-15);
  EXPECT_LT(t.lo, t.hi);
  EXPECT_NEAR(theorem2_eps_max(10, 2), 1.3533528323661270, 1e-15);
  EXPECT_TRUE(theorem2_eps_admissible(theorem2_eps_max(10, 2), 10, 2));
  EXPECT_FALSE(theorem2_eps_admissible(1.3534, 10, 2));

  const auto c = theorem2_bound(1.0, {10, 2, 1.3533});
  EXPECT_TRUE(c.applicable);
  EXPECT_DOUBLE_EQ(c.radius, 1.0 / 3.0);
}

TEST(Theorem2Bound, PEqualsOneInapplicable) {
  const auto c = theorem2_bound(1.0, {10, 1, 0.0});
  EXPECT_FALSE(c.applicable);
  EXPECT_FALSE(hypothesis(c, "1 < p"));
}

TEST(Theorem2Bound, FullCoefficientCase) {
  // n = 2, p = 3: threshold 2/(2 e^2) ~ 0.1353.
  const auto c = theorem2_bound(1.0, {2, 3, 0.1});
  EXPECT_TRUE(c.applicable);
  EXPECT_DOUBLE_EQ(c.radius, 0.25);
  EXPECT_FALSE(theorem2_bound(1.0, {2, 3, 0.136}).applicable);
}

TEST(Theorem2Bound, ThresholdExceedsOneIffNAboveESquaredTimesPMinus1) {
  // e^2 ~ 7.389: n > e^2 (p-1) decides whether eps = 1 is admissible.
  for (int n = 1; n <= 60; ++n) {
    for (int p = 2; p <= n + 1; ++p) {
      const RationalInterval t = theorem2_threshold(n, p);
      const bool above = Rational(n) > Rational(7389056, 1000000) * (p - 1);
      EXPECT_EQ(t.lo > 1, above) << n << "," << p;
      EXPECT_EQ(theorem2_eps_admissible(1.0, n, p), above) << n << "," << p;
    }
  }
}

TEST(SzegoProductRegion, Values) {
  EXPECT_DOUBLE_EQ(szego_product_region(1, 1).radius, 1.0);
  EXPECT_DOUBLE_EQ(szego_product_region(2, 0.5).radius, 1.0);
  EXPECT_DOUBLE_EQ(szego_product_region(3, 4).radius, 12.0);
  EXPECT_TRUE(szego_product_region(3, 4).applicable);
  EXPECT_THROW(szego_product_region(0, 4), std::invalid_argument);
}

TEST(CauchyExclusionRadius, Values) {
  EXPECT_THROW(cauchy_exclusion_radius(BinomialPolynomial({0, 1})), std::domain_error);
  EXPECT_DOUBLE_EQ(cauchy_exclusion_radius(BinomialPolynomial::one_plus_z(2)).radius,
                   1.0 / 3.0);
}

TEST(CauchyExclusionRadius, NeverExceedsTrueMinModulus) {
  for (int t = 0; t < 500; ++t) {
    Rng rng(split_seed(555, t));
    const auto p = random_exterior_polynomial(8, rng.uniform(0.1, 3.0), 0.0,
                                              rng.chance(0.5), rng);
    const double r = cauchy_exclusion_radius(p).radius;
    ASSERT_GE(min_modulus(all_roots(p)), r * (1 - 1e-12)) << t;
  }
}

TEST(BestBound, PEqualsOneTiePrefersLemma1) {
  const auto c = best_bound(1.0, {6, 1, 1.0});
  EXPECT_EQ(c.kind, BoundKind::Lemma1);
  EXPECT_DOUBLE_EQ(c.radius, 0.5);
  const auto d = best_bound(1.0, {6, 1, 0.5});
  EXPECT_EQ(d.kind, BoundKind::Lemma1);
  EXPECT_GT(d.radius, 0.5);
  // Beyond eps = 1 only the single-coefficient bound survives.
  const auto e = best_bound(1.0, {6, 1, 64.0});
  EXPECT_EQ(e.kind, BoundKind::Lemma1);
  EXPECT_NEAR(e.radius, 1.0 / 3.0, 1e-15);
}

TEST(BestBound, TieBetweenTheoremsReportsTheorem1) {
  const auto c = best_bound(1.0, {10, 2, 1.0});
  EXPECT_EQ(c.kind, BoundKind::Theorem1);
  EXPECT_TRUE(theorem2_bound(1.0, {10, 2, 1.0}).applicable);
}

TEST(BestBound, FullCoefficientOnlyTheorem2) {
  const auto c = best_bound(1.0, {8, 9, 0.1});
  EXPECT_EQ(c.kind, BoundKind::Theorem2);
  EXPECT_TRUE(c.applicable);
  EXPECT_DOUBLE_EQ(c.radius, 0.1);
}

TEST(BestBound, NothingApplicable) {
  const auto c = best_bound(1.0, {8, 9, 5.0});
  EXPECT_FALSE(c.applicable);
}

TEST(PerturbationSpec, Validation) {
  EXPECT_THROW((PerturbationSpec{0, 1, 0.0}).validate(), std::invalid_argument);
  EXPECT_THROW((PerturbationSpec{3, 5, 0.0}).validate(), std::invalid_argument);
  EXPECT_THROW((PerturbationSpec{3, 0, 0.0}).validate(), std::invalid_argument);
  EXPECT_THROW((PerturbationSpec{3, 1, -0.5}).validate(), std::invalid_argument);
  EXPECT_NO_THROW((PerturbationSpec{3, 4, 0.0}).validate());
}

TEST(BoundCertificate, ApplicableIffAllHypothesesHold) {
  for (int n = 1; n <= 12; ++n) {
    for (int p = 1; p <= n + 1; ++p) {
      for (double eps : {0.0, 0.1, 1.0, 2.0}) {
        for (const auto& c : candidate_bounds(1.0, {n, p, eps})) {
          bool all = true;
          for (const auto& h : c.hypotheses) all = all && h.satisfied;
          EXPECT_EQ(c.applicable, all);
          if (c.applicable) EXPECT_GT(c.radius, 0.0);
        }
      }
    }
  }
}

}  // namespace
}  // namespace rubicon
