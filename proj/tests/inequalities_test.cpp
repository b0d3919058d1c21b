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

#include "rubicon/inequalities.hpp"

#include <random>
#include <stdexcept>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <gtest/gtest.h>

namespace rubicon {
namespace {

using boost::multiprecision::cpp_dec_float_50;

// exp(2) = 7.389056098930650227230427460575007813180315570551847...
Rational e_squared_reference(int digits_after_point) {
  const std::string s = "7389056098930650227230427460575007813180315570551847";
  BigInt num(s.substr(0, static_cast<std::size_t>(digits_after_point) + 1));
  BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits_after_point));
  return Rational(num, den);
}

TEST(BiernackiSum, Values) {
  EXPECT_EQ(biernacki_sum(5, 2), 16);
  EXPECT_EQ(biernacki_sum(2, 2), 7);
  EXPECT_EQ(biernacki_sum(6, 3), 265);
  for (int n = 1; n < 30; ++n) EXPECT_EQ(biernacki_sum(n, 1), 1);
  EXPECT_THROW(biernacki_sum(0, 1), std::domain_error);
  EXPECT_THROW(biernacki_sum(4, 6), std::domain_error);
  EXPECT_THROW(biernacki_sum(4, 0), std::domain_error);
}

TEST(BiernackiSum, FullRangeIsBinomialTheorem) {
  // S(n, n+1) = sum_k C(n,k) (n+2)^k = (n+3)^n.
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(biernacki_sum(n, n + 1),
              boost::multiprecision::pow(BigInt(n + 3), static_cast<unsigned>(n)));
  }
}

TEST(CheckBiernacki, Values) {
  auto v = check_biernacki(5, 2);
  EXPECT_EQ(v.status, IneqStatus::Holds);
  EXPECT_EQ(v.lhs.lo, 16);
  EXPECT_EQ(v.rhs.lo, 32);
  v = check_biernacki(6, 3);
  EXPECT_EQ(v.status, IneqStatus::Holds);
  EXPECT_EQ(v.lhs.lo, 265);
  EXPECT_EQ(v.rhs.lo, 729);
  EXPECT_THROW(check_biernacki(5, 3), std::domain_error);
  EXPECT_THROW(check_biernacki(10, 1), std::domain_error);
}

TEST(CheckBiernacki, ExhaustiveScanHolds) {
  const ScanReport r = scan_biernacki(60);
  EXPECT_GT(r.verdicts.size(), 1500u);
  EXPECT_EQ(r.fails, 0);
  EXPECT_EQ(r.indeterminate, 0);
  EXPECT_EQ(r.holds, static_cast<int>(r.verdicts.size()));
}

TEST(CheckBiernackiUpper, Values) {
  auto v = check_biernacki_upper(5, 2);
  EXPECT_EQ(v.status, IneqStatus::Holds);
  EXPECT_EQ(v.rhs.lo, 20);
  v = check_biernacki_upper(2, 2);
  EXPECT_EQ(v.status, IneqStatus::Holds);
  EXPECT_EQ(v.lhs.lo, 7);
  EXPECT_EQ(v.rhs.lo, 8);
  EXPECT_THROW(check_biernacki_upper(3, 1), std::domain_error);
  EXPECT_THROW(check_biernacki_upper(3, 5), std::domain_error);
}

TEST(CheckBiernackiUpper, ScanFailsOnlyAtFullRangeEquality) {
  // At p = n+1 both sides equal (n+3)^n, so the strict form fails there and
  // nowhere else.
  const ScanReport r = scan_biernacki_upper(60);
  EXPECT_EQ(r.indeterminate, 0);
  EXPECT_EQ(r.fails, 60);
  for (const auto& v : r.verdicts) {
    if (v.status == IneqStatus::Fails) {
      EXPECT_EQ(v.p, v.n + 1);
      EXPECT_EQ(v.lhs.lo, v.rhs.lo);
    }
  }
}

TEST(ESquaredBounds, PartialSums) {
  const auto two = e_squared_bounds(2);
  EXPECT_EQ(two.lo, 5);
  EXPECT_GT(two.hi, 5);
  EXPECT_THROW(e_squared_bounds(1), std::domain_error);
}

TEST(ESquaredBounds, ContainsReferenceValue) {
  const cpp_dec_float_50 e2 = boost::multiprecision::exp(cpp_dec_float_50(2));
  for (int terms = 2; terms <= 80; ++terms) {
    const RationalInterval iv = e_squared_bounds(terms);
    EXPECT_LT(iv.lo, iv.hi);
    // The reference digits are truncated, so [ref, ref + 1e-40] holds e^2.
    const Rational ref = e_squared_reference(40);
    EXPECT_LE(iv.lo, ref + Rational(1, BigInt("10000000000000000000000000000000000000000")));
    EXPECT_GE(iv.hi, ref);
    EXPECT_LT(cpp_dec_float_50(iv.lo.convert_to<cpp_dec_float_50>()), e2 + 1e-45);
    EXPECT_GT(cpp_dec_float_50(iv.hi.convert_to<cpp_dec_float_50>()), e2 - 1e-45);
  }
  EXPECT_TRUE(e_squared_bounds(20).contains(Rational(7389056098930650LL, 1000000000000000LL)));
}

TEST(ESquaredBounds, WidthAndNesting) {
  EXPECT_LT(e_squared_bounds(30).width(), Rational(1, 1000000000000000LL));
  for (int t = 2; t < 60; ++t) {
    EXPECT_TRUE(e_squared_bounds(t).contains(e_squared_bounds(t + 1))) << t;
  }
}

TEST(Lemma2Part1, Values) {
  // (3,2): 3 * C(3,1) * 4 = 36 against e^2 * 1 * 8 ~ 59.1.
  auto v = check_lemma2_part1(3, 2);
  EXPECT_EQ(v.status, IneqStatus::Holds);
  EXPECT_EQ(v.lhs.lo, 36);
  EXPECT_GT(v.rhs.lo, Rational(59));
  EXPECT_LT(v.rhs.hi, Rational(60));
  // (10,2): 10 * 10 * 4 = 400 against e^2 * 1024 ~ 7566.4.
  v = check_lemma2_part1(10, 2);
  EXPECT_EQ(v.status, IneqStatus::Holds);
  EXPECT_EQ(v.lhs.lo, 400);
  EXPECT_THROW(check_lemma2_part1(2, 2), std::domain_error);
  EXPECT_THROW(check_lemma2_part1(5, 6), std::domain_error);
}

TEST(Lemma2Part1, ScanIsDecided) {
  const ScanReport r = scan_lemma2_part1(60);
  EXPECT_EQ(r.indeterminate, 0);
  EXPECT_EQ(r.holds + r.fails, static_cast<int>(r.verdicts.size()));
  EXPECT_EQ(r.fails, 0);
}

TEST(Lemma2Part2, Values) {
  const auto v = check_lemma2_part2(2, 2);
  EXPECT_EQ(v.status, IneqStatus::Holds);
  EXPECT_EQ(v.lhs.lo, 14);
  EXPECT_THROW(check_lemma2_part2(2, 4), std::domain_error);
  EXPECT_THROW(check_lemma2_part2(2, 1), std::domain_error);
}

TEST(Lemma2Part2, ScanHolds) {
  const ScanReport r = scan_lemma2_part2(60);
  EXPECT_EQ(r.fails, 0);
  EXPECT_EQ(r.indeterminate, 0);
}

TEST(Lemma2Part2, FullRangeFamilyMatchesLimitForm) {
  for (int n = 1; n <= 60; ++n) {
    const auto full = check_lemma2_part2(n, n + 1);
    const auto limit = check_p_equals_n_plus_1_limit(n);
    EXPECT_EQ(full.status, IneqStatus::Holds) << n;
    EXPECT_EQ(limit.status, IneqStatus::Holds) << n;
    // n (n+3)^n < e^2 n (n+1)^n  <=>  (1+2/(n+1))^n < e^2.
    const BigInt np1 = boost::multiprecision::pow(BigInt(n + 1), static_cast<unsigned>(n));
    const BigInt np3 = boost::multiprecision::pow(BigInt(n + 3), static_cast<unsigned>(n));
    EXPECT_EQ(full.lhs.lo, Rational(n * np3));
    EXPECT_EQ(full.rhs.lo, e_squared_bounds(full.e_squared_terms).lo * n * np1);
    const Rational base = Rational(n + 3, n + 1);
    Rational pw = 1;
    for (int i = 0; i < n + 1; ++i) pw *= base;
    EXPECT_EQ(limit.lhs.lo, pw);
  }
}

TEST(RatioCheck, Values) {
  auto v = lemma2_ratio_check(3, 2);
  EXPECT_EQ(v.status, IneqStatus::Holds);
  EXPECT_EQ(v.lhs.lo, 4);
  EXPECT_EQ(v.rhs.lo, 6);
  v = lemma2_ratio_check(2, 2);
  EXPECT_EQ(v.status, IneqStatus::Fails);
  EXPECT_EQ(v.lhs.lo, 3);
  EXPECT_EQ(v.rhs.lo, 2);
  EXPECT_THROW(lemma2_ratio_check(3, 4), std::domain_error);
}

TEST(RatioCheck, IdentityOnRandomPairs) {
  std::mt19937_64 gen(4242);
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 80)(gen);
    const int p = std::uniform_int_distribution<int>(2, n)(gen);
    const auto v = lemma2_ratio_check(n, p);
    EXPECT_EQ(v.note.rfind("ratio identity exact", 0), 0u) << n << "," << p << " " << v.note;
  }
  const ScanReport r = scan_lemma2_ratio(60);
  EXPECT_EQ(r.fails, 0);
}

TEST(Counterexample, VariantBFailsFromNEqualsFour) {
  const auto r = scan_counterexample(50);
  ASSERT_EQ(r.variant_b.size(), 49u);
  // n = 4: C(4,3)/4^3 = 1/16 = (1/2)^4.
  EXPECT_EQ(r.variant_b[0].n, 2);
  EXPECT_EQ(r.variant_b[0].lhs.lo, Rational(1, 16));
  EXPECT_EQ(r.variant_b[0].rhs.lo, Rational(1, 16));
  EXPECT_EQ(r.variant_b[0].status, IneqStatus::Fails);
  // n = 5: 10/125 against 243/3125.
  EXPECT_EQ(r.variant_b[1].lhs.lo, Rational(10, 125));
  EXPECT_EQ(r.variant_b[1].rhs.lo, Rational(243, 3125));
  EXPECT_EQ(r.variant_b[1].status, IneqStatus::Fails);
  ASSERT_TRUE(r.first_failure_b.has_value());
  EXPECT_EQ(*r.first_failure_b, 2);
}

TEST(Counterexample, VariantBMatchesIntegerForm) {
  const auto r = scan_counterexample(40);
  for (const auto& v : r.variant_b) {
    const int q = v.n;
    const BigInt lhs = binomial(q + 2, 3) *
                       boost::multiprecision::pow(BigInt(q + 2), static_cast<unsigned>(q - 1));
    const BigInt rhs = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(q + 2));
    EXPECT_EQ(v.status == IneqStatus::Holds, lhs < rhs) << q;
  }
}

TEST(Counterexample, VariantAUsesExactNegativePower) {
  const auto r = scan_counterexample(50);
  // q = 2: C(4,1) * 4^{-1} = 1 < 16.
  EXPECT_EQ(r.variant_a[0].lhs.lo, 1);
  EXPECT_EQ(r.variant_a[0].rhs.lo, 16);
  EXPECT_FALSE(r.first_failure_a.has_value());
}

TEST(Counterexample, LimitContradictionCertified) {
  const auto r = scan_counterexample(2);
  EXPECT_EQ(r.limit.status, IneqStatus::Holds);
  EXPECT_LT(r.e_squared.width(), Rational(1, 1000000000000000LL));
  EXPECT_GT(r.e_squared.lo, 6);
  EXPECT_THROW(scan_counterexample(1), std::domain_error);
}

TEST(Inequalities, Deterministic) {
  const auto a = scan_lemma2_part1(20);
  const auto b = scan_lemma2_part1(20);
  ASSERT_EQ(a.verdicts.size(), b.verdicts.size());
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    EXPECT_EQ(a.verdicts[i].status, b.verdicts[i].status);
    EXPECT_EQ(a.verdicts[i].rhs.lo, b.verdicts[i].rhs.lo);
  }
}

TEST(ExactString, Formats) {
  EXPECT_EQ(to_exact_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_exact_string(Rational(-8, 4)), "-2");
}

}  // namespace
}  // namespace rubicon
