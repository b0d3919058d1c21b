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

#ifndef RUBICON_INEQUALITIES_HPP_
#define RUBICON_INEQUALITIES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rubicon/poly.hpp"

namespace rubicon {

// Exact rational bounds lo <= x <= hi.
struct RationalInterval {
  Rational lo;
  Rational hi;

  static RationalInterval exact(const Rational& v) { return {v, v}; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains(const RationalInterval& o) const {
    return lo <= o.lo && o.hi <= hi;
  }
  RationalInterval operator*(const Rational& k) const;  // k >= 0
  RationalInterval reciprocal() const;                  // lo > 0
};

// Partial Taylor sum of exp(2) through 2^terms/terms! plus a geometric bound
// on the tail. lo < e^2 < hi strictly. Throws std::domain_error for
// terms < 2.
RationalInterval e_squared_bounds(int terms);

// Default precision for e^2 comparisons; width is far below 1e-40.
inline constexpr int kDefaultESquaredTerms = 48;
// Precision escalation stops here and reports Indeterminate.
inline constexpr int kMaxESquaredTerms = 4096;

enum class IneqStatus { Holds, Fails, Indeterminate };

const char* to_string(IneqStatus s);

// A single strict inequality lhs < rhs, decided exactly. Sides that involve
// e^2 carry a certified interval; purely combinatorial sides are degenerate
// intervals.
struct IneqVerdict {
  IneqStatus status = IneqStatus::Indeterminate;
  std::string check;
  // Witness coordinates. For the counterexample scan n holds q.
  int n = 0;
  int p = 0;
  RationalInterval lhs;
  RationalInterval rhs;
  // Number of Taylor terms used for e^2, 0 when e^2 is not involved.
  int e_squared_terms = 0;
  std::string note;
};

// 1 + C(n,1)(p+1) + ... + C(n,p-1)(p+1)^{p-1}. Needs n >= 1, 1 <= p <= n+1.
BigInt biernacki_sum(int n, int p);

// S(n,p) < p^n for 1 < p < n-2.
IneqVerdict check_biernacki(int n, int p);

// S(n,p) < C(n,p-1) (p+2)^{p-1} for 1 < p <= n+1.
IneqVerdict check_biernacki_upper(int n, int p);

// n C(n,p-1) (p+2)^{p-1} < e^2 (p-1) p^n for 1 < p <= n, n >= 3.
IneqVerdict check_lemma2_part1(int n, int p);

// n S(n,p) < e^2 (p-1) p^n for 1 < p <= n+1, n >= 1.
IneqVerdict check_lemma2_part2(int n, int p);

// Monotonicity step n (n-(p-1)) (p-1) > n+1 together with the exact ratio
// identity f(n,p)/f(n+1,p) = n p (n-p+2)/(n+1)^2 for
// f(n,p) = n C(n,p-1)(p+2)^{p-1} / (e^2 (p-1) p^n). Needs 1 < p <= n.
IneqVerdict lemma2_ratio_check(int n, int p);

// (1 + 2/(n+1))^{n+1} < e^2, the closing step for the p = n+1 family.
IneqVerdict check_p_equals_n_plus_1_limit(int n);

struct CounterexampleReport {
  int q_max = 0;
  // Displayed form C(q+2,q-1) (q+2)^{q-3} < q^{q+2}.
  std::vector<IneqVerdict> variant_a;
  // Rewritten form C(n,3)/n^3 < (1-2/n)^n with n = q+2, i.e.
  // C(q+2,3) (q+2)^{q-1} < q^{q+2}.
  std::vector<IneqVerdict> variant_b;
  std::optional<int> first_failure_a;
  std::optional<int> first_failure_b;
  // 1/e^2 < 1/6, decided against the certified interval.
  IneqVerdict limit;
  RationalInterval e_squared;
};

// Throws std::domain_error for q_max < 2.
CounterexampleReport scan_counterexample(int q_max);

struct ScanReport {
  std::string check;
  int n_max = 0;
  std::vector<IneqVerdict> verdicts;
  int holds = 0;
  int fails = 0;
  int indeterminate = 0;
};

// Exhaustive scans over the admissible (n,p) range of each check, n <= n_max.
ScanReport scan_biernacki(int n_max);
ScanReport scan_biernacki_upper(int n_max);
ScanReport scan_lemma2_part1(int n_max);
ScanReport scan_lemma2_part2(int n_max);
ScanReport scan_lemma2_ratio(int n_max);

// Formats an exact rational as "num" or "num/den".
std::string to_exact_string(const Rational& r);

}  // namespace rubicon

#endif  // RUBICON_INEQUALITIES_HPP_
