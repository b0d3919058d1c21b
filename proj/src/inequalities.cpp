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

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace rubicon {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;
using boost::multiprecision::pow;

BigInt ipow(int base, int exp) { return pow(BigInt(base), static_cast<unsigned>(exp)); }

// Integer power with a possibly negative exponent.
Rational rpow(int base, int exp) {
  if (exp >= 0) return Rational(ipow(base, exp));
  return Rational(BigInt(1), ipow(base, -exp));
}

void require(bool ok, const char* check, int n, int p, const char* range) {
  if (!ok) {
    throw std::domain_error(std::string(check) + ": (n=" + std::to_string(n) +
                            ", p=" + std::to_string(p) + ") outside " + range);
  }
}

const RationalInterval& cached_e_squared(int terms) {
  static std::mutex mu;
  static std::map<int, RationalInterval> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(terms);
  if (it == cache.end()) {
    it = cache.emplace(terms, e_squared_bounds(terms)).first;
  }
  return it->second;
}

IneqVerdict exact_less(std::string check, int n, int p, const Rational& lhs,
                       const Rational& rhs) {
  IneqVerdict v;
  v.check = std::move(check);
  v.n = n;
  v.p = p;
  v.lhs = RationalInterval::exact(lhs);
  v.rhs = RationalInterval::exact(rhs);
  v.status = lhs < rhs ? IneqStatus::Holds : IneqStatus::Fails;
  return v;
}

// Decides lhs < e^2 * factor (factor > 0), doubling the Taylor depth until
// the certified interval separates the two sides.
IneqVerdict less_than_e_squared_times(std::string check, int n, int p,
                                      const Rational& lhs,
                                      const Rational& factor) {
  IneqVerdict v;
  v.check = std::move(check);
  v.n = n;
  v.p = p;
  v.lhs = RationalInterval::exact(lhs);
  for (int terms = kDefaultESquaredTerms; terms <= kMaxESquaredTerms;
       terms *= 2) {
    const RationalInterval rhs = cached_e_squared(terms) * factor;
    v.rhs = rhs;
    v.e_squared_terms = terms;
    if (lhs < rhs.lo) {
      v.status = IneqStatus::Holds;
      return v;
    }
    if (lhs >= rhs.hi) {
      v.status = IneqStatus::Fails;
      return v;
    }
  }
  v.status = IneqStatus::Indeterminate;
  v.note = "e^2 interval did not separate the sides";
  return v;
}

}  // namespace

RationalInterval RationalInterval::operator*(const Rational& k) const {
  if (k < 0) throw std::domain_error("RationalInterval: negative scale");
  return {lo * k, hi * k};
}

RationalInterval RationalInterval::reciprocal() const {
  if (lo <= 0) throw std::domain_error("RationalInterval: reciprocal of non-positive");
  return {Rational(1) / hi, Rational(1) / lo};
}

const char* to_string(IneqStatus s) {
  switch (s) {
    case IneqStatus::Holds: return "holds";
    case IneqStatus::Fails: return "fails";
    case IneqStatus::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

std::string to_exact_string(const Rational& r) {
  const BigInt den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

RationalInterval e_squared_bounds(int terms) {
  if (terms < 2) {
    throw std::domain_error("e_squared_bounds: need at least 2 terms");
  }
  Rational sum = 0;
  Rational term = 1;  // 2^j / j!
  for (int j = 0; j <= terms; ++j) {
    if (j > 0) term = term * 2 / j;
    sum += term;
  }
  // Tail sum_{j>t} 2^j/j! <= 2^{t+1}/(t+1)! * 1/(1 - 2/(t+2)).
  const Rational next = term * 2 / (terms + 1);
  const Rational tail = next / (Rational(1) - Rational(2, terms + 2));
  return {sum, sum + tail};
}

BigInt biernacki_sum(int n, int p) {
  require(n >= 1 && p >= 1 && p <= n + 1, "biernacki_sum", n, p,
          "n >= 1, 1 <= p <= n+1");
  BigInt s = 0;
  BigInt power = 1;
  for (int k = 0; k <= p - 1; ++k) {
    s += binomial(n, k) * power;
    power *= p + 1;
  }
  return s;
}

IneqVerdict check_biernacki(int n, int p) {
  require(1 < p && p < n - 2, "check_biernacki", n, p, "1 < p < n-2");
  return exact_less("biernacki", n, p, Rational(biernacki_sum(n, p)),
                    Rational(ipow(p, n)));
}

IneqVerdict check_biernacki_upper(int n, int p) {
  require(n >= 1 && 1 < p && p <= n + 1, "check_biernacki_upper", n, p,
          "1 < p <= n+1");
  return exact_less("biernacki-upper", n, p, Rational(biernacki_sum(n, p)),
                    Rational(binomial(n, p - 1) * ipow(p + 2, p - 1)));
}

IneqVerdict check_lemma2_part1(int n, int p) {
  require(n >= 3 && 1 < p && p <= n, "check_lemma2_part1", n, p,
          "1 < p <= n, n >= 3");
  const BigInt lhs = n * binomial(n, p - 1) * ipow(p + 2, p - 1);
  const BigInt factor = (p - 1) * ipow(p, n);
  return less_than_e_squared_times("lemma2-1", n, p, Rational(lhs),
                                   Rational(factor));
}

IneqVerdict check_lemma2_part2(int n, int p) {
  require(n >= 1 && 1 < p && p <= n + 1, "check_lemma2_part2", n, p,
          "1 < p <= n+1, n >= 1");
  const BigInt lhs = n * biernacki_sum(n, p);
  const BigInt factor = (p - 1) * ipow(p, n);
  return less_than_e_squared_times("lemma2-2", n, p, Rational(lhs),
                                   Rational(factor));
}

IneqVerdict lemma2_ratio_check(int n, int p) {
  require(1 < p && p <= n, "lemma2_ratio_check", n, p, "1 < p <= n");
  // f(n,p) without the e^2 factor, which cancels in the ratio.
  auto f = [p](int m) {
    return Rational(m * binomial(m, p - 1) * ipow(p + 2, p - 1),
                    (p - 1) * ipow(p, m));
  };
  const Rational ratio = f(n) / f(n + 1);
  const Rational closed(BigInt(n) * p * (n - p + 2), BigInt(n + 1) * (n + 1));

  IneqVerdict v = exact_less("ratio", n, p, Rational(n + 1),
                             Rational(BigInt(n) * (n - (p - 1)) * (p - 1)));
  const bool identity = ratio == closed;
  const bool equivalence = (closed > 1) == (v.status == IneqStatus::Holds);
  if (!identity) {
    v.status = IneqStatus::Fails;
    v.note = "ratio identity mismatch: exact ratio " + to_exact_string(ratio);
  } else if (!equivalence) {
    v.status = IneqStatus::Fails;
    v.note = "ratio > 1 disagrees with the monotonicity condition";
  } else {
    v.note = "ratio identity exact: " + to_exact_string(closed);
  }
  return v;
}

IneqVerdict check_p_equals_n_plus_1_limit(int n) {
  require(n >= 1, "check_p_equals_n_plus_1_limit", n, n + 1, "n >= 1");
  const Rational base = Rational(1) + Rational(2, n + 1);
  Rational power = 1;
  for (int i = 0; i < n + 1; ++i) power *= base;
  return less_than_e_squared_times("p=n+1 limit", n, n + 1, power,
                                   Rational(1));
}

CounterexampleReport scan_counterexample(int q_max) {
  if (q_max < 2) {
    throw std::domain_error("scan_counterexample: q_max must be >= 2");
  }
  CounterexampleReport r;
  r.q_max = q_max;
  for (int q = 2; q <= q_max; ++q) {
    const Rational rhs(ipow(q, q + 2));
    const Rational c3(binomial(q + 2, 3));
    auto a = exact_less("counterexample-a", q, 0,
                        Rational(binomial(q + 2, q - 1)) * rpow(q + 2, q - 3),
                        rhs);
    const int n = q + 2;
    auto b = exact_less("counterexample-b", q, 0, c3 / rpow(n, 3),
                        Rational(ipow(n - 2, n), ipow(n, n)));
    if (a.status == IneqStatus::Fails && !r.first_failure_a) r.first_failure_a = q;
    if (b.status == IneqStatus::Fails && !r.first_failure_b) r.first_failure_b = q;
    r.variant_a.push_back(std::move(a));
    r.variant_b.push_back(std::move(b));
  }

  r.e_squared = cached_e_squared(kDefaultESquaredTerms);
  const RationalInterval inv = r.e_squared.reciprocal();
  r.limit.check = "limit";
  r.limit.lhs = inv;
  r.limit.rhs = RationalInterval::exact(Rational(1, 6));
  r.limit.e_squared_terms = kDefaultESquaredTerms;
  if (inv.hi < Rational(1, 6)) {
    r.limit.status = IneqStatus::Holds;
    r.limit.note = "1/e^2 < 1/6, so the limiting form 1/6 <= 1/e^2 is false";
  } else if (inv.lo >= Rational(1, 6)) {
    r.limit.status = IneqStatus::Fails;
  } else {
    r.limit.status = IneqStatus::Indeterminate;
  }
  return r;
}

namespace {

template <typename Check>
ScanReport scan(std::string name, int n_max, int n_min, Check&& check) {
  ScanReport r;
  r.check = std::move(name);
  r.n_max = n_max;
  for (int n = n_min; n <= n_max; ++n) {
    check(n, r.verdicts);
  }
  for (const auto& v : r.verdicts) {
    switch (v.status) {
      case IneqStatus::Holds: ++r.holds; break;
      case IneqStatus::Fails: ++r.fails; break;
      case IneqStatus::Indeterminate: ++r.indeterminate; break;
    }
  }
  return r;
}

}  // namespace

ScanReport scan_biernacki(int n_max) {
  return scan("biernacki", n_max, 1, [](int n, auto& out) {
    for (int p = 2; p < n - 2; ++p) out.push_back(check_biernacki(n, p));
  });
}

ScanReport scan_biernacki_upper(int n_max) {
  return scan("biernacki-upper", n_max, 1, [](int n, auto& out) {
    for (int p = 2; p <= n + 1; ++p) out.push_back(check_biernacki_upper(n, p));
  });
}

ScanReport scan_lemma2_part1(int n_max) {
  return scan("lemma2-1", n_max, 3, [](int n, auto& out) {
    for (int p = 2; p <= n; ++p) out.push_back(check_lemma2_part1(n, p));
  });
}

ScanReport scan_lemma2_part2(int n_max) {
  return scan("lemma2-2", n_max, 1, [](int n, auto& out) {
    for (int p = 2; p <= n + 1; ++p) out.push_back(check_lemma2_part2(n, p));
  });
}

ScanReport scan_lemma2_ratio(int n_max) {
  // The monotonicity step is only used for n >= 3.
  return scan("ratio", n_max, 3, [](int n, auto& out) {
    for (int p = 2; p <= n; ++p) out.push_back(lemma2_ratio_check(n, p));
  });
}

}  // namespace rubicon
