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

#ifndef RUBICON_BOUNDS_HPP_
#define RUBICON_BOUNDS_HPP_

#include <string>
#include <vector>

#include "rubicon/inequalities.hpp"
#include "rubicon/poly.hpp"

namespace rubicon {

enum class BoundKind { Theorem1, Theorem2, Lemma1, SzegoProduct, CauchyBaseline };

const char* to_string(BoundKind k);

struct Hypothesis {
  std::string name;
  bool satisfied = false;
};

// A zero-free radius: every zero of the perturbed polynomial satisfies
// |z| > radius, provided all hypotheses hold.
struct BoundCertificate {
  BoundKind kind = BoundKind::Theorem1;
  double radius = 0.0;
  std::vector<Hypothesis> hypotheses;
  bool applicable = false;
};

// Top p binomial-basis coefficients a_{n-p+1}..a_n are multiplied by
// (1 + eps_k) with |eps_k| <= eps_max.
struct PerturbationSpec {
  int n = 1;
  int p = 1;
  double eps_max = 0.0;

  // Throws std::invalid_argument unless n >= 1, 1 <= p <= n+1, eps_max >= 0.
  void validate() const;
};

// R/(p+1) for |eps_k| <= 1 and p < n-2. p == 1 is admitted through the
// single-coefficient bound, which is never smaller than R/2.
BoundCertificate theorem1_bound(double R, const PerturbationSpec& spec);

// R / (eps^{1/n} + 1) for a perturbation of a_n alone.
BoundCertificate lemma1_bound(double R, int n, double eps);

// R/(p+1) for 1 < p <= n+1 and |eps_k| <= n/(e^2 (p-1)).
BoundCertificate theorem2_bound(double R, const PerturbationSpec& spec);

// Composite of factors with zeros outside r1 and r2 has zeros outside r1*r2.
BoundCertificate szego_product_region(double r1, double r2);

// |c_0| / (|c_0| + max_{k>=1} |c_k|). Throws std::domain_error when c_0 == 0.
BoundCertificate cauchy_exclusion_radius(const BinomialPolynomial& p);

// Largest applicable radius among Lemma 1 (p == 1 only), Theorem 1 and
// Theorem 2, preferred in that order on ties. When nothing applies the first
// candidate is returned with applicable == false.
BoundCertificate best_bound(double R, const PerturbationSpec& spec);

// All certificates best_bound chooses from, in preference order.
std::vector<BoundCertificate> candidate_bounds(double R,
                                               const PerturbationSpec& spec);

// The Theorem 2 admissibility threshold n/(e^2 (p-1)) as an exact interval.
RationalInterval theorem2_threshold(int n, int p);

// Largest double not exceeding n / (e^2_hi (p-1)); always admissible.
double theorem2_eps_max(int n, int p);

// True iff eps <= n/(e^2 (p-1)) is certified, i.e. eps * e^2_hi * (p-1) <= n.
bool theorem2_eps_admissible(double eps, int n, int p);

}  // namespace rubicon

#endif  // RUBICON_BOUNDS_HPP_
