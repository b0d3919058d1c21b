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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rubicon {
namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

BoundCertificate make(BoundKind kind, double radius,
                      std::vector<Hypothesis> hyps) {
  BoundCertificate c;
  c.kind = kind;
  c.radius = radius;
  c.hypotheses = std::move(hyps);
  c.applicable = std::all_of(c.hypotheses.begin(), c.hypotheses.end(),
                             [](const Hypothesis& h) { return h.satisfied; });
  return c;
}

const RationalInterval& e_squared() {
  static const RationalInterval e2 = e_squared_bounds(kDefaultESquaredTerms);
  return e2;
}

}  // namespace

const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::Theorem1: return "theorem1";
    case BoundKind::Theorem2: return "theorem2";
    case BoundKind::Lemma1: return "lemma1";
    case BoundKind::SzegoProduct: return "szego_product";
    case BoundKind::CauchyBaseline: return "cauchy_baseline";
  }
  return "unknown";
}

void PerturbationSpec::validate() const {
  if (n < 1) throw std::invalid_argument("perturbation: n must be >= 1");
  if (p < 1 || p > n + 1) {
    throw std::invalid_argument("perturbation: need 1 <= p <= n+1");
  }
  if (!(eps_max >= 0.0) || !std::isfinite(eps_max)) {
    throw std::invalid_argument("perturbation: eps_max must be >= 0");
  }
}

BoundCertificate theorem1_bound(double R, const PerturbationSpec& spec) {
  require_positive(R, "R");
  spec.validate();
  std::vector<Hypothesis> h{
      {"eps_max <= 1", spec.eps_max <= 1.0},
      {"p < n-2 or p == 1", spec.p < spec.n - 2 || spec.p == 1},
  };
  if (spec.p == 1) {
    h.push_back({"p == 1 via single-coefficient bound R/(eps^(1/n)+1) >= R/2",
                 true});
  }
  return make(BoundKind::Theorem1, R / (spec.p + 1), std::move(h));
}

BoundCertificate lemma1_bound(double R, int n, double eps) {
  require_positive(R, "R");
  if (n < 1) throw std::invalid_argument("lemma1_bound: n must be >= 1");
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("lemma1_bound: eps must be >= 0");
  }
  const double root = std::pow(eps, 1.0 / n);
  return make(BoundKind::Lemma1, R / (root + 1.0),
              {{"only a_n perturbed", true}});
}

RationalInterval theorem2_threshold(int n, int p) {
  if (n < 1 || p < 2) {
    throw std::domain_error("theorem2_threshold: need n >= 1, p >= 2");
  }
  const RationalInterval inv = e_squared().reciprocal();
  return inv * Rational(n, p - 1);
}

bool theorem2_eps_admissible(double eps, int n, int p) {
  if (p < 2) return false;
  // A finite double is an exact dyadic rational.
  const Rational e(eps);
  return e * e_squared().hi * (p - 1) <= Rational(n);
}

double theorem2_eps_max(int n, int p) {
  const Rational bound = theorem2_threshold(n, p).lo;
  double v = bound.convert_to<double>();
  while (Rational(v) > bound) v = std::nextafter(v, 0.0);
  return v;
}

BoundCertificate theorem2_bound(double R, const PerturbationSpec& spec) {
  require_positive(R, "R");
  spec.validate();
  const bool p_ok = 1 < spec.p && spec.p <= spec.n + 1;
  return make(BoundKind::Theorem2, R / (spec.p + 1),
              {{"1 < p <= n+1", p_ok},
               {"eps_max <= n/(e^2 (p-1)) against upper e^2 bound",
                p_ok && theorem2_eps_admissible(spec.eps_max, spec.n, spec.p)}});
}

BoundCertificate szego_product_region(double r1, double r2) {
  require_positive(r1, "r1");
  require_positive(r2, "r2");
  return make(BoundKind::SzegoProduct, r1 * r2,
              {{"zeros of h1 outside r1", true}, {"zeros of h2 outside r2", true}});
}

BoundCertificate cauchy_exclusion_radius(const BinomialPolynomial& p) {
  const auto c = p.to_power_basis();
  const double c0 = std::abs(c[0]);
  if (c0 == 0.0) throw std::domain_error("origin is a root");
  double m = 0.0;
  for (std::size_t k = 1; k < c.size(); ++k) m = std::max(m, std::abs(c[k]));
  return make(BoundKind::CauchyBaseline, c0 / (c0 + m), {{"c_0 != 0", true}});
}

std::vector<BoundCertificate> candidate_bounds(double R,
                                               const PerturbationSpec& spec) {
  std::vector<BoundCertificate> out;
  if (spec.p == 1) out.push_back(lemma1_bound(R, spec.n, spec.eps_max));
  out.push_back(theorem1_bound(R, spec));
  out.push_back(theorem2_bound(R, spec));
  return out;
}

BoundCertificate best_bound(double R, const PerturbationSpec& spec) {
  const auto all = candidate_bounds(R, spec);
  const BoundCertificate* best = nullptr;
  for (const auto& c : all) {
    if (c.applicable && (best == nullptr || c.radius > best->radius)) best = &c;
  }
  return best ? *best : all.front();
}

}  // namespace rubicon
