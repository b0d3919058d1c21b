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

#ifndef RUBICON_ROOTS_HPP_
#define RUBICON_ROOTS_HPP_

#include <vector>

#include "rubicon/poly.hpp"

namespace rubicon {

struct RootSet {
  std::vector<Complex> roots;
  // Scale-free backward-error proxy per root, see residual().
  std::vector<double> residuals;
  int iterations = 0;
  bool converged = false;
};

enum class SolvePrecision { Double, Extended };

struct SolveOptions {
  int max_iterations = 200;
  double residual_tolerance = 1e-10;
  // Extended runs the iteration in long double; used to re-check a
  // suspected bound violation before reporting it.
  SolvePrecision precision = SolvePrecision::Double;
};

// All roots of p at its effective degree by Aberth-Ehrlich simultaneous
// iteration. Deterministic: the starting points are a fixed function of the
// coefficients. Throws std::domain_error for a constant (or zero) polynomial.
// Non-convergence is reported through RootSet::converged, not thrown.
RootSet all_roots(const BinomialPolynomial& p, const SolveOptions& opts = {});

// Smallest |root|. Throws std::domain_error for an empty set.
double min_modulus(const RootSet& r);

// |p(z)| / (sum_k |c_k| |z|^k + tiny).
double residual(const BinomialPolynomial& p, Complex z);

}  // namespace rubicon

#endif  // RUBICON_ROOTS_HPP_
