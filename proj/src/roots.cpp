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

#include "rubicon/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace rubicon {
namespace {

constexpr double kTiny = std::numeric_limits<double>::min();

template <typename T>
struct Eval {
  std::complex<T> value;
  std::complex<T> derivative;
  T magnitude;  // sum |c_k| |z|^k, the rounding-error scale of value
};

template <typename T>
Eval<T> horner(const std::vector<std::complex<T>>& c, std::complex<T> z) {
  std::complex<T> v = c.back();
  std::complex<T> d = 0;
  T m = std::abs(c.back());
  const T az = std::abs(z);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    d = d * z + v;
    v = v * z + c[k];
    m = m * az + std::abs(c[k]);
  }
  return {v, d, m};
}

template <typename T>
RootSet aberth(const std::vector<Complex>& power, int degree,
               const SolveOptions& opts) {
  using C = std::complex<T>;
  std::vector<C> c(power.begin(), power.begin() + degree + 1);
  const std::size_t d = static_cast<std::size_t>(degree);

  T cauchy = 0;
  for (std::size_t k = 0; k < d; ++k) {
    cauchy = std::max(cauchy, std::abs(c[k] / c[d]));
  }
  cauchy += 1;

  std::vector<C> z(d);
  for (std::size_t j = 0; j < d; ++j) {
    const T angle = (2 * std::numbers::pi_v<T> * static_cast<T>(j) + T(0.4)) /
                    static_cast<T>(d);
    z[j] = std::polar(cauchy, angle);
  }

  const T eps = std::numeric_limits<T>::epsilon();
  std::vector<bool> done(d, false);
  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      const Eval<T> e = horner(c, z[i]);
      // Value already at rounding level: z[i] is as good as this precision
      // can certify.
      if (std::abs(e.value) <= eps * e.magnitude) {
        done[i] = true;
        continue;
      }
      all_done = false;
      const C ratio = e.value / e.derivative;
      C repulsion = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) repulsion += T(1) / (z[i] - z[j]);
      }
      const C step = ratio / (T(1) - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        continue;
      }
      z[i] -= step;
      if (std::abs(step) <= 2 * eps * std::abs(z[i])) done[i] = true;
    }
    if (all_done) break;
  }

  RootSet out;
  out.iterations = iter;
  out.roots.reserve(d);
  out.residuals.reserve(d);
  double worst = 0.0;
  for (const C& r : z) {
    const Eval<T> e = horner(c, r);
    const double res = static_cast<double>(std::abs(e.value) /
                                           (e.magnitude + T(kTiny)));
    out.roots.emplace_back(static_cast<double>(r.real()),
                           static_cast<double>(r.imag()));
    out.residuals.push_back(res);
    worst = std::max(worst, res);
  }
  out.converged = worst <= opts.residual_tolerance;
  return out;
}

}  // namespace

RootSet all_roots(const BinomialPolynomial& p, const SolveOptions& opts) {
  const int degree = p.effective_degree();
  if (degree < 1) {
    throw std::domain_error("constant polynomial");
  }
  const auto power = p.to_power_basis();
  if (opts.precision == SolvePrecision::Extended) {
    return aberth<long double>(power, degree, opts);
  }
  return aberth<double>(power, degree, opts);
}

double min_modulus(const RootSet& r) {
  if (r.roots.empty()) {
    throw std::domain_error("min_modulus: empty root set");
  }
  double m = std::abs(r.roots.front());
  for (const auto& z : r.roots) m = std::min(m, std::abs(z));
  return m;
}

double residual(const BinomialPolynomial& p, Complex z) {
  const auto c = p.to_power_basis();
  const Eval<double> e = horner(c, z);
  return std::abs(e.value) / (e.magnitude + kTiny);
}

}  // namespace rubicon
