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

#include "rubicon/poly.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace rubicon {
namespace {

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Cached rows of C(n, k) as doubles.
const std::vector<double>& binomial_row(int n) {
  static std::mutex mu;
  static std::vector<std::vector<double>> rows;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<std::size_t>(n) >= rows.size()) {
    rows.resize(static_cast<std::size_t>(n) + 1);
  }
  auto& row = rows[static_cast<std::size_t>(n)];
  if (row.empty()) {
    row.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      row.push_back(binomial(n, k).convert_to<double>());
    }
  }
  return row;
}

}  // namespace

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::domain_error("binomial: need 0 <= k <= n, got n=" +
                            std::to_string(n) + " k=" + std::to_string(k));
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  // After step i the running value is C(n-k+i, i), so each division is exact.
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

double binomial_double(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    (void)binomial(n, k);  // throws
  }
  return binomial_row(n)[static_cast<std::size_t>(k)];
}

BinomialPolynomial::BinomialPolynomial(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("polynomial needs at least one coefficient");
  }
  for (const auto& a : coeffs_) {
    if (!is_finite(a)) {
      throw std::invalid_argument("polynomial coefficients must be finite");
    }
  }
}

BinomialPolynomial BinomialPolynomial::from_power_basis(
    std::span<const Complex> c) {
  if (c.empty()) {
    throw std::invalid_argument("power-basis sequence is empty");
  }
  const int n = static_cast<int>(c.size()) - 1;
  const auto& row = binomial_row(n);
  std::vector<Complex> a(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    a[k] = c[k] / row[k];
  }
  return BinomialPolynomial(std::move(a));
}

BinomialPolynomial BinomialPolynomial::from_roots(
    std::span<const Complex> roots, Complex leading) {
  if (leading == Complex(0.0)) {
    throw std::invalid_argument("from_roots: leading coefficient is zero");
  }
  // Power-basis product, lowest degree first.
  std::vector<Complex> c{leading};
  for (const Complex& r : roots) {
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) {
      c[k] = c[k - 1] - r * c[k];
    }
    c[0] = -r * c[0];
  }
  return from_power_basis(c);
}

BinomialPolynomial BinomialPolynomial::one_plus_z(int n, double scale) {
  if (n < 0 || !(scale > 0.0)) {
    throw std::invalid_argument("one_plus_z: need n >= 0 and scale > 0");
  }
  std::vector<Complex> a(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    a[static_cast<std::size_t>(k)] = std::pow(scale, -k);
  }
  return BinomialPolynomial(std::move(a));
}

int BinomialPolynomial::effective_degree() const {
  for (int k = n(); k >= 0; --k) {
    if (coeffs_[static_cast<std::size_t>(k)] != Complex(0.0)) return k;
  }
  return -1;
}

std::vector<Complex> BinomialPolynomial::to_power_basis() const {
  const auto& row = binomial_row(n());
  std::vector<Complex> c(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    c[k] = coeffs_[k] * row[k];
  }
  return c;
}

Complex BinomialPolynomial::evaluate(Complex z) const {
  const auto c = to_power_basis();
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

BinomialPolynomial BinomialPolynomial::reverse() const {
  return BinomialPolynomial(
      std::vector<Complex>(coeffs_.rbegin(), coeffs_.rend()));
}

BinomialPolynomial BinomialPolynomial::padded_to(int target) const {
  if (target < n()) {
    throw std::domain_error("padded_to: target degree below nominal degree");
  }
  if (target == n()) return *this;
  auto c = to_power_basis();
  c.resize(static_cast<std::size_t>(target) + 1, Complex(0.0));
  return from_power_basis(c);
}

BinomialPolynomial szego_compose(const BinomialPolynomial& h1,
                                 const BinomialPolynomial& h2) {
  const int n = std::max(h1.n(), h2.n());
  const BinomialPolynomial a = h1.padded_to(n);
  const BinomialPolynomial b = h2.padded_to(n);
  if (a.n() != b.n()) {
    throw std::domain_error("szego_compose: degree mismatch after padding");
  }
  std::vector<Complex> out(a.coeffs().size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = a.coeffs()[k] * b.coeffs()[k];
  }
  return BinomialPolynomial(std::move(out));
}

}  // namespace rubicon
