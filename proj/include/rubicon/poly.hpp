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

#ifndef RUBICON_POLY_HPP_
#define RUBICON_POLY_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rubicon {

using Complex = std::complex<double>;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact C(n, k). Throws std::domain_error unless 0 <= k <= n.
BigInt binomial(int n, int k);

// C(n, k) rounded once to the nearest double.
double binomial_double(int n, int k);

// A complex polynomial of nominal degree n written in the binomial basis,
//
//   f(z) = sum_{k=0}^{n} C(n,k) a_k z^k.
//
// The stored a_k are immutable after construction and always finite.
class BinomialPolynomial {
 public:
  // Takes a_0..a_n; n is coeffs.size() - 1. Throws std::invalid_argument on
  // an empty sequence or a non-finite entry.
  explicit BinomialPolynomial(std::vector<Complex> coeffs);

  static BinomialPolynomial from_power_basis(std::span<const Complex> c);

  // leading * prod (z - root). An empty root list yields the constant
  // `leading`.
  static BinomialPolynomial from_roots(std::span<const Complex> roots,
                                       Complex leading = 1.0);

  // (1 + z/scale)^n, i.e. a_k = scale^{-k}.
  static BinomialPolynomial one_plus_z(int n, double scale = 1.0);

  int n() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

  // Largest k with a_k != 0 (exact test), or -1 for the zero polynomial.
  int effective_degree() const;
  bool is_zero() const { return effective_degree() < 0; }

  // c_k = C(n,k) a_k.
  std::vector<Complex> to_power_basis() const;

  // Horner evaluation of the power-basis form.
  Complex evaluate(Complex z) const;

  // z^n f(1/z). In this basis reversal is a plain coefficient flip.
  BinomialPolynomial reverse() const;

  // Re-expresses the same polynomial with a larger nominal degree. The
  // power-basis coefficients are preserved and the new top ones are zero.
  BinomialPolynomial padded_to(int n) const;

  friend bool operator==(const BinomialPolynomial&,
                         const BinomialPolynomial&) = default;

 private:
  std::vector<Complex> coeffs_;
};

// Coefficient-wise product sum C(n,k) a_k b_k z^k. The factor with the
// smaller nominal degree is zero-padded first.
BinomialPolynomial szego_compose(const BinomialPolynomial& h1,
                                 const BinomialPolynomial& h2);

}  // namespace rubicon

#endif  // RUBICON_POLY_HPP_
