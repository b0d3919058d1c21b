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

#ifndef RUBICON_HARNESS_HPP_
#define RUBICON_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rubicon/poly.hpp"

namespace rubicon {

// Absolute slack on every min-modulus vs. radius comparison.
inline constexpr double kViolationSlack = 1e-7;

// Counter-based seed split: trial i of a campaign seeded with s draws from
// an engine seeded with split_seed(s, i), independent of execution order.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

// mt19937_64 with a fixed double conversion, so streams are reproducible
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);   // [lo, hi)
  double phase();                         // [0, 2pi)
  int integer(int lo, int hi);            // [lo, hi]
  bool chance(double probability);

 private:
  std::mt19937_64 engine_;
};

enum class SampleMode { Disk, Circle };

const char* to_string(SampleMode m);

// Multipliers eps_k on a_k for k = n-p+1..n; eps[i] belongs to k = first()+i.
struct Perturbation {
  int n = 0;
  int p = 0;
  double eps_max = 0.0;
  std::vector<Complex> eps;

  int first() const { return n - p + 1; }
  Complex at(int k) const;
};

// disk: uniform by area in |eps| <= eps_max; circle: |eps| = eps_max.
// Phases are uniform in both modes. Throws std::invalid_argument unless
// 1 <= p <= n+1 and eps_max >= 0.
Perturbation sample_perturbation(int n, int p, double eps_max, SampleMode mode,
                                 std::uint64_t seed);
Perturbation sample_perturbation(int n, int p, double eps_max, SampleMode mode,
                                 Rng& rng);

// a'_k = a_k (1 + eps_k) on the perturbed range. Throws std::domain_error
// when the degrees differ.
BinomialPolynomial apply_perturbation(const BinomialPolynomial& f,
                                      const Perturbation& pert);

// Degree-n polynomial whose roots have log-uniform modulus in
// [R (1+margin), 10 R] and uniform phase. With real_coefficients the roots
// come in conjugate pairs (plus one real root for odd n).
BinomialPolynomial random_exterior_polynomial(int n, double R, double margin,
                                              bool real_coefficients, Rng& rng);

// One instance behind a TrialReport entry, enough to replay it.
struct TrialInstance {
  int trial = -1;
  std::uint64_t trial_seed = 0;
  BinomialPolynomial base{std::vector<Complex>{1.0}};
  std::optional<BinomialPolynomial> second_factor;  // Szego campaigns
  std::optional<Perturbation> perturbation;
  BinomialPolynomial tested{std::vector<Complex>{1.0}};
  std::optional<Complex> evaluation_point;           // coincidence campaigns
  double min_modulus = 0.0;
  double claimed_radius = 0.0;
  double ratio = 0.0;
};

struct TrialReport {
  std::string campaign;
  std::uint64_t seed = 0;
  int trials = 0;
  int violations = 0;
  // Raw violations or non-converged solves that were re-solved in extended
  // precision.
  int rechecked = 0;
  int nonconverged = 0;
  int degree_drops = 0;
  // min over trials of min_modulus / claimed_radius; +inf if no trial had
  // a root.
  double min_ratio = 0.0;
  std::optional<TrialInstance> worst_case;
  std::optional<TrialInstance> first_violation;
};

struct Theorem1Campaign {
  int trials = 1000;
  int n = 8;
  int p = 2;
  double R = 1.0;
  std::uint64_t seed = 0;
  double generator_margin = 1e-3;
  double eps_max = 1.0;
};

struct Theorem2Campaign {
  int trials = 1000;
  int n = 8;
  int p = 2;
  double R = 1.0;
  std::uint64_t seed = 0;
  double generator_margin = 1e-3;
  // Defaults to the certified threshold n/(e^2 (p-1)).
  std::optional<double> eps_max;
};

struct Lemma1Campaign {
  int trials = 1000;
  int n = 6;
  double R = 1.0;
  double eps = 1.0;
  std::uint64_t seed = 0;
  double generator_margin = 1e-3;
};

struct SzegoCampaign {
  int trials = 1000;
  int n = 8;
  double r1 = 1.0;
  double r2 = 1.0;
  std::uint64_t seed = 0;
  double generator_margin = 1e-3;
  // Fraction of trials whose second factor has degree below n.
  double deficient_fraction = 0.3;
};

struct CoincidenceCampaign {
  int trials = 1000;
  int n_max = 10;
  double R = 1.0;
  std::uint64_t seed = 0;
  double generator_margin = 1e-3;
};

// Throw std::domain_error when the campaign violates the theorem's
// hypotheses (e.g. p >= n-2 for Theorem 1).
TrialReport mc_verify_theorem1(const Theorem1Campaign& cfg);
TrialReport mc_verify_theorem2(const Theorem2Campaign& cfg);
TrialReport mc_verify_lemma1(const Lemma1Campaign& cfg);
TrialReport mc_verify_szego(const SzegoCampaign& cfg);
TrialReport mc_verify_coincidence(const CoincidenceCampaign& cfg);

// Raised when no coincidence point lies outside R although the solver
// confirms all zeros of f do.
class FalsificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Returns c with f(a) = a_n (a - c)^n and |c| > R. Throws
// std::invalid_argument if a_n == 0, std::domain_error if f has a zero in
// |z| <= R (hypothesis error), FalsificationError otherwise.
Complex coincidence_witness(const BinomialPolynomial& f, Complex a, double R);

// All n candidates a - omega_j w, w^n = f(a)/a_n.
std::vector<Complex> coincidence_candidates(const BinomialPolynomial& f,
                                            Complex a);

struct SharpnessConfig {
  int n = 8;
  int p = 2;
  double R = 1.0;
  int iterations = 200;
  int restarts = 50;
  std::uint64_t seed = 0;
};

struct SharpnessReport {
  double best_ratio = 0.0;
  Perturbation best_perturbation;
  BinomialPolynomial best_polynomial{std::vector<Complex>{1.0}};
  int best_restart = 0;
  // Coordinate sweeps actually performed, summed over restarts.
  int iterations = 0;
  int evaluations = 0;
  std::uint64_t seed = 0;
  std::vector<double> restart_ratios;
};

// min_modulus (p+1)/R for (1 + z/R)^n perturbed by pert; +inf when the
// perturbed polynomial is constant.
double sharpness_ratio(const SharpnessConfig& cfg, const Perturbation& pert);

// Random restarts followed by coordinate descent on the moduli and phases of
// eps_k within |eps_k| <= 1, halving the step when a sweep stalls. Throws
// std::domain_error unless p < n-2.
SharpnessReport sharpness_search(const SharpnessConfig& cfg);

// Worker count: RUBICON_THREADS if set and positive, else hardware
// concurrency.
int worker_count();

}  // namespace rubicon

#endif  // RUBICON_HARNESS_HPP_
