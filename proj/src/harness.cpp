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

#include "rubicon/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <thread>

#include "rubicon/bounds.hpp"
#include "rubicon/roots.hpp"

namespace rubicon {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Measurement {
  double min_modulus = kInf;
  bool has_roots = false;
  bool converged = true;
  bool rechecked = false;
};

// Solves p and, if the double-precision answer is suspicious (not converged
// or inside radius + slack), re-solves in extended precision.
Measurement measure(const BinomialPolynomial& p, double radius) {
  Measurement m;
  if (p.effective_degree() < 1) return m;
  m.has_roots = true;
  RootSet rs = all_roots(p);
  m.min_modulus = min_modulus(rs);
  m.converged = rs.converged;
  if (!rs.converged || m.min_modulus + kViolationSlack <= radius) {
    SolveOptions tight;
    tight.precision = SolvePrecision::Extended;
    tight.max_iterations = 500;
    tight.residual_tolerance = 1e-13;
    rs = all_roots(p, tight);
    m.min_modulus = min_modulus(rs);
    m.converged = rs.converged;
    m.rechecked = true;
  }
  return m;
}

struct Outcome {
  TrialInstance instance;
  bool violation = false;
  bool rechecked = false;
  bool nonconverged = false;
  bool degree_drop = false;
};

Outcome finish(TrialInstance inst, double radius) {
  Outcome o;
  o.degree_drop = inst.tested.effective_degree() < inst.tested.n();
  const Measurement m = measure(inst.tested, radius);
  inst.claimed_radius = radius;
  inst.min_modulus = m.min_modulus;
  inst.ratio = m.has_roots ? m.min_modulus / radius : kInf;
  o.violation = m.has_roots && m.min_modulus + kViolationSlack <= radius;
  o.rechecked = m.rechecked;
  o.nonconverged = !m.converged;
  o.instance = std::move(inst);
  return o;
}

struct Partial {
  int violations = 0;
  int rechecked = 0;
  int nonconverged = 0;
  int degree_drops = 0;
  std::optional<TrialInstance> worst;
  std::optional<TrialInstance> first_violation;
};

// Runs trials [0, trials) on worker_count() threads, worker w taking
// indices w, w+T, ... Merging picks the smallest ratio and breaks ties by
// the lowest trial index.
template <typename TrialFn>
TrialReport run_campaign(std::string name, int trials, std::uint64_t seed,
                         TrialFn&& trial) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const int workers = std::max(1, std::min(worker_count(), trials));
  std::vector<Partial> parts(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));

  auto work = [&](int w) {
    Partial& part = parts[static_cast<std::size_t>(w)];
    try {
      for (int i = w; i < trials; i += workers) {
        const std::uint64_t ts = split_seed(seed, static_cast<std::uint64_t>(i));
        Rng rng(ts);
        Outcome o = trial(rng);
        o.instance.trial = i;
        o.instance.trial_seed = ts;
        part.violations += o.violation;
        part.rechecked += o.rechecked;
        part.nonconverged += o.nonconverged;
        part.degree_drops += o.degree_drop;
        if (o.violation && !part.first_violation) {
          part.first_violation = o.instance;
        }
        if (!part.worst || o.instance.ratio < part.worst->ratio) {
          part.worst = std::move(o.instance);
        }
      }
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  TrialReport r;
  r.campaign = std::move(name);
  r.seed = seed;
  r.trials = trials;
  r.min_ratio = kInf;
  auto earlier = [](const std::optional<TrialInstance>& a,
                    const std::optional<TrialInstance>& b) {
    return a && (!b || a->trial < b->trial);
  };
  for (auto& part : parts) {
    r.violations += part.violations;
    r.rechecked += part.rechecked;
    r.nonconverged += part.nonconverged;
    r.degree_drops += part.degree_drops;
    if (earlier(part.first_violation, r.first_violation)) {
      r.first_violation = part.first_violation;
    }
    if (part.worst &&
        (!r.worst_case || part.worst->ratio < r.worst_case->ratio ||
         (part.worst->ratio == r.worst_case->ratio &&
          part.worst->trial < r.worst_case->trial))) {
      r.worst_case = part.worst;
    }
  }
  if (r.worst_case) r.min_ratio = r.worst_case->ratio;
  return r;
}

// Shared trial body for the two top-p theorems.
Outcome top_p_trial(Rng& rng, int n, int p, double R, double margin,
                    double eps_max, double radius) {
  TrialInstance inst;
  inst.base = random_exterior_polynomial(n, R, margin, rng.chance(0.25), rng);
  const SampleMode mode = rng.chance(0.5) ? SampleMode::Circle : SampleMode::Disk;
  Perturbation pert = sample_perturbation(n, p, eps_max, mode, rng);
  // Annihilate the leading coefficient now and then; the bound must still
  // hold for the zeros that remain.
  if (eps_max >= 1.0 && rng.chance(0.125)) pert.eps.back() = -1.0;
  inst.tested = apply_perturbation(inst.base, pert);
  inst.perturbation = std::move(pert);
  return finish(std::move(inst), radius);
}

}  // namespace

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::phase() { return kTwoPi * uniform(); }

int Rng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

bool Rng::chance(double probability) { return uniform() < probability; }

const char* to_string(SampleMode m) {
  return m == SampleMode::Disk ? "disk" : "circle";
}

Complex Perturbation::at(int k) const {
  if (k < first() || k > n) return 0.0;
  return eps[static_cast<std::size_t>(k - first())];
}

Perturbation sample_perturbation(int n, int p, double eps_max, SampleMode mode,
                                 std::uint64_t seed) {
  Rng rng(seed);
  return sample_perturbation(n, p, eps_max, mode, rng);
}

Perturbation sample_perturbation(int n, int p, double eps_max, SampleMode mode,
                                 Rng& rng) {
  if (n < 0 || p < 1 || p > n + 1) {
    throw std::invalid_argument("sample_perturbation: need 1 <= p <= n+1");
  }
  if (!(eps_max >= 0.0) || !std::isfinite(eps_max)) {
    throw std::invalid_argument("sample_perturbation: eps_max must be >= 0");
  }
  Perturbation pert{n, p, eps_max, {}};
  pert.eps.reserve(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    const double radius = mode == SampleMode::Circle
                              ? eps_max
                              : eps_max * std::sqrt(rng.uniform());
    pert.eps.push_back(radius == 0.0 ? Complex(0.0)
                                     : std::polar(radius, rng.phase()));
  }
  return pert;
}

BinomialPolynomial apply_perturbation(const BinomialPolynomial& f,
                                      const Perturbation& pert) {
  if (f.n() != pert.n ||
      pert.eps.size() != static_cast<std::size_t>(pert.p)) {
    throw std::domain_error("apply_perturbation: dimension mismatch");
  }
  std::vector<Complex> a = f.coeffs();
  for (int k = pert.first(); k <= pert.n; ++k) {
    const Complex e = pert.at(k);
    if (e != Complex(0.0)) a[static_cast<std::size_t>(k)] *= 1.0 + e;
  }
  return BinomialPolynomial(std::move(a));
}

BinomialPolynomial random_exterior_polynomial(int n, double R, double margin,
                                              bool real_coefficients, Rng& rng) {
  if (n < 0 || !(R > 0.0) || !(margin >= 0.0)) {
    throw std::invalid_argument("random_exterior_polynomial: bad parameters");
  }
  const double lo = std::log(R * (1.0 + margin));
  const double hi = std::log(10.0 * R);
  auto modulus = [&] { return std::exp(rng.uniform(lo, hi)); };

  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(n));
  if (real_coefficients) {
    while (static_cast<int>(roots.size()) + 2 <= n) {
      const Complex z = std::polar(modulus(), rng.phase());
      roots.push_back(z);
      roots.push_back(std::conj(z));
    }
    if (static_cast<int>(roots.size()) < n) {
      roots.emplace_back(rng.chance(0.5) ? modulus() : -modulus(), 0.0);
    }
  } else {
    for (int i = 0; i < n; ++i) roots.push_back(std::polar(modulus(), rng.phase()));
  }
  const double scale = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
  const Complex leading =
      real_coefficients ? Complex(scale) : std::polar(scale, rng.phase());
  BinomialPolynomial f = BinomialPolynomial::from_roots(roots, leading);
  if (!real_coefficients) return f;
  std::vector<Complex> coeffs = f.coeffs();
  for (auto& c : coeffs) c = Complex(c.real(), 0.0);
  return BinomialPolynomial(std::move(coeffs));
}

TrialReport mc_verify_theorem1(const Theorem1Campaign& cfg) {
  if (!(cfg.p < cfg.n - 2 || cfg.p == 1) || cfg.p < 1) {
    throw std::domain_error("theorem 1 campaign needs p < n-2 or p == 1");
  }
  if (!(cfg.eps_max >= 0.0 && cfg.eps_max <= 1.0)) {
    throw std::domain_error("theorem 1 campaign needs 0 <= eps_max <= 1");
  }
  const double radius = theorem1_bound(cfg.R, {cfg.n, cfg.p, cfg.eps_max}).radius;
  return run_campaign("theorem1", cfg.trials, cfg.seed, [&](Rng& rng) {
    return top_p_trial(rng, cfg.n, cfg.p, cfg.R, cfg.generator_margin,
                       cfg.eps_max, radius);
  });
}

TrialReport mc_verify_theorem2(const Theorem2Campaign& cfg) {
  if (cfg.n < 1 || !(1 < cfg.p && cfg.p <= cfg.n + 1)) {
    throw std::domain_error("theorem 2 campaign needs 1 < p <= n+1");
  }
  const double eps_max = cfg.eps_max.value_or(theorem2_eps_max(cfg.n, cfg.p));
  const BoundCertificate cert = theorem2_bound(cfg.R, {cfg.n, cfg.p, eps_max});
  if (!cert.applicable) {
    throw std::domain_error("theorem 2 campaign: eps_max exceeds n/(e^2 (p-1))");
  }
  return run_campaign("theorem2", cfg.trials, cfg.seed, [&](Rng& rng) {
    return top_p_trial(rng, cfg.n, cfg.p, cfg.R, cfg.generator_margin, eps_max,
                       cert.radius);
  });
}

TrialReport mc_verify_lemma1(const Lemma1Campaign& cfg) {
  const double radius = lemma1_bound(cfg.R, cfg.n, cfg.eps).radius;
  return run_campaign("lemma1", cfg.trials, cfg.seed, [&](Rng& rng) {
    TrialInstance inst;
    inst.base = random_exterior_polynomial(cfg.n, cfg.R, cfg.generator_margin,
                                           rng.chance(0.25), rng);
    Perturbation pert = sample_perturbation(cfg.n, 1, cfg.eps,
                                            SampleMode::Circle, rng);
    inst.tested = apply_perturbation(inst.base, pert);
    inst.perturbation = std::move(pert);
    return finish(std::move(inst), radius);
  });
}

TrialReport mc_verify_szego(const SzegoCampaign& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("szego campaign needs n >= 1");
  const double radius = szego_product_region(cfg.r1, cfg.r2).radius;
  return run_campaign("szego", cfg.trials, cfg.seed, [&](Rng& rng) {
    TrialInstance inst;
    inst.base = random_exterior_polynomial(cfg.n, cfg.r1, cfg.generator_margin,
                                           rng.chance(0.25), rng);
    const int k = (cfg.n > 1 && rng.chance(cfg.deficient_fraction))
                      ? rng.integer(1, cfg.n - 1)
                      : cfg.n;
    const BinomialPolynomial h2 = random_exterior_polynomial(
        k, cfg.r2, cfg.generator_margin, rng.chance(0.25), rng);
    inst.tested = szego_compose(inst.base, h2);
    inst.second_factor = h2;
    return finish(std::move(inst), radius);
  });
}

std::vector<Complex> coincidence_candidates(const BinomialPolynomial& f,
                                            Complex a) {
  const int n = f.n();
  const Complex lead = f.coeff(n);
  if (n < 1 || lead == Complex(0.0)) {
    throw std::invalid_argument("coincidence: need n >= 1 and a_n != 0");
  }
  const Complex q = f.evaluate(a) / lead;
  const Complex w = std::polar(std::pow(std::abs(q), 1.0 / n), std::arg(q) / n);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    out.push_back(a - std::polar(1.0, kTwoPi * j / n) * w);
  }
  return out;
}

Complex coincidence_witness(const BinomialPolynomial& f, Complex a, double R) {
  const auto cands = coincidence_candidates(f, a);
  const auto best = std::max_element(
      cands.begin(), cands.end(),
      [](Complex x, Complex y) { return std::abs(x) < std::abs(y); });
  if (std::abs(*best) > R) return *best;
  if (min_modulus(all_roots(f)) <= R) {
    throw std::domain_error("coincidence: f has a zero in |z| <= R");
  }
  throw FalsificationError("coincidence: no candidate c with |c| > R");
}

TrialReport mc_verify_coincidence(const CoincidenceCampaign& cfg) {
  if (cfg.n_max < 1) throw std::invalid_argument("coincidence needs n_max >= 1");
  return run_campaign("coincidence", cfg.trials, cfg.seed, [&](Rng& rng) {
    TrialInstance inst;
    const int n = rng.integer(1, cfg.n_max);
    inst.base = random_exterior_polynomial(n, cfg.R, cfg.generator_margin,
                                           rng.chance(0.25), rng);
    inst.tested = inst.base;
    const Complex a = std::polar(5.0 * cfg.R * std::sqrt(rng.uniform()), rng.phase());
    inst.evaluation_point = a;
    inst.claimed_radius = cfg.R;
    Outcome o;
    const auto cands = coincidence_candidates(inst.base, a);
    double best = 0.0;
    for (const Complex& c : cands) best = std::max(best, std::abs(c));
    inst.min_modulus = best;
    inst.ratio = best / cfg.R;
    o.violation = !(best > cfg.R);
    o.instance = std::move(inst);
    return o;
  });
}

double sharpness_ratio(const SharpnessConfig& cfg, const Perturbation& pert) {
  const BinomialPolynomial f =
      apply_perturbation(BinomialPolynomial::one_plus_z(cfg.n, cfg.R), pert);
  const double radius = cfg.R / (cfg.p + 1);
  const Measurement m = measure(f, radius);
  return m.has_roots ? m.min_modulus / radius : kInf;
}

SharpnessReport sharpness_search(const SharpnessConfig& cfg) {
  if (!(1 <= cfg.p && cfg.p < cfg.n - 2)) {
    throw std::domain_error("sharpness_search needs 1 <= p < n-2");
  }
  if (!(cfg.R > 0.0) || cfg.restarts < 1 || cfg.iterations < 0) {
    throw std::invalid_argument("sharpness_search: bad parameters");
  }
  constexpr double kInitialStep = 0.25;
  constexpr double kMinStep = 1e-4;

  SharpnessReport report;
  report.seed = cfg.seed;
  report.best_ratio = kInf;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    Rng rng(split_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
    Perturbation pert = sample_perturbation(cfg.n, cfg.p, 1.0, SampleMode::Disk, rng);
    std::vector<double> rho(static_cast<std::size_t>(cfg.p));
    std::vector<double> theta(static_cast<std::size_t>(cfg.p));
    for (std::size_t i = 0; i < rho.size(); ++i) {
      rho[i] = std::abs(pert.eps[i]);
      theta[i] = std::arg(pert.eps[i]);
    }
    auto rebuild = [&] {
      for (std::size_t i = 0; i < rho.size(); ++i) {
        pert.eps[i] = std::polar(rho[i], theta[i]);
      }
    };
    rebuild();
    double current = sharpness_ratio(cfg, pert);
    ++report.evaluations;

    double step = kInitialStep;
    for (int sweep = 0; sweep < cfg.iterations && step >= kMinStep; ++sweep) {
      ++report.iterations;
      bool improved = false;
      for (std::size_t i = 0; i < rho.size(); ++i) {
        for (int coord = 0; coord < 2; ++coord) {
          double& x = coord == 0 ? rho[i] : theta[i];
          const double delta = coord == 0 ? step : step * std::numbers::pi;
          const double saved = x;
          for (double sign : {1.0, -1.0}) {
            x = saved + sign * delta;
            if (coord == 0) x = std::clamp(x, 0.0, 1.0);
            if (x == saved) continue;
            rebuild();
            const double trial = sharpness_ratio(cfg, pert);
            ++report.evaluations;
            if (trial < current) {
              current = trial;
              improved = true;
              break;
            }
            x = saved;
          }
          rebuild();
        }
      }
      if (!improved) step *= 0.5;
    }

    report.restart_ratios.push_back(current);
    if (current < report.best_ratio) {
      report.best_ratio = current;
      report.best_perturbation = pert;
      report.best_restart = restart;
    }
  }
  report.best_polynomial = apply_perturbation(
      BinomialPolynomial::one_plus_z(cfg.n, cfg.R), report.best_perturbation);
  return report;
}

int worker_count() {
  if (const char* env = std::getenv("RUBICON_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace rubicon
