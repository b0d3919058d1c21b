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

#include <stdexcept>

#include "rubicon/report.hpp"

namespace rubicon {
namespace {

constexpr double kSharpnessTolerance = 1e-6;

Json envelope(const CampaignConfig& cfg) {
  return Json{{"schema_version", kSchemaVersion},
              {"tool", "rubicon"},
              {"command", cfg.command},
              {"config", cfg.to_json()}};
}

CommandResult run_bound(CampaignConfig& cfg) {
  const double R = cfg.get_real("R", 1.0);
  PerturbationSpec spec;
  spec.n = cfg.get_int("n", 10);
  spec.p = cfg.get_int("p", 1);
  spec.eps_max = cfg.get_real("eps-max", 1.0);
  spec.validate();
  if (!(R > 0.0)) throw std::invalid_argument("--R must be positive");

  const BoundCertificate best = best_bound(R, spec);
  Json candidates = Json::array();
  for (const auto& c : candidate_bounds(R, spec)) candidates.push_back(to_json(c));

  CommandResult out;
  out.report = envelope(cfg);
  out.report["certificate"] = to_json(best);
  out.report["candidates"] = std::move(candidates);
  if (spec.p > 1) {
    const RationalInterval t = theorem2_threshold(spec.n, spec.p);
    out.report["theorem2_eps_threshold"] =
        Json{{"lo", format_real(t.lo.convert_to<double>())},
             {"hi", format_real(t.hi.convert_to<double>())}};
  }
  return out;
}

bool clean(const ScanReport& r) { return r.fails == 0 && r.indeterminate == 0; }

CommandResult run_ineq(CampaignConfig& cfg) {
  const std::string check = cfg.get_string("check", "biernacki");
  CommandResult out;
  if (check == "counterexample") {
    const int q_max = cfg.get_int("q-max", 50);
    const CounterexampleReport r = scan_counterexample(q_max);
    out.report = envelope(cfg);
    out.report["result"] = to_json(r);
    out.passed = r.limit.status == IneqStatus::Holds;
    return out;
  }

  const int n_max = cfg.get_int("n-max", 60);
  if (n_max < 1) throw std::invalid_argument("--n-max must be >= 1");
  ScanReport r;
  if (check == "biernacki") {
    r = scan_biernacki(n_max);
  } else if (check == "biernacki-upper") {
    r = scan_biernacki_upper(n_max);
  } else if (check == "lemma2-1") {
    r = scan_lemma2_part1(n_max);
  } else if (check == "lemma2-2") {
    r = scan_lemma2_part2(n_max);
  } else if (check == "ratio") {
    r = scan_lemma2_ratio(n_max);
  } else {
    throw std::invalid_argument("unknown --check \"" + check + "\"");
  }
  out.report = envelope(cfg);
  out.report["result"] = to_json(r);
  out.passed = clean(r);
  if (check == "lemma2-2") {
    Json family = Json::array();
    for (int n = 1; n <= n_max; ++n) {
      const IneqVerdict v = check_p_equals_n_plus_1_limit(n);
      out.passed = out.passed && v.status == IneqStatus::Holds;
      family.push_back(to_json(v));
    }
    out.report["p_equals_n_plus_1"] = std::move(family);
  }
  return out;
}

CommandResult run_fuzz(CampaignConfig& cfg) {
  const std::string theorem = cfg.get_string("theorem", "1");
  const int trials = cfg.get_int("trials", 1000);
  const double margin = cfg.get_real("margin", 1e-3);
  TrialReport r;
  if (theorem == "1") {
    Theorem1Campaign c;
    c.trials = trials;
    c.n = cfg.get_int("n", 8);
    c.p = cfg.get_int("p", 2);
    c.R = cfg.get_real("R", 1.0);
    c.eps_max = cfg.get_real("eps-max", 1.0);
    c.seed = cfg.seed;
    c.generator_margin = margin;
    r = mc_verify_theorem1(c);
  } else if (theorem == "2") {
    Theorem2Campaign c;
    c.trials = trials;
    c.n = cfg.get_int("n", 8);
    c.p = cfg.get_int("p", 2);
    c.R = cfg.get_real("R", 1.0);
    c.seed = cfg.seed;
    c.generator_margin = margin;
    if (c.n >= 1 && c.p >= 2) {
      c.eps_max = cfg.get_real("eps-max", theorem2_eps_max(c.n, c.p));
    }
    r = mc_verify_theorem2(c);
  } else if (theorem == "lemma1") {
    Lemma1Campaign c;
    c.trials = trials;
    c.n = cfg.get_int("n", 6);
    c.R = cfg.get_real("R", 1.0);
    c.eps = cfg.get_real("eps", 1.0);
    c.seed = cfg.seed;
    c.generator_margin = margin;
    r = mc_verify_lemma1(c);
  } else if (theorem == "szego") {
    SzegoCampaign c;
    c.trials = trials;
    c.n = cfg.get_int("n", 8);
    c.r1 = cfg.get_real("r1", cfg.get_real("R", 1.0));
    c.r2 = cfg.get_real("r2", 1.0);
    c.seed = cfg.seed;
    c.generator_margin = margin;
    r = mc_verify_szego(c);
  } else if (theorem == "coincidence") {
    CoincidenceCampaign c;
    c.trials = trials;
    c.n_max = cfg.get_int("n", 10);
    c.R = cfg.get_real("R", 1.0);
    c.seed = cfg.seed;
    c.generator_margin = margin;
    r = mc_verify_coincidence(c);
  } else {
    throw std::invalid_argument("unknown --theorem \"" + theorem + "\"");
  }
  CommandResult out;
  out.report = envelope(cfg);
  out.report["result"] = to_json(r);
  out.passed = r.violations == 0;
  return out;
}

CommandResult run_sharpness(CampaignConfig& cfg) {
  SharpnessConfig c;
  c.n = cfg.get_int("n", 8);
  c.p = cfg.get_int("p", 2);
  c.R = cfg.get_real("R", 1.0);
  c.restarts = cfg.get_int("restarts", 50);
  c.iterations = cfg.get_int("iterations", 200);
  c.seed = cfg.seed;
  const SharpnessReport r = sharpness_search(c);
  CommandResult out;
  out.report = envelope(cfg);
  out.report["result"] = to_json(r);
  out.report["result"]["tolerance"] = format_real(kSharpnessTolerance);
  out.passed = r.best_ratio >= 1.0 - kSharpnessTolerance;
  return out;
}

BinomialPolynomial polynomial_param(CampaignConfig& cfg, const std::string& key) {
  if (!cfg.has(key)) throw std::invalid_argument("missing polynomial --" + key);
  Json j;
  try {
    j = Json::parse(cfg.params.at(key));
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("--" + key + ": " + e.what());
  }
  return polynomial_from_json(j);
}

CommandResult run_roots(CampaignConfig& cfg) {
  const BinomialPolynomial p = polynomial_param(cfg, "poly");
  const RootSet r = all_roots(p);
  CommandResult out;
  out.report = envelope(cfg);
  out.report["effective_degree"] = p.effective_degree();
  out.report["result"] = to_json(r);
  out.passed = r.converged;
  return out;
}

CommandResult run_compose(CampaignConfig& cfg) {
  const BinomialPolynomial h1 = polynomial_param(cfg, "a");
  const BinomialPolynomial h2 = polynomial_param(cfg, "b");
  const std::string basis = cfg.get_string("basis", "binomial");
  if (basis != "binomial" && basis != "power") {
    throw std::invalid_argument("--basis must be binomial or power");
  }
  // A polynomial document with the envelope fields alongside.
  CommandResult out;
  out.report = envelope(cfg);
  const Json poly = polynomial_to_json(
      szego_compose(h1, h2), basis == "power" ? Basis::Power : Basis::Binomial);
  for (const auto& [k, v] : poly.items()) out.report[k] = v;
  return out;
}

}  // namespace

CommandResult run_command(CampaignConfig config) {
  if (config.command == "bound") return run_bound(config);
  if (config.command == "ineq") return run_ineq(config);
  if (config.command == "fuzz") return run_fuzz(config);
  if (config.command == "sharpness") return run_sharpness(config);
  if (config.command == "roots") return run_roots(config);
  if (config.command == "compose") return run_compose(config);
  throw std::invalid_argument("unknown command \"" + config.command + "\"");
}

}  // namespace rubicon
