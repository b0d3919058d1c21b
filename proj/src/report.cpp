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

#include "rubicon/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace rubicon {
namespace {

double parse_real(const Json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    char* end = nullptr;
    const double d = std::strtod(s.c_str(), &end);
    if (!s.empty() && end == s.c_str() + s.size()) return d;
  }
  throw std::invalid_argument("expected a number, got " + v.dump());
}

Json complex_json(Complex z) {
  return Json::array({format_real(z.real()), format_real(z.imag())});
}

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

BinomialPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw std::invalid_argument("polynomial JSON needs a \"coeffs\" array");
  }
  std::vector<Complex> c;
  for (const auto& e : j["coeffs"]) {
    if (e.is_array() && e.size() == 2) {
      c.emplace_back(parse_real(e[0]), parse_real(e[1]));
    } else {
      c.emplace_back(parse_real(e), 0.0);  // bare real
    }
  }
  if (c.empty()) throw std::invalid_argument("polynomial JSON has no coefficients");
  if (j.contains("n")) {
    if (!j["n"].is_number_integer() ||
        j["n"].get<long long>() != static_cast<long long>(c.size()) - 1) {
      throw std::invalid_argument("polynomial JSON: n must equal len(coeffs)-1");
    }
  }
  const std::string basis = j.value("basis", std::string("binomial"));
  if (basis == "binomial") return BinomialPolynomial(std::move(c));
  if (basis == "power") return BinomialPolynomial::from_power_basis(c);
  throw std::invalid_argument("polynomial JSON: unknown basis \"" + basis + "\"");
}

Json polynomial_to_json(const BinomialPolynomial& p, Basis basis) {
  const std::vector<Complex> c =
      basis == Basis::Binomial ? p.coeffs() : p.to_power_basis();
  Json coeffs = Json::array();
  // Plain JSON numbers: nlohmann writes the shortest round-trip form.
  for (const Complex& z : c) coeffs.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"n", p.n()},
              {"basis", basis == Basis::Binomial ? "binomial" : "power"},
              {"coeffs", std::move(coeffs)}};
}

Json to_json(const BoundCertificate& c) {
  Json hyps = Json::array();
  for (const auto& h : c.hypotheses) {
    hyps.push_back(Json{{"name", h.name}, {"satisfied", h.satisfied}});
  }
  return Json{{"theorem", to_string(c.kind)},
              {"radius", format_real(c.radius)},
              {"applicable", c.applicable},
              {"hypotheses", std::move(hyps)}};
}

Json to_json(const RationalInterval& r) {
  if (r.lo == r.hi) return Json{{"exact", to_exact_string(r.lo)}};
  return Json{{"lo", to_exact_string(r.lo)},
              {"hi", to_exact_string(r.hi)},
              {"lo_approx", format_real(r.lo.convert_to<double>())},
              {"hi_approx", format_real(r.hi.convert_to<double>())}};
}

Json to_json(const IneqVerdict& v) {
  Json j{{"check", v.check}, {"status", to_string(v.status)}};
  if (v.check.rfind("counterexample", 0) == 0) {
    j["q"] = v.n;
  } else if (v.check != "limit") {
    j["n"] = v.n;
    j["p"] = v.p;
  }
  j["lhs"] = to_json(v.lhs);
  j["rhs"] = to_json(v.rhs);
  if (v.e_squared_terms > 0) j["e_squared_terms"] = v.e_squared_terms;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json to_json(const ScanReport& r) {
  Json witnesses = Json::array();
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) {
    if (v.status != IneqStatus::Holds) {
      witnesses.push_back(Json{{"n", v.n}, {"p", v.p}, {"status", to_string(v.status)}});
    }
    verdicts.push_back(to_json(v));
  }
  return Json{{"check", r.check},
              {"n_max", r.n_max},
              {"total", r.verdicts.size()},
              {"holds", r.holds},
              {"fails", r.fails},
              {"indeterminate", r.indeterminate},
              {"non_holding", std::move(witnesses)},
              {"verdicts", std::move(verdicts)}};
}

Json to_json(const CounterexampleReport& r) {
  auto variant = [](const char* form, const std::vector<IneqVerdict>& vs,
                    const std::optional<int>& first) {
    Json list = Json::array();
    for (const auto& v : vs) list.push_back(to_json(v));
    Json j{{"form", form}};
    if (first) {
      j["first_failure_q"] = *first;
      j["first_failure_n"] = *first + 2;
    } else {
      j["first_failure_q"] = nullptr;
      j["summary"] = "holds up to q_max";
    }
    j["verdicts"] = std::move(list);
    return j;
  };
  return Json{
      {"q_max", r.q_max},
      {"variant_a", variant("C(q+2,q-1) (q+2)^(q-3) < q^(q+2)", r.variant_a,
                            r.first_failure_a)},
      {"variant_b", variant("C(n,3)/n^3 < (1-2/n)^n, n=q+2 (equivalently C(q+2,3) (q+2)^(q-1) < q^(q+2))",
                            r.variant_b, r.first_failure_b)},
      {"e_squared", to_json(r.e_squared)},
      {"e_squared_width", format_real(r.e_squared.width().convert_to<double>())},
      {"limit", to_json(r.limit)}};
}

Json to_json(const Perturbation& p) {
  Json eps = Json::array();
  for (int k = p.first(); k <= p.n; ++k) {
    eps.push_back(Json{{"k", k}, {"eps", complex_json(p.at(k))}});
  }
  return Json{{"n", p.n}, {"p", p.p}, {"eps_max", format_real(p.eps_max)},
              {"eps", std::move(eps)}};
}

Json to_json(const TrialInstance& t) {
  Json j{{"trial", t.trial},
         {"trial_seed", t.trial_seed},
         {"ratio", format_real(t.ratio)},
         {"min_modulus", format_real(t.min_modulus)},
         {"claimed_radius", format_real(t.claimed_radius)},
         {"base", polynomial_to_json(t.base)}};
  if (t.second_factor) j["second_factor"] = polynomial_to_json(*t.second_factor);
  if (t.perturbation) j["perturbation"] = to_json(*t.perturbation);
  if (t.evaluation_point) j["evaluation_point"] = complex_json(*t.evaluation_point);
  j["tested"] = polynomial_to_json(t.tested);
  return j;
}

Json to_json(const TrialReport& r) {
  Json j{{"campaign", r.campaign},
         {"seed", r.seed},
         {"trials", r.trials},
         {"violations", r.violations},
         {"rechecked", r.rechecked},
         {"nonconverged", r.nonconverged},
         {"degree_drops", r.degree_drops},
         {"slack", format_real(kViolationSlack)},
         {"min_ratio", format_real(r.min_ratio)}};
  j["worst_case"] = r.worst_case ? to_json(*r.worst_case) : Json(nullptr);
  j["first_violation"] = r.first_violation ? to_json(*r.first_violation) : Json(nullptr);
  return j;
}

Json to_json(const SharpnessReport& r) {
  Json ratios = Json::array();
  for (double v : r.restart_ratios) ratios.push_back(format_real(v));
  return Json{{"best_ratio", format_real(r.best_ratio)},
              {"best_restart", r.best_restart},
              {"iterations", r.iterations},
              {"evaluations", r.evaluations},
              {"seed", r.seed},
              {"best_perturbation", to_json(r.best_perturbation)},
              {"best_polynomial", polynomial_to_json(r.best_polynomial)},
              {"restart_ratios", std::move(ratios)}};
}

Json to_json(const RootSet& r) {
  Json roots = Json::array();
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    roots.push_back(Json{{"index", i},
                         {"re", format_real(r.roots[i].real())},
                         {"im", format_real(r.roots[i].imag())},
                         {"modulus", format_real(std::abs(r.roots[i]))},
                         {"residual", format_real(r.residuals[i])}});
  }
  return Json{{"converged", r.converged},
              {"iterations", r.iterations},
              {"min_modulus", r.roots.empty() ? Json(nullptr)
                                              : Json(format_real(min_modulus(r)))},
              {"roots", std::move(roots)}};
}

int CampaignConfig::get_int(const std::string& key, int fallback) {
  auto it = params.find(key);
  if (it == params.end()) {
    params[key] = std::to_string(fallback);
    return fallback;
  }
  const std::string& s = it->second;
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("--" + key + ": expected an integer, got \"" + s + "\"");
  }
  return v;
}

double CampaignConfig::get_real(const std::string& key, double fallback) {
  auto it = params.find(key);
  if (it == params.end()) {
    params[key] = format_real(fallback);
    return fallback;
  }
  const std::string& s = it->second;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("--" + key + ": expected a real number, got \"" + s + "\"");
  }
  return v;
}

std::string CampaignConfig::get_string(const std::string& key,
                                       const std::string& fallback) {
  auto it = params.find(key);
  if (it == params.end()) {
    params[key] = fallback;
    return fallback;
  }
  return it->second;
}

Json CampaignConfig::to_json() const {
  Json p = Json::object();
  for (const auto& [k, v] : params) p[k] = v;
  return Json{{"command", command}, {"seed", seed}, {"output", output},
              {"params", std::move(p)}};
}

CampaignConfig CampaignConfig::from_json(const Json& j) {
  CampaignConfig c;
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  c.command = j.value("command", std::string());
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) {
      throw std::invalid_argument("config seed must be a non-negative integer");
    }
    c.seed = j["seed"].get<std::uint64_t>();
  }
  c.output = j.value("output", std::string());
  if (j.contains("params")) {
    for (const auto& [k, v] : j["params"].items()) {
      if (v.is_string()) {
        c.params[k] = v.get<std::string>();
      } else {
        c.params[k] = v.dump();
      }
    }
  }
  return c;
}

}  // namespace rubicon
