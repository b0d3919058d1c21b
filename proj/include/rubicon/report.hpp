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

#ifndef RUBICON_REPORT_HPP_
#define RUBICON_REPORT_HPP_

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "rubicon/bounds.hpp"
#include "rubicon/harness.hpp"
#include "rubicon/inequalities.hpp"
#include "rubicon/poly.hpp"
#include "rubicon/roots.hpp"

namespace rubicon {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// 17 significant digits; "inf"/"-inf"/"nan" for non-finite values.
std::string format_real(double v);

enum class Basis { Binomial, Power };

// {"n": int, "basis": "binomial"|"power", "coeffs": [[re, im], ...]}.
// Coefficients may be JSON numbers or decimal strings. Throws
// std::invalid_argument on malformed input.
BinomialPolynomial polynomial_from_json(const Json& j);
Json polynomial_to_json(const BinomialPolynomial& p, Basis basis = Basis::Binomial);

Json to_json(const BoundCertificate& c);
Json to_json(const RationalInterval& r);
Json to_json(const IneqVerdict& v);
Json to_json(const ScanReport& r);
Json to_json(const CounterexampleReport& r);
Json to_json(const Perturbation& p);
Json to_json(const TrialInstance& t);
Json to_json(const TrialReport& r);
Json to_json(const SharpnessReport& r);
Json to_json(const RootSet& r);

// Parameters of one CLI invocation as a flat string map.
struct CampaignConfig {
  std::string command;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  std::string output;

  bool has(const std::string& key) const { return params.count(key) != 0; }
  // Typed reads; a missing key stores and returns the fallback so the
  // config ends up fully resolved. Throw std::invalid_argument on text that
  // does not parse.
  int get_int(const std::string& key, int fallback);
  double get_real(const std::string& key, double fallback);
  std::string get_string(const std::string& key, const std::string& fallback);

  Json to_json() const;
  static CampaignConfig from_json(const Json& j);
  friend bool operator==(const CampaignConfig&, const CampaignConfig&) = default;
};

struct CommandResult {
  Json report;
  // False when the run found a violation, falsification or undecided check.
  bool passed = true;
};

// Executes "bound", "ineq", "fuzz", "sharpness", "roots" or "compose".
// Polynomial inputs travel as JSON text in params ("poly", "a", "b"). Throws
// std::invalid_argument for an unknown command or bad parameters and
// std::domain_error when a campaign's hypotheses are not met.
CommandResult run_command(CampaignConfig config);

}  // namespace rubicon

#endif  // RUBICON_REPORT_HPP_
