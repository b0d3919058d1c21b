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

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include <gtest/gtest.h>

namespace rubicon {
namespace {

TEST(FormatReal, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 1e300, 6.02214076e23}) {
    EXPECT_EQ(std::strtod(format_real(v).c_str(), nullptr), v);
  }
  EXPECT_EQ(format_real(INFINITY), "inf");
  EXPECT_EQ(format_real(-INFINITY), "-inf");
  EXPECT_EQ(format_real(NAN), "nan");
}

TEST(PolynomialJson, RoundTrip) {
  const BinomialPolynomial p({Complex(1, 2), Complex(-0.1, 0), Complex(3e-17, 7)});
  for (Basis b : {Basis::Binomial, Basis::Power}) {
    const Json j = polynomial_to_json(p, b);
    EXPECT_EQ(j["n"], 2);
    const BinomialPolynomial q = polynomial_from_json(Json::parse(j.dump()));
    for (int k = 0; k <= 2; ++k) EXPECT_NEAR(std::abs(q.coeff(k) - p.coeff(k)), 0.0, 1e-15);
  }
  EXPECT_EQ(polynomial_from_json(Json::parse(polynomial_to_json(p).dump())), p);
}

TEST(PolynomialJson, AcceptedForms) {
  const auto a = polynomial_from_json(Json::parse(R"({"coeffs": [1, "2", ["0.5", -1]]})"));
  EXPECT_EQ(a.coeffs(), (std::vector<Complex>{1.0, 2.0, Complex(0.5, -1.0)}));
  const auto b = polynomial_from_json(
      Json::parse(R"({"n": 2, "basis": "power", "coeffs": [[1,0],[2,0],[1,0]]})"));
  EXPECT_EQ(b, BinomialPolynomial::one_plus_z(2));
}

TEST(PolynomialJson, Rejections) {
  for (const char* text : {
           R"([1, 2])",
           R"({"coeffs": []})",
           R"({"coeffs": 3})",
           R"({"n": 3, "coeffs": [1, 2]})",
           R"({"coeffs": [1, "x"]})",
           R"({"basis": "chebyshev", "coeffs": [1]})",
           R"({"coeffs": [[1, 2, 3]]})",
       }) {
    EXPECT_THROW(polynomial_from_json(Json::parse(text)), std::invalid_argument) << text;
  }
}

TEST(CampaignConfig, RoundTripAndResolution) {
  CampaignConfig c;
  c.command = "fuzz";
  c.seed = 18446744073709551615ull;
  c.params["n"] = "9";
  EXPECT_EQ(c.get_int("n", 4), 9);
  EXPECT_EQ(c.get_int("p", 3), 3);
  EXPECT_EQ(c.params.at("p"), "3");
  EXPECT_EQ(c.get_real("R", 0.1), 0.1);
  EXPECT_EQ(std::strtod(c.params.at("R").c_str(), nullptr), 0.1);
  EXPECT_EQ(CampaignConfig::from_json(Json::parse(c.to_json().dump())), c);
}

TEST(CampaignConfig, BadValues) {
  CampaignConfig c;
  c.params = {{"n", "9x"}, {"R", "nan"}, {"eps", ""}};
  EXPECT_THROW(c.get_int("n", 1), std::invalid_argument);
  EXPECT_THROW(c.get_real("R", 1), std::invalid_argument);
  EXPECT_THROW(c.get_real("eps", 1), std::invalid_argument);
  EXPECT_THROW(CampaignConfig::from_json(Json::parse(R"({"seed": -1})")),
               std::invalid_argument);
}

TEST(RunCommand, BoundReportsThirdAtTenTwo) {
  CampaignConfig c;
  c.command = "bound";
  c.params = {{"R", "1"}, {"n", "10"}, {"p", "2"}, {"eps-max", "1"}};
  const CommandResult r = run_command(c);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.report["schema_version"], kSchemaVersion);
  EXPECT_EQ(std::strtod(r.report["certificate"]["radius"].get<std::string>().c_str(), nullptr),
            1.0 / 3.0);
  EXPECT_EQ(r.report["certificate"]["applicable"], true);
  EXPECT_TRUE(r.report.contains("theorem2_eps_threshold"));
}

TEST(RunCommand, ConfigIsFullyResolved) {
  CampaignConfig c;
  c.command = "sharpness";
  c.params = {{"restarts", "2"}, {"iterations", "5"}};
  const CommandResult r = run_command(c);
  const CampaignConfig echoed = CampaignConfig::from_json(r.report["config"]);
  for (const char* k : {"n", "p", "R", "restarts", "iterations"}) {
    EXPECT_TRUE(echoed.has(k)) << k;
  }
  // Rerunning the echoed config reproduces the report.
  EXPECT_EQ(run_command(echoed).report.dump(), r.report.dump());
}

TEST(RunCommand, FuzzIsByteIdentical) {
  CampaignConfig c;
  c.command = "fuzz";
  c.seed = 42;
  c.params = {{"theorem", "1"}, {"trials", "100"}, {"n", "8"}, {"p", "2"}, {"R", "1"}};
  const std::string a = run_command(c).report.dump(2);
  setenv("RUBICON_THREADS", "3", 1);
  const std::string b = run_command(c).report.dump(2);
  unsetenv("RUBICON_THREADS");
  EXPECT_EQ(a, b);
}

TEST(RunCommand, IneqPassedSemantics) {
  CampaignConfig c;
  c.command = "ineq";
  c.params = {{"check", "biernacki"}, {"n-max", "20"}};
  EXPECT_TRUE(run_command(c).passed);
  // Equality at p = n+1 makes the strict upper form fail.
  c.params = {{"check", "biernacki-upper"}, {"n-max", "5"}};
  const CommandResult upper = run_command(c);
  EXPECT_FALSE(upper.passed);
  EXPECT_EQ(upper.report["result"]["fails"], 5);
  c.params = {{"check", "counterexample"}, {"q-max", "10"}};
  EXPECT_TRUE(run_command(c).passed);
  c.params = {{"check", "nope"}};
  EXPECT_THROW(run_command(c), std::invalid_argument);
}

TEST(RunCommand, RootsAndCompose) {
  CampaignConfig c;
  c.command = "roots";
  c.params = {{"poly", R"({"basis": "power", "coeffs": [1, 0, 1]})"}};
  const CommandResult r = run_command(c);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.report["result"]["roots"].size(), 2u);

  c.command = "compose";
  c.params = {{"a", R"({"coeffs": [1, 2, 3]})"}, {"b", R"({"coeffs": [4, 5]})"}};
  const CommandResult k = run_command(c);
  // b pads to [4, 2.5, 0] in the binomial basis of degree 2.
  const BinomialPolynomial h = polynomial_from_json(k.report);
  EXPECT_EQ(h.coeffs(), (std::vector<Complex>{4.0, 5.0, 0.0}));
}

TEST(RunCommand, Errors) {
  CampaignConfig c;
  c.command = "frobnicate";
  EXPECT_THROW(run_command(c), std::invalid_argument);
  c.command = "fuzz";
  c.params = {{"theorem", "1"}, {"n", "6"}, {"p", "4"}};
  EXPECT_THROW(run_command(c), std::domain_error);
  c.command = "roots";
  c.params = {{"poly", "{not json"}};
  EXPECT_THROW(run_command(c), std::invalid_argument);
  c.params = {{"poly", R"({"coeffs": [3]})"}};
  EXPECT_THROW(run_command(c), std::domain_error);
}

}  // namespace
}  // namespace rubicon
